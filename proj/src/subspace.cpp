#include "omegalie/subspace.hpp"

#include <string>

#include "omegalie/errors.hpp"

namespace omegalie {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw AmbientMismatch(std::string(op) + ": ambient dimensions " +
                          std::to_string(a.ambient_dim()) + " and " +
                          std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  auto [reduced, pivots] = rref(Matrix::from_rows(ambient_dim, vectors));
  Subspace s(ambient_dim);
  s.pivot_cols_ = std::move(pivots);
  for (std::size_t r = 0; r < s.pivot_cols_.size(); ++r) {
    auto row = reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) {
    s.basis_.push_back(unit_vector(ambient_dim, k));
    s.pivot_cols_.push_back(k);
  }
  return s;
}

Vector Subspace::residual(std::span<const GaussianRational> v) const {
  if (v.size() != ambient_dim_) {
    throw AmbientMismatch("vector of length " + std::to_string(v.size()) +
                          " tested against subspace of " + std::to_string(ambient_dim_));
  }
  Vector r(v.begin(), v.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const GaussianRational coeff = r[pivot_cols_[k]];
    if (coeff.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (!basis_[k][c].is_zero()) r[c] -= coeff * basis_[k][c];
    }
  }
  return r;
}

bool Subspace::contains(std::span<const GaussianRational> v) const {
  return omegalie::is_zero(residual(v));
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "containment");
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<Vector> vectors;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace annihilator(const Subspace& a) { return kernel(a.basis_matrix()); }

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersection");
  // a ∩ b is cut out by the stacked constraints of both spaces.
  Matrix constraints = annihilator(a).basis_matrix();
  const Subspace b_constraints = annihilator(b);
  for (const auto& row : b_constraints.basis()) constraints.append_row(row);
  return kernel(constraints);
}

bool subspace_contains(const Subspace& a, std::span<const GaussianRational> v) {
  return a.contains(v);
}

Subspace subspace_project(const Subspace& a, std::span<const std::size_t> coords) {
  for (auto c : coords) {
    if (c >= a.ambient_dim()) {
      throw AmbientMismatch("projection coordinate " + std::to_string(c) +
                            " outside ambient dimension " + std::to_string(a.ambient_dim()));
    }
  }
  std::vector<Vector> rows;
  rows.reserve(a.dim());
  for (const auto& v : a.basis()) {
    Vector r;
    r.reserve(coords.size());
    for (auto c : coords) r.push_back(v[c]);
    rows.push_back(std::move(r));
  }
  return Subspace::span(coords.size(), rows);
}

}  // namespace omegalie
