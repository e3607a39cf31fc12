#include "omegalie/superalgebra.hpp"

#include <algorithm>
#include <string>

#include "omegalie/errors.hpp"

namespace omegalie {

namespace {

GaussianRational signed_unit(int sign) { return GaussianRational(sign); }

void axpy(Vector& y, const GaussianRational& alpha, std::span<const GaussianRational> x) {
  if (alpha.is_zero()) return;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (!x[k].is_zero()) y[k] += alpha * x[k];
  }
}

}  // namespace

OmegaSuperAlgebra::OmegaSuperAlgebra(std::string name, std::vector<std::string> basis_names,
                                     std::vector<Parity> degrees,
                                     std::vector<GaussianRational> structure, Matrix omega)
    : name_(std::move(name)),
      names_(std::move(basis_names)),
      degrees_(std::move(degrees)),
      structure_(std::move(structure)),
      omega_(std::move(omega)) {
  const std::size_t n = degrees_.size();
  if (names_.size() != n || structure_.size() != n * n * n || omega_.rows() != n ||
      omega_.cols() != n) {
    throw SchemaError("algebra '" + name_ + "': inconsistent basis, structure or form sizes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int s = koszul_sign(degrees_[i], degrees_[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& cijk = c(i, j, k);
        if (!cijk.is_zero() && degrees_[k] != degrees_[i] + degrees_[j]) {
          throw GradingError("[" + names_[i] + ", " + names_[j] + "] has a component along " +
                             names_[k] + " of the wrong degree");
        }
        if (c(j, i, k) != -(signed_unit(s) * cijk)) {
          throw SkewError("[" + names_[i] + ", " + names_[j] + "] and [" + names_[j] + ", " +
                          names_[i] + "] are not graded skew-symmetric");
        }
      }
      if (degrees_[i] != degrees_[j] && !omega_(i, j).is_zero()) {
        throw GradingError("omega(" + names_[i] + ", " + names_[j] +
                           ") pairs elements of different degrees");
      }
    }
  }
}

std::size_t OmegaSuperAlgebra::dim_even() const {
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), Parity::even));
}

std::optional<std::size_t> OmegaSuperAlgebra::index_of(std::string_view basis_name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == basis_name) return i;
  }
  return std::nullopt;
}

Vector OmegaSuperAlgebra::bracket_of_basis(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  auto first = structure_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n);
  return Vector(first, first + static_cast<std::ptrdiff_t>(n));
}

AlgebraBuilder::AlgebraBuilder(std::string name, std::vector<std::string> even_basis,
                               std::vector<std::string> odd_basis)
    : name_(std::move(name)) {
  for (auto& b : even_basis) {
    names_.push_back(std::move(b));
    degrees_.push_back(Parity::even);
  }
  for (auto& b : odd_basis) {
    names_.push_back(std::move(b));
    degrees_.push_back(Parity::odd);
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw SchemaError("duplicate basis name '" + names_[i] + "'");
    }
  }
  brackets_.resize(dim() * dim());
  omega_ = Matrix(dim(), dim());
}

std::size_t AlgebraBuilder::index(std::string_view basis_name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == basis_name) return i;
  }
  throw SchemaError("unknown basis element '" + std::string(basis_name) + "'");
}

AlgebraBuilder& AlgebraBuilder::bracket(std::size_t i, std::size_t j, const Vector& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || value.size() != n) throw SchemaError("bracket index out of range");
  for (std::size_t k = 0; k < n; ++k) {
    if (!value[k].is_zero() && degrees_[k] != degrees_[i] + degrees_[j]) {
      throw GradingError("[" + names_[i] + ", " + names_[j] + "] has a component along " +
                         names_[k] + " of the wrong degree");
    }
  }
  Vector mirrored(n);
  const GaussianRational s = -signed_unit(koszul_sign(degrees_[i], degrees_[j]));
  for (std::size_t k = 0; k < n; ++k) mirrored[k] = s * value[k];
  if (i == j && mirrored != value) {
    throw SkewError("[" + names_[i] + ", " + names_[i] + "] must vanish for an even element");
  }
  auto assign = [&](std::size_t a, std::size_t b, const Vector& v) {
    auto& slot = brackets_[a * n + b];
    if (slot && *slot != v) {
      throw SkewError("[" + names_[a] + ", " + names_[b] +
                      "] contradicts an entry implied by graded skew-symmetry");
    }
    slot = v;
  };
  assign(i, j, value);
  assign(j, i, mirrored);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::bracket(
    std::string_view left, std::string_view right,
    const std::vector<std::pair<GaussianRational, std::string>>& value) {
  Vector v(dim());
  for (const auto& [coeff, basis_name] : value) v[index(basis_name)] += coeff;
  return bracket(index(left), index(right), v);
}

AlgebraBuilder& AlgebraBuilder::omega(std::size_t i, std::size_t j, const GaussianRational& value) {
  if (i >= dim() || j >= dim()) throw SchemaError("omega index out of range");
  if (degrees_[i] != degrees_[j] && !value.is_zero()) {
    throw GradingError("omega(" + names_[i] + ", " + names_[j] +
                       ") pairs elements of different degrees");
  }
  omega_(i, j) = value;
  return *this;
}

AlgebraBuilder& AlgebraBuilder::omega(std::string_view left, std::string_view right,
                                      const GaussianRational& value) {
  return omega(index(left), index(right), value);
}

OmegaSuperAlgebra AlgebraBuilder::build() const {
  const std::size_t n = dim();
  std::vector<GaussianRational> structure(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& slot = brackets_[i * n + j];
      if (!slot) continue;
      std::copy(slot->begin(), slot->end(),
                structure.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
    }
  }
  return OmegaSuperAlgebra(name_, names_, degrees_, std::move(structure), omega_);
}

Vector bracket_eval(const OmegaSuperAlgebra& a, std::span<const GaussianRational> u,
                    std::span<const GaussianRational> v) {
  const std::size_t n = a.dim();
  if (u.size() != n || v.size() != n) throw AmbientMismatch("bracket_eval: vector size mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const GaussianRational uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        const auto& cijk = a.c(i, j, k);
        if (!cijk.is_zero()) out[k] += uv * cijk;
      }
    }
  }
  return out;
}

GaussianRational omega_eval(const OmegaSuperAlgebra& a, std::span<const GaussianRational> u,
                            std::span<const GaussianRational> v) {
  const std::size_t n = a.dim();
  if (u.size() != n || v.size() != n) throw AmbientMismatch("omega_eval: vector size mismatch");
  GaussianRational total;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& w = a.omega()(i, j);
      if (!w.is_zero() && !v[j].is_zero()) total += u[i] * w * v[j];
    }
  }
  return total;
}

JacobiSides jacobi_sides(const OmegaSuperAlgebra& a, std::size_t i, std::size_t j,
                         std::size_t k) {
  const std::size_t n = a.dim();
  const Vector x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
  const Parity dx = a.degree(i), dy = a.degree(j), dz = a.degree(k);
  const GaussianRational sxy = koszul_sign(dx, dy), syz = koszul_sign(dy, dz),
                         sxz = koszul_sign(dx, dz);

  JacobiSides sides{Vector(n), Vector(n)};
  axpy(sides.bracket_side, sxy, bracket_eval(a, bracket_eval(a, y, z), x));
  axpy(sides.bracket_side, syz, bracket_eval(a, bracket_eval(a, z, x), y));
  axpy(sides.bracket_side, sxz, bracket_eval(a, bracket_eval(a, x, y), z));

  axpy(sides.form_side, sxy * a.omega()(j, k), x);
  axpy(sides.form_side, syz * a.omega()(k, i), y);
  axpy(sides.form_side, sxz * a.omega()(i, j), z);
  return sides;
}

AxiomReport validate(const OmegaSuperAlgebra& a) {
  const std::size_t n = a.dim();
  AxiomReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const GaussianRational s = koszul_sign(a.degree(i), a.degree(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (!a.c(i, j, k).is_zero() && a.degree(k) != a.degree(i) + a.degree(j)) {
          report.closure_ok = false;
        }
        if (a.c(j, i, k) != -(s * a.c(i, j, k))) report.skew_ok = false;
      }
      if (a.degree(i) != a.degree(j) && !a.omega()(i, j).is_zero()) {
        report.mixed_omega_ok = false;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto [lhs, rhs] = jacobi_sides(a, i, j, k);
        if (lhs != rhs) {
          for (std::size_t m = 0; m < n; ++m) lhs[m] -= rhs[m];
          report.jacobi_failures.push_back({i, j, k, std::move(lhs)});
        }
      }
    }
  }
  report.jacobi_ok = report.jacobi_failures.empty();
  return report;
}

std::vector<std::size_t> coordinates_of_degree(const OmegaSuperAlgebra& a, Parity p) {
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.degree(i) == p) coords.push_back(i);
  }
  return coords;
}

GradedSubspace split_by_degree(const OmegaSuperAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw AmbientMismatch("split_by_degree: ambient mismatch");
  std::vector<Vector> even, odd;
  for (const auto& v : s.basis()) {
    Vector e(v.size()), o(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      (a.degree(k) == Parity::even ? e : o)[k] = v[k];
    }
    if (!is_zero(e)) even.push_back(std::move(e));
    if (!is_zero(o)) odd.push_back(std::move(o));
  }
  return {Subspace::span(a.dim(), even), Subspace::span(a.dim(), odd)};
}

GradedSubspace center(const OmegaSuperAlgebra& a) {
  const std::size_t n = a.dim();
  // Unknown z = sum_i z_i b_i; one row per component k of [z, b_j].
  Matrix system(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) system(j * n + k, i) = a.c(i, j, k);
  return split_by_degree(a, kernel(system));
}

GradedSubspace derived_subalgebra(const OmegaSuperAlgebra& a) {
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) brackets.push_back(a.bracket_of_basis(i, j));
  return split_by_degree(a, Subspace::span(a.dim(), brackets));
}

GradedSubspace graded_complement(const OmegaSuperAlgebra& a, const GradedSubspace& s) {
  const Subspace total = s.total();
  std::vector<bool> is_pivot(a.dim(), false);
  for (auto p : total.pivot_cols()) is_pivot[p] = true;
  std::vector<Vector> even, odd;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (is_pivot[k]) continue;
    (a.degree(k) == Parity::even ? even : odd).push_back(unit_vector(a.dim(), k));
  }
  return {Subspace::span(a.dim(), even), Subspace::span(a.dim(), odd)};
}

}  // namespace omegalie
