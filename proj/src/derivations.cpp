#include "omegalie/derivations.hpp"

#include <numeric>
#include <string>

#include "omegalie/errors.hpp"

namespace omegalie {

bool is_homogeneous(const OmegaSuperAlgebra& a, const GradedMap& d) {
  const std::size_t n = a.dim();
  if (d.matrix.rows() != n || d.matrix.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.degree(i) != a.degree(j) + d.degree && !d.matrix(i, j).is_zero()) return false;
  return true;
}

GradedMap super_commutator(const GradedMap& d, const GradedMap& e) {
  const GaussianRational s = koszul_sign(d.degree, e.degree);
  return {d.degree + e.degree, d.matrix * e.matrix - s * (e.matrix * d.matrix)};
}

CoordinateLayout::CoordinateLayout(const std::vector<Parity>& basis_degrees, Parity degree)
    : n_(basis_degrees.size()), degree_(degree), lookup_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (basis_degrees[i] == basis_degrees[j] + degree) {
        lookup_[i * n_ + j] = entries_.size();
        entries_.emplace_back(i, j);
      }
    }
  }
}

std::optional<std::size_t> CoordinateLayout::index(std::size_t i, std::size_t j) const {
  return lookup_[i * n_ + j];
}

GradedMap CoordinateLayout::to_map(std::span<const GaussianRational> coords) const {
  if (coords.size() != entries_.size()) throw AmbientMismatch("coordinate vector size mismatch");
  GradedMap d = GradedMap::zero(n_, degree_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    d.matrix(entries_[k].first, entries_[k].second) = coords[k];
  }
  return d;
}

Vector CoordinateLayout::to_coords(const GradedMap& d) const {
  if (d.matrix.rows() != n_ || d.matrix.cols() != n_) {
    throw AmbientMismatch("map of size " + std::to_string(d.matrix.rows()) +
                          " against layout of size " + std::to_string(n_));
  }
  if (d.degree != degree_) throw NotMember("map has the wrong degree for this space");
  Vector coords(entries_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& x = d.matrix(i, j);
      if (x.is_zero()) continue;
      auto k = index(i, j);
      if (!k) throw NotMember("map is not homogeneous of its declared degree");
      coords[*k] = x;
    }
  }
  return coords;
}

std::string_view to_string(MapKind k) {
  switch (k) {
    case MapKind::der: return "der";
    case MapKind::gder: return "gder";
    case MapKind::qder: return "qder";
    case MapKind::cent: return "cent";
    case MapKind::qcent: return "qcent";
    case MapKind::zder: return "zder";
  }
  return "?";
}

std::optional<MapKind> parse_map_kind(std::string_view s) {
  for (auto k : {MapKind::der, MapKind::gder, MapKind::qder, MapKind::cent, MapKind::qcent,
                 MapKind::zder}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::size_t unknown_blocks(MapKind k) {
  switch (k) {
    case MapKind::gder: return 3;
    case MapKind::qder: return 2;
    default: return 1;
  }
}

namespace {

/// Builds the linear constraints of an identity over `blocks` stacked copies
/// of the layout coordinates. Each basis pair contributes n component rows.
class IdentitySystem {
 public:
  IdentitySystem(const OmegaSuperAlgebra& a, const CoordinateLayout& layout, std::size_t blocks)
      : a_(a), layout_(layout), width_(blocks * layout.size()), rows_(0, width_) {}

  void begin_pair(std::size_t i, std::size_t j) {
    i_ = i;
    j_ = j;
    pending_ = Matrix(a_.dim(), width_);
  }

  /// s * [block(b_i), b_j]
  void left(std::size_t block, const GaussianRational& s) {
    const std::size_t n = a_.dim();
    for (std::size_t k = 0; k < n; ++k) {
      auto coord = layout_.index(k, i_);
      if (!coord) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const auto& c = a_.c(k, j_, l);
        if (!c.is_zero()) pending_(l, offset(block) + *coord) += s * c;
      }
    }
  }

  /// s * [b_i, block(b_j)]
  void right(std::size_t block, const GaussianRational& s) {
    const std::size_t n = a_.dim();
    for (std::size_t k = 0; k < n; ++k) {
      auto coord = layout_.index(k, j_);
      if (!coord) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const auto& c = a_.c(i_, k, l);
        if (!c.is_zero()) pending_(l, offset(block) + *coord) += s * c;
      }
    }
  }

  /// s * block([b_i, b_j])
  void apply(std::size_t block, const GaussianRational& s) {
    const std::size_t n = a_.dim();
    for (std::size_t k = 0; k < n; ++k) {
      const auto& c = a_.c(i_, j_, k);
      if (c.is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        auto coord = layout_.index(l, k);
        if (coord) pending_(l, offset(block) + *coord) += s * c;
      }
    }
  }

  void commit() {
    for (std::size_t r = 0; r < pending_.rows(); ++r) {
      if (!is_zero(pending_.row(r))) rows_.append_row(pending_.row(r));
    }
  }

  /// omega(block(b_i), b_j) + eps * omega(b_i, block(b_j)) = 0 for all pairs.
  void add_compatibility(std::size_t block) {
    const std::size_t n = a_.dim();
    const auto& w = a_.omega();
    for (std::size_t i = 0; i < n; ++i) {
      const GaussianRational eps = koszul_sign(layout_.degree(), a_.degree(i));
      for (std::size_t j = 0; j < n; ++j) {
        Vector row(width_);
        for (std::size_t k = 0; k < n; ++k) {
          if (auto c = layout_.index(k, i); c && !w(k, j).is_zero()) {
            row[offset(block) + *c] += w(k, j);
          }
          if (auto c = layout_.index(k, j); c && !w(i, k).is_zero()) {
            row[offset(block) + *c] += eps * w(i, k);
          }
        }
        if (!is_zero(row)) rows_.append_row(row);
      }
    }
  }

  Matrix take() { return std::move(rows_); }

 private:
  std::size_t offset(std::size_t block) const { return block * layout_.size(); }

  const OmegaSuperAlgebra& a_;
  const CoordinateLayout& layout_;
  std::size_t width_;
  Matrix rows_;
  Matrix pending_;
  std::size_t i_ = 0, j_ = 0;
};

Matrix identity_system(const OmegaSuperAlgebra& a, const CoordinateLayout& layout, MapKind kind) {
  const std::size_t n = a.dim();
  IdentitySystem sys(a, layout, unknown_blocks(kind));
  const GaussianRational one(1), minus_one(-1);
  for (std::size_t i = 0; i < n; ++i) {
    const GaussianRational eps = koszul_sign(layout.degree(), a.degree(i));
    for (std::size_t j = 0; j < n; ++j) {
      sys.begin_pair(i, j);
      switch (kind) {
        case MapKind::der:
          sys.apply(0, one);
          sys.left(0, minus_one);
          sys.right(0, -eps);
          break;
        case MapKind::gder:
          sys.apply(2, one);
          sys.left(0, minus_one);
          sys.right(1, -eps);
          break;
        case MapKind::qder:
          sys.apply(1, one);
          sys.left(0, minus_one);
          sys.right(0, -eps);
          break;
        case MapKind::qcent:
          sys.left(0, one);
          sys.right(0, -eps);
          break;
        case MapKind::cent:
          sys.left(0, one);
          sys.right(0, -eps);
          sys.commit();
          sys.begin_pair(i, j);
          sys.apply(0, one);
          sys.left(0, minus_one);
          break;
        case MapKind::zder:
          sys.left(0, one);
          sys.commit();
          sys.begin_pair(i, j);
          sys.apply(0, one);
          break;
      }
      sys.commit();
    }
  }
  return sys.take();
}

std::vector<std::size_t> block_coords(std::size_t block, std::size_t size) {
  std::vector<std::size_t> coords(size);
  std::iota(coords.begin(), coords.end(), block * size);
  return coords;
}

}  // namespace

Subspace compatibility_space(const OmegaSuperAlgebra& a, Parity degree) {
  const CoordinateLayout layout(a.degrees(), degree);
  IdentitySystem sys(a, layout, 1);
  sys.add_compatibility(0);
  return kernel(sys.take());
}

MapSpace solve_space(const OmegaSuperAlgebra& a, MapKind kind, Parity degree, bool compatible,
                     SolveOptions options) {
  MapSpace space;
  space.kind = kind;
  space.degree = degree;
  space.compatible = compatible;
  space.strict_witnesses = compatible && options.strict_witnesses;
  space.layout = CoordinateLayout(a.degrees(), degree);

  const std::size_t blocks = unknown_blocks(kind);
  const std::size_t m = space.layout.size();
  Matrix system = identity_system(a, space.layout, kind);

  if (blocks == 1) {
    space.basis = kernel(system);
    if (compatible) space.basis = subspace_intersect(space.basis, compatibility_space(a, degree));
    return space;
  }

  if (compatible) {
    IdentitySystem extra(a, space.layout, blocks);
    extra.add_compatibility(0);
    if (space.strict_witnesses) {
      for (std::size_t b = 1; b < blocks; ++b) extra.add_compatibility(b);
    }
    const Matrix rows = extra.take();
    for (std::size_t r = 0; r < rows.rows(); ++r) system.append_row(rows.row(r));
  }
  space.joint_system = system;
  space.joint_basis = kernel(system);
  space.basis = subspace_project(*space.joint_basis, block_coords(0, m));
  return space;
}

std::vector<GradedMap> MapSpace::elements() const {
  std::vector<GradedMap> out;
  out.reserve(basis.dim());
  for (const auto& v : basis.basis()) out.push_back(layout.to_map(v));
  return out;
}

bool MapSpace::contains(const GradedMap& d) const {
  if (d.degree != degree) return false;
  try {
    return basis.contains(layout.to_coords(d));
  } catch (const NotMember&) {
    return false;
  }
}

namespace {

/// Splits the joint system into d columns and witness columns.
std::pair<Matrix, Matrix> split_joint(const MapSpace& space) {
  const std::size_t m = space.layout.size();
  const Matrix& c = space.joint_system;
  const std::size_t w = c.cols() - m;
  Matrix d_part(c.rows(), m), w_part(c.rows(), w);
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t k = 0; k < m; ++k) d_part(r, k) = c(r, k);
    for (std::size_t k = 0; k < w; ++k) w_part(r, k) = c(r, m + k);
  }
  return {std::move(d_part), std::move(w_part)};
}

Witness witness_from(const MapSpace& space, const GradedMap& d, std::span<const GaussianRational> y) {
  const std::size_t m = space.layout.size();
  if (space.kind == MapKind::qder) {
    return {d, space.layout.to_map(y.subspan(0, m))};
  }
  return {space.layout.to_map(y.subspan(0, m)), space.layout.to_map(y.subspan(m, m))};
}

void require_witness_space(const MapSpace& space) {
  if (!space.joint_basis) {
    throw std::invalid_argument("witnesses exist only for generalized and quasi-derivation spaces");
  }
}

}  // namespace

Witness gder_witness(const MapSpace& space, const GradedMap& d) {
  require_witness_space(space);
  const Vector x = space.layout.to_coords(d);
  if (!space.basis.contains(x)) throw NotMember("map is not an element of this space");

  auto [d_part, w_part] = split_joint(space);
  const Vector dx = d_part.apply(x);
  Matrix augmented(w_part.rows(), w_part.cols() + 1);
  for (std::size_t r = 0; r < w_part.rows(); ++r) {
    for (std::size_t k = 0; k < w_part.cols(); ++k) augmented(r, k) = w_part(r, k);
    augmented(r, w_part.cols()) = -dx[r];
  }
  const auto [reduced, pivots] = rref(std::move(augmented));
  Vector y(w_part.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == w_part.cols()) throw NotMember("witness system is inconsistent");
    y[pivots[r]] = reduced(r, w_part.cols());
  }
  return witness_from(space, d, y);
}

std::vector<Witness> witness_freedom(const MapSpace& space) {
  require_witness_space(space);
  const Subspace free = kernel(split_joint(space).second);
  const GradedMap zero = GradedMap::zero(space.layout.n(), space.degree);
  std::vector<Witness> out;
  for (const auto& y : free.basis()) out.push_back(witness_from(space, zero, y));
  return out;
}

std::optional<Violation> find_violation(const OmegaSuperAlgebra& a, MapKind kind,
                                        const GradedMap& d, const Witness* witness) {
  const std::size_t n = a.dim();
  if ((kind == MapKind::gder || kind == MapKind::qder) && witness == nullptr) {
    throw std::invalid_argument("generalized and quasi-derivation checks need a witness");
  }
  auto sub = [](Vector& acc, const Vector& v, const GaussianRational& s) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] -= s * v[k];
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = unit_vector(n, i);
    const GaussianRational eps = koszul_sign(d.degree, a.degree(i));
    for (std::size_t j = 0; j < n; ++j) {
      const Vector y = unit_vector(n, j);
      const Vector xy = a.bracket_of_basis(i, j);
      const Vector dx_y = bracket_eval(a, d.matrix.column(i), y);
      const Vector x_dy = bracket_eval(a, x, d.matrix.column(j));
      Vector residual;
      switch (kind) {
        case MapKind::der:
          residual = d.matrix.apply(xy);
          sub(residual, dx_y, 1);
          sub(residual, x_dy, eps);
          break;
        case MapKind::gder:
          residual = witness->d_double_prime.matrix.apply(xy);
          sub(residual, dx_y, 1);
          sub(residual, bracket_eval(a, x, witness->d_prime.matrix.column(j)), eps);
          break;
        case MapKind::qder:
          residual = witness->d_double_prime.matrix.apply(xy);
          sub(residual, dx_y, 1);
          sub(residual, x_dy, eps);
          break;
        case MapKind::qcent:
          residual = dx_y;
          sub(residual, x_dy, eps);
          break;
        case MapKind::cent: {
          residual = dx_y;
          sub(residual, x_dy, eps);
          Vector second = d.matrix.apply(xy);
          sub(second, dx_y, 1);
          residual.insert(residual.end(), second.begin(), second.end());
          break;
        }
        case MapKind::zder: {
          residual = dx_y;
          const Vector second = d.matrix.apply(xy);
          residual.insert(residual.end(), second.begin(), second.end());
          break;
        }
      }
      if (!is_zero(residual)) return Violation{i, j, std::move(residual)};
    }
  }
  return std::nullopt;
}

std::optional<Violation> find_compatibility_violation(const OmegaSuperAlgebra& a,
                                                      const GradedMap& d) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const GaussianRational eps = koszul_sign(d.degree, a.degree(i));
    for (std::size_t j = 0; j < n; ++j) {
      const GaussianRational value =
          omega_eval(a, d.matrix.column(i), unit_vector(n, j)) +
          eps * omega_eval(a, unit_vector(n, i), d.matrix.column(j));
      if (!value.is_zero()) return Violation{i, j, Vector{value}};
    }
  }
  return std::nullopt;
}

}  // namespace omegalie
