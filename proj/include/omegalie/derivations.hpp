#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "omegalie/matrix.hpp"
#include "omegalie/subspace.hpp"
#include "omegalie/superalgebra.hpp"

namespace omegalie {

/// Homogeneous linear endomorphism. Column j of `matrix` is the image of b_j.
struct GradedMap {
  Parity degree = Parity::even;
  Matrix matrix;

  static GradedMap zero(std::size_t n, Parity degree) { return {degree, Matrix(n, n)}; }
  static GradedMap identity(std::size_t n) { return {Parity::even, Matrix::identity(n)}; }
  friend bool operator==(const GradedMap&, const GradedMap&) = default;
};

/// True when the matrix only has entries in the coordinates allowed by its
/// degree for the given basis grading.
bool is_homogeneous(const OmegaSuperAlgebra& a, const GradedMap& d);

/// [d, e] = d e - (-1)^{|d||e|} e d
GradedMap super_commutator(const GradedMap& d, const GradedMap& e);

/// Enumerates the matrix entries (row i, column j) a map of the given degree
/// may occupy: deg(b_i) = deg(b_j) + degree. Entries are row-major.
class CoordinateLayout {
 public:
  CoordinateLayout() = default;
  CoordinateLayout(const std::vector<Parity>& basis_degrees, Parity degree);

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t n() const noexcept { return n_; }
  Parity degree() const noexcept { return degree_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& entries() const noexcept {
    return entries_;
  }
  /// Coordinate of matrix entry (i, j), or nullopt when it is structurally zero.
  std::optional<std::size_t> index(std::size_t i, std::size_t j) const;

  GradedMap to_map(std::span<const GaussianRational> coords) const;
  /// Throws NotMember if d has the wrong degree or nonzero inadmissible entries.
  Vector to_coords(const GradedMap& d) const;

  friend bool operator==(const CoordinateLayout&, const CoordinateLayout&) = default;

 private:
  std::size_t n_ = 0;
  Parity degree_ = Parity::even;
  std::vector<std::pair<std::size_t, std::size_t>> entries_;
  std::vector<std::optional<std::size_t>> lookup_;
};

enum class MapKind { der, gder, qder, cent, qcent, zder };

std::string_view to_string(MapKind k);
std::optional<MapKind> parse_map_kind(std::string_view s);
/// Number of stacked unknown maps: 3 for GDer (d, d', d''), 2 for QDer (d, d').
std::size_t unknown_blocks(MapKind k);

struct SolveOptions {
  /// Also require the witnesses d', d'' to be compatible. Off by default: the
  /// compatible variants constrain d alone.
  bool strict_witnesses = false;
};

/// Solution space of one defining identity in one degree.
struct MapSpace {
  MapKind kind = MapKind::der;
  Parity degree = Parity::even;
  bool compatible = false;
  bool strict_witnesses = false;
  CoordinateLayout layout;
  /// Over layout coordinates.
  Subspace basis;
  /// For GDer/QDer: kernel over the stacked (d, d', d'') or (d, d') coordinates.
  std::optional<Subspace> joint_basis;
  /// For GDer/QDer: the joint constraint matrix whose kernel is joint_basis.
  Matrix joint_system;

  std::size_t dim() const { return basis.dim(); }
  std::vector<GradedMap> elements() const;
  bool contains(const GradedMap& d) const;
};

/// Maps of the given degree satisfying
///   omega(d(x), y) + (-1)^{|d||x|} omega(x, d(y)) = 0
/// on all basis pairs, over layout coordinates.
Subspace compatibility_space(const OmegaSuperAlgebra& a, Parity degree);

MapSpace solve_space(const OmegaSuperAlgebra& a, MapKind kind, Parity degree, bool compatible,
                     SolveOptions options = {});

/// Witness maps for an element of a GDer or QDer space. For GDer the identity
/// is d''([x,y]) = [d(x),y] + (-1)^{|d||x|}[x,d'(y)]; for QDer the pair is
/// (d, witness) so the same identity reads with d' = d.
struct Witness {
  GradedMap d_prime;
  GradedMap d_double_prime;
};

/// Canonical witness: the solution of the joint system for fixed d with every
/// free witness coordinate set to zero. Throws NotMember if d is not in the
/// space.
Witness gder_witness(const MapSpace& space, const GradedMap& d);
/// Basis of witness solutions for d = 0 (the freedom in the witnesses).
std::vector<Witness> witness_freedom(const MapSpace& space);

/// First basis pair (i, j) on which an identity fails, with its residual.
struct Violation {
  std::size_t i = 0, j = 0;
  Vector residual;
};

/// Evaluates the defining identity of `kind` directly through bracket_eval.
/// GDer and QDer require a witness.
std::optional<Violation> find_violation(const OmegaSuperAlgebra& a, MapKind kind,
                                        const GradedMap& d, const Witness* witness = nullptr);
std::optional<Violation> find_compatibility_violation(const OmegaSuperAlgebra& a,
                                                      const GradedMap& d);
inline bool is_compatible(const OmegaSuperAlgebra& a, const GradedMap& d) {
  return !find_compatibility_violation(a, d).has_value();
}

}  // namespace omegalie
