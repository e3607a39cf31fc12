#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omegalie/matrix.hpp"
#include "omegalie/subspace.hpp"

namespace omegalie {

enum class Parity : unsigned char { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
/// (-1)^{|a||b|}
constexpr int koszul_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}
constexpr std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }
inline constexpr Parity kParities[] = {Parity::even, Parity::odd};

/// Finite-dimensional Z2-graded algebra with a bilinear form, given by
/// structure constants in a homogeneous basis:
///   [b_i, b_j] = sum_k c(i,j,k) b_k,   omega(b_i, b_j) = omega()(i,j).
///
/// Construction enforces grading closure, graded skew-symmetry and the
/// vanishing of omega on mixed degrees. The graded omega-Jacobi identity is
/// not enforced; `validate` reports it.
class OmegaSuperAlgebra {
 public:
  OmegaSuperAlgebra() = default;

  /// Takes the full n*n*n structure tensor (index (i*n + j)*n + k). Throws
  /// GradingError or SkewError when the tensor violates the invariants.
  OmegaSuperAlgebra(std::string name, std::vector<std::string> basis_names,
                    std::vector<Parity> degrees, std::vector<GaussianRational> structure,
                    Matrix omega);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return degrees_.size(); }
  std::size_t dim_even() const;
  std::size_t dim_odd() const { return dim() - dim_even(); }

  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const std::vector<Parity>& degrees() const noexcept { return degrees_; }
  Parity degree(std::size_t i) const { return degrees_.at(i); }
  std::optional<std::size_t> index_of(std::string_view basis_name) const;

  const GaussianRational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim() + j) * dim() + k];
  }
  const std::vector<GaussianRational>& structure() const noexcept { return structure_; }
  const Matrix& omega() const noexcept { return omega_; }

  /// [b_i, b_j] in basis coordinates.
  Vector bracket_of_basis(std::size_t i, std::size_t j) const;

  friend bool operator==(const OmegaSuperAlgebra&, const OmegaSuperAlgebra&) = default;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Parity> degrees_;
  std::vector<GaussianRational> structure_;
  Matrix omega_;
};

/// Incremental construction from the bracket relations that a presentation
/// lists explicitly; the remaining constants follow from graded
/// skew-symmetry.
class AlgebraBuilder {
 public:
  AlgebraBuilder(std::string name, std::vector<std::string> even_basis,
                 std::vector<std::string> odd_basis);

  std::size_t dim() const noexcept { return names_.size(); }
  std::size_t index(std::string_view basis_name) const;

  /// Sets [b_i, b_j] = value and [b_j, b_i] by skew completion. SkewError if
  /// this contradicts an entry set earlier; GradingError on a degree clash.
  AlgebraBuilder& bracket(std::size_t i, std::size_t j, const Vector& value);
  AlgebraBuilder& bracket(std::string_view left, std::string_view right,
                          const std::vector<std::pair<GaussianRational, std::string>>& value);
  AlgebraBuilder& omega(std::size_t i, std::size_t j, const GaussianRational& value);
  AlgebraBuilder& omega(std::string_view left, std::string_view right,
                        const GaussianRational& value);

  OmegaSuperAlgebra build() const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Parity> degrees_;
  std::vector<std::optional<Vector>> brackets_;  // n*n, row-major by (i, j)
  Matrix omega_;
};

struct JacobiFailure {
  std::size_t i, j, k;
  /// Bracket side minus form side of the graded omega-Jacobi identity.
  Vector residual;
};

struct AxiomReport {
  bool closure_ok = true;
  bool skew_ok = true;
  bool mixed_omega_ok = true;
  bool jacobi_ok = true;
  std::vector<JacobiFailure> jacobi_failures;

  bool all_ok() const { return closure_ok && skew_ok && mixed_omega_ok && jacobi_ok; }
};

/// Both sides of the graded omega-Jacobi identity on basis triple (i, j, k).
struct JacobiSides {
  Vector bracket_side;
  Vector form_side;
};
JacobiSides jacobi_sides(const OmegaSuperAlgebra& a, std::size_t i, std::size_t j, std::size_t k);

AxiomReport validate(const OmegaSuperAlgebra& a);

Vector bracket_eval(const OmegaSuperAlgebra& a, std::span<const GaussianRational> u,
                    std::span<const GaussianRational> v);
GaussianRational omega_eval(const OmegaSuperAlgebra& a, std::span<const GaussianRational> u,
                            std::span<const GaussianRational> v);

/// A subspace of the algebra split into its even and odd parts. Both parts
/// live in the full ambient coordinate space.
struct GradedSubspace {
  Subspace even;
  Subspace odd;

  Subspace total() const { return subspace_sum(even, odd); }
  std::size_t dim() const { return even.dim() + odd.dim(); }
  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  const Subspace& part(Parity p) const { return p == Parity::even ? even : odd; }
  friend bool operator==(const GradedSubspace&, const GradedSubspace&) = default;
};

/// Coordinates of the basis vectors of degree p.
std::vector<std::size_t> coordinates_of_degree(const OmegaSuperAlgebra& a, Parity p);
/// Splits a subspace spanned by homogeneous vectors into its graded parts.
GradedSubspace split_by_degree(const OmegaSuperAlgebra& a, const Subspace& s);

GradedSubspace center(const OmegaSuperAlgebra& a);
GradedSubspace derived_subalgebra(const OmegaSuperAlgebra& a);
/// Complement spanned by the standard basis vectors at the non-pivot columns
/// of s, split by degree.
GradedSubspace graded_complement(const OmegaSuperAlgebra& a, const GradedSubspace& s);

}  // namespace omegalie
