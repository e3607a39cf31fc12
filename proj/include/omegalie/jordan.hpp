#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/derivations.hpp"
#include "omegalie/matrix.hpp"

namespace omegalie {

/// Coefficients from the constant term upwards.
struct Polynomial {
  std::vector<GaussianRational> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  GaussianRational operator()(const GaussianRational& x) const;
  /// p(M) by Horner's rule.
  Matrix operator()(const Matrix& m) const;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  std::string to_string(const std::string& var = "x") const;
};

/// x - root
Polynomial linear_factor(const GaussianRational& root);

/// det(x I - M), monic, by the Faddeev-LeVerrier recurrence.
Polynomial char_poly(const Matrix& m);

/// Exact square root in Q(i) with nonnegative real part (positive imaginary
/// part when the real part is zero), or nullopt.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

/// Roots in Q(i) with multiplicities, ordered by (re, im). Throws NotSplit
/// when an irreducible factor of degree >= 2 remains.
std::vector<std::pair<GaussianRational, std::size_t>> eigenvalues(const Polynomial& p);

struct JordanBlocks {
  GaussianRational eigenvalue;
  /// Descending.
  std::vector<std::size_t> sizes;
  friend bool operator==(const JordanBlocks&, const JordanBlocks&) = default;
};

struct JordanStructure {
  /// Ordered by eigenvalue (re, im).
  std::vector<JordanBlocks> spectrum;

  std::size_t size() const;
  std::string to_string() const;
  /// All block sizes, descending, joined by '+'.
  std::string block_signature() const;
  friend bool operator==(const JordanStructure&, const JordanStructure&) = default;
};

/// Block sizes from the rank profile rank((M - lambda I)^k). Throws NotSplit.
JordanStructure jordan_structure(const Matrix& m);

/// Jordan matrix with ones on the subdiagonal of each block.
Matrix jordan_matrix(const JordanStructure& j);

struct JordanShape {
  std::string id;
  std::string description;
  std::function<bool(const JordanStructure&)> matches;
};

/// Forms of a 3x3 generalized derivation of H: diag(a, b, c); a 2-block at a
/// with a 1-block at b; a 3-block at a.
const std::vector<JordanShape>& gder_h_shapes();

/// Forms of a 3x3 compatible generalized derivation of H: diag(a, -a, b);
/// a 2-block at a with a 1-block at -a; a 2-block at 0 with a 1-block at
/// c != 0; a 3-block at 0.
const std::vector<JordanShape>& gder_omega_h_shapes();

/// Id of the first matching shape, if any.
std::optional<std::string> match_shape(const JordanStructure& j, const std::vector<JordanShape>& shapes);

enum class SampleMode { even, odd, mixed };

std::string to_string(SampleMode m);

struct SampleMismatch {
  SampleMode mode = SampleMode::even;
  Matrix matrix;
  JordanStructure structure;
};

struct SampleTally {
  std::size_t samples = 0;
  std::size_t not_split = 0;
  std::map<std::string, std::size_t> by_shape;
  std::map<std::string, std::size_t> by_mode;
  /// Keyed by block sizes over the whole spectrum, e.g. "2+1".
  std::map<std::string, std::size_t> by_blocks;
  std::vector<SampleMismatch> mismatches;
};

/// Draws `count` nonzero elements of `space_even` + `space_odd`, cycling
/// through even-only, odd-only and mixed combinations of basis elements with
/// Gaussian integer coefficients in {-3..3} + {-3..3}i. Draws whose
/// characteristic polynomial does not split over Q(i) are redrawn and counted.
/// With an empty shape list nothing is matched and no mismatch is recorded.
SampleTally classify_samples(const MapSpace& space_even, const MapSpace& space_odd, std::size_t count,
                             std::uint64_t seed, const std::vector<JordanShape>& shapes);

}  // namespace omegalie
