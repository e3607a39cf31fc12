#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "omegalie/superalgebra.hpp"

namespace omegalie {

struct RandomAlgebraOptions {
  std::size_t max_dim = 4;
  /// Every k-th sample is a random graded change of basis of a catalog
  /// algebra with nonzero form (0 disables).
  std::size_t transformed_every = 4;
  std::size_t max_attempts = 100000;
};

/// Sparse candidate: a few bracket relations and at most one form pair, with
/// coefficients in {-2..2} + {-1..1}i, rejected until the omega-Jacobi
/// identity holds.
OmegaSuperAlgebra random_sparse_algebra(std::mt19937_64& rng, std::size_t dim,
                                        std::size_t even_dim, std::size_t max_attempts);

/// Rewrites `a` in the basis b'_i = sum_k p(k, i) b_k. p must be invertible
/// and preserve the grading.
OmegaSuperAlgebra change_basis(const OmegaSuperAlgebra& a, const Matrix& p);

/// Random invertible grading-preserving matrix with small Gaussian integer
/// entries.
Matrix random_graded_basis_change(std::mt19937_64& rng, const std::vector<Parity>& degrees);

/// Deterministic family of valid omega-Lie superalgebras for property runs.
std::vector<OmegaSuperAlgebra> random_algebras(std::uint64_t seed, std::size_t count,
                                               const RandomAlgebraOptions& options = {});

}  // namespace omegalie
