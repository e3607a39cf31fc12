#include <random>
#include <vector>

#include "doctest.h"
#include "omegalie/errors.hpp"
#include "omegalie/matrix.hpp"
#include "omegalie/subspace.hpp"
#include "oracle/brute_force.hpp"
#include "support/random_values.hpp"

using namespace omegalie;

namespace {

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t n) {
  const auto m = test_support::sparse_matrix(rng, test_support::draw(rng, 0, n), n);
  const auto rows = rows_of(m);
  return Subspace::span(n, rows);
}

}  // namespace

TEST_CASE("rref of a small matrix") {
  const std::vector<Vector> rows = {{1, 2, 3}, {2, 4, 7}, {0, 0, 0}};
  const auto [reduced, pivots] = rref(Matrix::from_rows(3, rows));
  CHECK(pivots == std::vector<std::size_t>{0, 2});
  CHECK(reduced.rows() == 3);
  CHECK(reduced(0, 0) == GaussianRational(1));
  CHECK(reduced(0, 1) == GaussianRational(2));
  CHECK(reduced(0, 2) == GaussianRational(0));
  CHECK(reduced(1, 2) == GaussianRational(1));
  CHECK(reduced(2, 2) == GaussianRational(0));
}

TEST_CASE("kernel of a rank deficient matrix") {
  const std::vector<Vector> rows = {{1, 1, 0}, {0, 0, 1}};
  const auto k = kernel(Matrix::from_rows(3, rows));
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(Vector{1, -1, 0}));
}

TEST_CASE("dimension mismatches throw") {
  Subspace a(3), b(4);
  CHECK_THROWS_AS(subspace_sum(a, b), AmbientMismatch);
  CHECK_THROWS_AS(subspace_intersect(a, b), AmbientMismatch);
  CHECK_THROWS_AS(a.contains(Vector{1, 2}), AmbientMismatch);
  Matrix m(1, 3);
  CHECK_THROWS_AS(m.append_row(Vector{1}), AmbientMismatch);
}

TEST_CASE("rank plus nullity and rref idempotence on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = test_support::draw(rng, 1, 5);
    const std::size_t c = test_support::draw(rng, 1, 6);
    const Matrix m = test_support::sparse_matrix(rng, r, c);
    const auto k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    CHECK(rank(m) == oracle::rank(m));
    for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
    const auto once = rref(m);
    const auto twice = rref(once.reduced);
    CHECK(once.reduced == twice.reduced);
    CHECK(once.pivot_cols == twice.pivot_cols);
    CHECK(k.basis() == oracle::canonical_basis(oracle::nullspace(rows_of(m), c), c));
  }
}

TEST_CASE("subspace lattice identities on random subspaces") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = test_support::draw(rng, 1, 5);
    const auto a = random_subspace(rng, n);
    const auto b = random_subspace(rng, n);
    const auto c = random_subspace(rng, n);
    const auto sum = subspace_sum(a, b);
    const auto meet = subspace_intersect(a, b);
    CHECK(sum.dim() + meet.dim() == a.dim() + b.dim());
    CHECK(sum.contains(a));
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(subspace_sum(a, b) == subspace_sum(b, a));
    CHECK(subspace_intersect(a, b) == subspace_intersect(b, a));
    // Modular law: a <= c implies a + (b meet c) = (a + b) meet c.
    const auto a_in_c = subspace_intersect(a, c);
    CHECK(subspace_sum(a_in_c, subspace_intersect(b, c)) ==
          subspace_intersect(subspace_sum(a_in_c, b), c));
    CHECK(annihilator(annihilator(a)).dim() == a.dim());
    CHECK(Subspace::span(n, a.basis()) == a);
  }
}

TEST_CASE("projection onto coordinates") {
  const std::vector<Vector> rows = {{1, 0, 5}, {0, 1, 5}};
  const auto s = Subspace::span(3, rows);
  const std::vector<std::size_t> coords = {2};
  CHECK(subspace_project(s, coords).dim() == 1);
  const std::vector<std::size_t> first = {0, 1};
  CHECK(subspace_project(s, first).is_full());
}

TEST_CASE("matrix algebra") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = test_support::sparse_matrix(rng, 3, 3);
    const Matrix b = test_support::sparse_matrix(rng, 3, 3);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK((a * b).trace() == (b * a).trace());
    CHECK(a.power(3) == a * a * a);
    CHECK(a.power(0) == Matrix::identity(3));
  }
}
