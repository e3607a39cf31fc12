#include <vector>

#include "doctest.h"
#include "omegalie/catalog.hpp"
#include "omegalie/errors.hpp"
#include "omegalie/superalgebra.hpp"
#include "oracle/brute_force.hpp"

using namespace omegalie;

namespace {

const OmegaSuperAlgebra& h() { return catalog::get("H").algebra; }

}  // namespace

TEST_CASE("H has the expected shape and brackets") {
  const auto& a = h();
  CHECK(a.dim() == 3);
  CHECK(a.dim_even() == 2);
  CHECK(a.dim_odd() == 1);
  const std::size_t x1 = *a.index_of("x1"), x2 = *a.index_of("x2"), y = *a.index_of("y");
  CHECK(a.bracket_of_basis(x1, x2) == unit_vector(3, x1));
  CHECK(a.bracket_of_basis(x2, x1) == Vector{-1, 0, 0});
  CHECK(a.bracket_of_basis(x1, y) == unit_vector(3, y));
  CHECK(a.bracket_of_basis(y, y) == Vector(3));
  CHECK(a.omega()(x1, x2) == GaussianRational(1));
  CHECK(a.omega()(x2, x1) == GaussianRational(-1));
}

TEST_CASE("catalog algebras satisfy the axioms") {
  for (const auto& id : catalog::ids()) {
    const auto& entry = catalog::get(id);
    CAPTURE(id);
    CHECK(validate(entry.algebra).all_ok() == entry.omega_lie_superalgebra);
  }
}

TEST_CASE("H satisfies the omega-Jacobi identity only with the form term") {
  const auto& a = h();
  bool form_matters = false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const auto sides = jacobi_sides(a, i, j, k);
        CHECK(sides.bracket_side == sides.form_side);
        form_matters = form_matters || !is_zero(sides.form_side);
      }
  CHECK(form_matters);
}

TEST_CASE("builder rejects inconsistent presentations") {
  CHECK_THROWS_AS(AlgebraBuilder("dup", {"x", "x"}, {}), SchemaError);
  AlgebraBuilder b("t", {"x1", "x2"}, {"y"});
  CHECK_THROWS_AS(b.index("nope"), SchemaError);
  // Even bracket landing in the odd part.
  CHECK_THROWS_AS(b.bracket("x1", "x2", {{1, "y"}}), GradingError);
  b.bracket("x1", "x2", {{1, "x1"}});
  CHECK_THROWS_AS(b.bracket("x2", "x1", {{1, "x1"}}), SkewError);
  CHECK_THROWS_AS(b.bracket("x1", "x1", {{1, "x2"}}), SkewError);
  CHECK_THROWS_AS(b.omega("x1", "y", 1), GradingError);
  // Odd diagonals are symmetric, so they may be nonzero.
  b.bracket("y", "y", {{1, "x2"}});
  const auto a = b.build();
  CHECK(a.bracket_of_basis(2, 2) == unit_vector(3, 1));
}

TEST_CASE("odd brackets are symmetric") {
  AlgebraBuilder b("sym", {"z"}, {"y1", "y2"});
  b.bracket("y1", "y2", {{1, "z"}});
  const auto a = b.build();
  CHECK(a.bracket_of_basis(2, 1) == unit_vector(3, 0));
}

TEST_CASE("direct constructor checks invariants") {
  std::vector<GaussianRational> c(8);
  c[(0 * 2 + 1) * 2 + 0] = 1;  // [b0, b1] = b0 but [b1, b0] left zero
  CHECK_THROWS_AS(OmegaSuperAlgebra("bad", {"a", "b"}, {Parity::even, Parity::even}, c, Matrix(2, 2)),
                  SkewError);
  CHECK_THROWS_AS(OmegaSuperAlgebra("bad", {"a"}, {Parity::even}, c, Matrix(1, 1)), SchemaError);
}

TEST_CASE("validate reports Jacobi failures with residuals") {
  AlgebraBuilder b("broken", {"x1", "x2"}, {"y"});
  b.bracket("x1", "x2", {{1, "x1"}});
  b.omega("x1", "x2", 1);  // missing the skew part of omega breaks the identity
  const auto report = validate(b.build());
  CHECK(report.closure_ok);
  CHECK(report.skew_ok);
  CHECK_FALSE(report.jacobi_ok);
  REQUIRE_FALSE(report.jacobi_failures.empty());
  CHECK_FALSE(is_zero(report.jacobi_failures.front().residual));
}

TEST_CASE("center and derived subalgebra of H") {
  const auto& a = h();
  const auto z = center(a);
  CHECK(z.is_zero());
  CHECK(oracle::center(a).empty());
  const auto derived = derived_subalgebra(a);
  CHECK(derived.even.dim() == 1);
  CHECK(derived.odd.dim() == 1);
  const auto complement = graded_complement(a, derived);
  CHECK(complement.dim() == 1);
  CHECK(complement.even.contains(unit_vector(3, *a.index_of("x2"))));
}

TEST_CASE("center agrees with the oracle on the catalog") {
  for (const auto& id : catalog::ids()) {
    const auto& a = catalog::get(id).algebra;
    CAPTURE(id);
    CHECK(center(a).total().basis() == oracle::center(a));
  }
}
