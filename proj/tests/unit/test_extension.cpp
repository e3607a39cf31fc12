#include <random>

#include "doctest.h"
#include "omegalie/catalog.hpp"
#include "omegalie/errors.hpp"
#include "omegalie/extension.hpp"
#include "oracle/brute_force.hpp"

using namespace omegalie;

namespace {

const OmegaSuperAlgebra& h() { return catalog::get("H").algebra; }

// Derived once with the brute-force solver before the library existed.
constexpr std::size_t kZDerBreveH = 12, kZDerBreveHEven = 7, kZDerBreveHOdd = 5;
constexpr std::size_t kDerOmegaBreveH = 17, kDerBreveH = 19;

}  // namespace

TEST_CASE("the extension of H") {
  const auto b = build_breve(h());
  const auto& e = b.breve;
  CHECK(e.dim() == 6);
  const std::size_t x1t = *e.index_of("x1t"), x2t = *e.index_of("x2t"), yt = *e.index_of("yt");
  const std::size_t x1t2 = *e.index_of("x1t2");
  CHECK(e.bracket_of_basis(x1t, x2t) == unit_vector(6, x1t2));
  CHECK(e.bracket_of_basis(x1t2, x2t) == Vector(6));
  CHECK(e.omega()(x1t, x2t) == GaussianRational(1));
  CHECK(e.omega()(x1t2, x2t).is_zero());
  CHECK(e.degree(yt) == Parity::odd);
  CHECK(e.degree(*e.index_of("yt2")) == Parity::odd);
  CHECK(b.derived.dim() == 2);
  CHECK(b.complement.dim() == 1);
}

TEST_CASE("Jacobi failures of the extension are exactly the triples with a nonzero form side") {
  const auto b = build_breve(h());
  const auto& e = b.breve;
  CHECK_FALSE(b.breve_report.jacobi_ok);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k) {
        const auto sides = jacobi_sides(e, i, j, k);
        CHECK(is_zero(sides.bracket_side));
        if (!is_zero(sides.form_side)) ++expected;
      }
  CHECK(b.breve_report.jacobi_failures.size() == expected);
  bool saw = false;
  for (const auto& f : b.breve_report.jacobi_failures) {
    if (f.i == *e.index_of("x1t") && f.j == *e.index_of("x2t") && f.k == *e.index_of("yt")) saw = true;
  }
  CHECK(saw);
}

TEST_CASE("extension of an abelian algebra is abelian with the lifted form") {
  const auto b = build_breve(catalog::get("abelian3").algebra);
  for (const auto& c : b.breve.structure()) CHECK(c.is_zero());
  CHECK(b.breve_report.all_ok());
  CHECK(b.derived.is_zero());
  CHECK(b.complement.dim() == 3);
}

TEST_CASE("phi on H") {
  const auto b = build_breve(h());
  const auto space = solve_space(h(), MapKind::qder, Parity::even, false);
  const auto zero = phi(b, GradedMap::zero(3, Parity::even), space);
  CHECK(zero.image.matrix.is_zero());

  Matrix m(3, 3);
  m(0, 0) = 1;  // a11 = 1
  const GradedMap d{Parity::even, m};
  const auto p = phi(b, d, space);
  CHECK(p.witness_independent);
  CHECK(p.image.degree == Parity::even);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(p.image.matrix(r, c) == m(r, c));
      CHECK(p.image.matrix(r, 3 + c).is_zero());
      CHECK(p.image.matrix(3 + r, c).is_zero());
    }
  // On [g,g] = span{x1, y}: d'([x1,x2]) = [d x1, x2] + [x1, d x2] = x1, and
  // d'([x1,y]) = [d x1, y] = y. The complement x2 t^2 maps to zero.
  CHECK(p.image.matrix(3, 3) == GaussianRational(1));
  CHECK(p.image.matrix(5, 5) == GaussianRational(1));
  for (std::size_t r = 3; r < 6; ++r) CHECK(p.image.matrix(r, 4).is_zero());
  CHECK_FALSE(find_violation(b.breve, MapKind::der, p.image));

  Matrix bad(3, 3);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(phi(b, {Parity::even, bad}, space), NotMember);
}

TEST_CASE("phi is linear") {
  const auto b = build_breve(h());
  std::mt19937_64 rng(4);
  for (Parity p : kParities) {
    const auto space = solve_space(h(), MapKind::qder, p, false);
    const auto basis = space.elements();
    for (int trial = 0; trial < 10; ++trial) {
      GradedMap sum = GradedMap::zero(3, p);
      Matrix expected(6, 6);
      for (const auto& d : basis) {
        const GaussianRational f(static_cast<long>(rng() % 9) - 4);
        sum.matrix += d.matrix * f;
        expected += phi(b, d, space).image.matrix * f;
      }
      CHECK(phi(b, sum, space).image.matrix == expected);
    }
  }
}

TEST_CASE("extension statements on H") {
  ExtensionContext c(h());
  const auto reports = check_extension_all(c);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CAPTURE(to_string(r.statement));
    CHECK(r.verdict == Verdict::holds);
    CHECK_FALSE(r.counterexample);
  }
  CHECK(reports[0].dims.at("phi(QDer)") == 7);
  CHECK(reports[0].facts.at("witness independent on [g,g]t^2"));
  CHECK(reports[1].facts.at("both compatibility directions exercised"));
  const auto& dec = reports[3];
  CHECK(dec.dims.at("ZDer(breve)") == kZDerBreveH);
  CHECK(dec.dims.at("Der^omega(breve)") == kDerOmegaBreveH);
  CHECK(dec.dims.at("Der(breve)") == kDerBreveH);
  CHECK(dec.dims.at("Der^omega(breve)") == 5 + dec.dims.at("ZDer(breve)"));
  CHECK(dec.dims.at("phi(QDer^omega)") == 5);
  CHECK(dec.facts.at("Der(breve) = phi(QDer) (+) ZDer(breve)"));
  CHECK(dec.facts.at("ZDer(breve) = ZDer^omega(breve)"));
  CHECK_FALSE(dec.facts.at("breve omega-Jacobi identity holds"));
  CHECK(c.breve_spaces().get(MapKind::zder, Parity::even, false).dim() == kZDerBreveHEven);
  CHECK(c.breve_spaces().get(MapKind::zder, Parity::odd, false).dim() == kZDerBreveHOdd);
}

TEST_CASE("extension spaces agree with the oracle") {
  const auto b = build_breve(h());
  for (MapKind kind : {MapKind::der, MapKind::zder})
    for (Parity p : kParities)
      for (bool compatible : {false, true})
        CHECK(oracle::embed(solve_space(b.breve, kind, p, compatible)) ==
              oracle::solve_space(b.breve, kind, p, compatible));
}

TEST_CASE("decomposition gates and classical case") {
  {
    ExtensionContext c(catalog::get("heisenberg-like-lie-super").algebra);
    const auto r = check_extension(Statement::extension_decomposition, c);
    CHECK(r.verdict == Verdict::not_applicable);
    CHECK_FALSE(r.counterexample);
  }
  {
    ExtensionContext c(catalog::get("centerless-lie-super").algebra);
    for (const auto& r : check_extension_all(c)) {
      CAPTURE(to_string(r.statement));
      CHECK(r.verdict == Verdict::holds);
    }
    CHECK(c.breve().breve_report.all_ok());
  }
  ExtensionContext c(h());
  CHECK_THROWS_AS(check_extension(Statement::gder_sum, c), std::invalid_argument);
  CHECK_THROWS_AS(check(Statement::embedding_injective, h()), std::invalid_argument);
}
