#include <map>
#include <random>
#include <string>

#include "doctest.h"
#include "omegalie/algebra_io.hpp"
#include "omegalie/catalog.hpp"
#include "omegalie/random_algebra.hpp"
#include "omegalie/theorems.hpp"

using namespace omegalie;

namespace {

constexpr std::uint64_t kSeed = 20240601;

std::map<Statement, TheoremReport> reports_for(const OmegaSuperAlgebra& a) {
  SpaceCache cache(a);
  std::map<Statement, TheoremReport> out;
  for (auto& r : check_all(cache)) out.emplace(r.statement, std::move(r));
  return out;
}

void check_report_invariants(const TheoremReport& r) {
  CAPTURE(to_string(r.statement));
  CHECK((r.verdict == Verdict::not_applicable) == !r.hypotheses_hold());
  CHECK(r.counterexample.has_value() == (r.verdict == Verdict::fails));
  CHECK(r.informational.has_value() == (r.verdict == Verdict::not_applicable));
}

}  // namespace

TEST_CASE("statement ids round trip") {
  for (Statement s : all_statements()) {
    CHECK(parse_statement(to_string(s)) == s);
    CHECK_FALSE(describe(s).empty());
  }
  CHECK(all_statements().size() == 13);
  CHECK_FALSE(parse_statement("nope"));
}

TEST_CASE("all statements on H") {
  const auto reports = reports_for(catalog::get("H").algebra);
  for (const auto& [s, r] : reports) {
    check_report_invariants(r);
    CAPTURE(to_string(s));
    if (s == Statement::gder_sum) continue;
    CHECK(r.verdict == Verdict::holds);
  }
  const auto& sum = reports.at(Statement::gder_sum);
  CHECK(sum.verdict == Verdict::not_applicable);
  CHECK(sum.dims.at("QDer^omega") == 5);
  CHECK(sum.dims.at("QDer") == 7);
  CHECK(sum.dims.at("QC^omega") == 0);
  CHECK(sum.dims.at("QC") == 1);
  CHECK(sum.dims.at("GDer^omega") == 5);
  CHECK_FALSE(sum.facts.at("QDer^omega = QDer"));
  CHECK_FALSE(sum.facts.at("QC^omega = QC"));
  CHECK(sum.informational == true);

  const auto& tower = reports.at(Statement::compatible_tower);
  CHECK(tower.dims.at("Der^omega") == 2);
  CHECK(tower.dims.at("GDer") == 7);

  const auto& inter = reports.at(Statement::cent_intersection);
  CHECK(inter.hypotheses.back().holds);
  CHECK(inter.dims.at("Z") == 0);
  CHECK(reports.at(Statement::cent_qcent_central).facts.at("[C^omega, QC^omega] = 0"));
  const auto& crit = reports.at(Statement::qcent_abelian_criterion);
  CHECK(crit.facts.at("QC^omega closed under the super-commutator") ==
        crit.facts.at("[QC^omega, QC^omega] = 0"));
}

TEST_CASE("hypothesis gates on algebras with a center") {
  const auto reports = reports_for(catalog::get("abelian3").algebra);
  CHECK(reports.at(Statement::cent_intersection).verdict == Verdict::not_applicable);
  CHECK(reports.at(Statement::qcent_abelian_criterion).verdict == Verdict::not_applicable);
  CHECK(reports.at(Statement::gder_sum).verdict == Verdict::holds);
  CHECK(reports.at(Statement::zder_compatible).dims.at("ZDer") == 5 + 4);
  for (const auto& [s, r] : reports) check_report_invariants(r);
}

TEST_CASE("small algebras are outside the zero-derivation statement") {
  std::mt19937_64 rng(1);
  const auto a = random_sparse_algebra(rng, 2, 1, 1000);
  const auto r = check(Statement::zder_compatible, a);
  CHECK(r.verdict == Verdict::not_applicable);
}

TEST_CASE("algebras failing the omega-Jacobi identity are not applicable") {
  AlgebraBuilder b("broken", {"x1", "x2"}, {"y"});
  b.bracket("x1", "x2", {{1, "x1"}});
  b.omega("x1", "x2", 1);
  b.omega("x2", "x1", -1);
  b.bracket("x1", "y", {{2, "y"}});
  const auto a = b.build();
  REQUIRE_FALSE(validate(a).jacobi_ok);
  SpaceCache cache(a);
  for (const auto& r : check_all(cache)) {
    CHECK(r.verdict == Verdict::not_applicable);
    check_report_invariants(r);
  }
}

TEST_CASE("no statement fails on the catalog or on seeded random algebras") {
  std::vector<OmegaSuperAlgebra> algebras;
  for (const auto& id : catalog::ids()) algebras.push_back(catalog::get(id).algebra);
  for (auto& a : random_algebras(kSeed, 200)) algebras.push_back(std::move(a));
  std::size_t zder_checked = 0, gder_sum_checked = 0;
  for (const auto& a : algebras) {
    CAPTURE(a.name());
    CHECK(a.dim() <= 4);
    CHECK(validate(a).all_ok());
    SpaceCache cache(a);
    for (const auto& r : check_all(cache)) {
      check_report_invariants(r);
      CAPTURE(to_string(r.statement));
      CHECK(r.verdict != Verdict::fails);
      if (r.statement == Statement::zder_compatible && a.dim() >= 3) {
        CHECK(r.verdict == Verdict::holds);
        ++zder_checked;
      }
      if (r.statement == Statement::gder_sum && r.verdict == Verdict::holds) ++gder_sum_checked;
      for (const auto& [name, dim] : r.dims) {
        if (name == "Z") CHECK(dim == cache.center().dim());
      }
    }
  }
  CHECK(zder_checked > 50);
  CHECK(gder_sum_checked > 50);
}

TEST_CASE("the inclusion of quasicentroids in quasiderivations can fail") {
  const auto a = load_algebra(R"({"name": "g", "even_basis": ["x"], "odd_basis": ["y"],
      "brackets": [{"left": "x", "right": "y", "value": [[1, 1, 0, 1, "y"]]}]})");
  Matrix m(2, 2);
  m(0, 1) = 1;  // y -> x
  const GradedMap d{Parity::odd, m};
  CHECK(solve_space(a, MapKind::qcent, Parity::odd, false).contains(d));
  CHECK_FALSE(solve_space(a, MapKind::qder, Parity::odd, false).contains(d));
  CHECK(solve_space(a, MapKind::gder, Parity::odd, false).contains(d));
}

TEST_CASE("random algebra generation is deterministic") {
  const auto a = random_algebras(7, 12);
  const auto b = random_algebras(7, 12);
  CHECK(a == b);
  CHECK(random_algebras(8, 12) != a);
  bool nonzero_omega = false;
  for (const auto& alg : a) nonzero_omega = nonzero_omega || !alg.omega().is_zero();
  CHECK(nonzero_omega);
}

TEST_CASE("basis changes preserve the axioms and dimensions") {
  std::mt19937_64 rng(3);
  const auto& h = catalog::get("H").algebra;
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_graded_basis_change(rng, h.degrees());
    const auto t = change_basis(h, p);
    CHECK(validate(t).all_ok());
    SpaceCache cache(t);
    CHECK(cache.dim(MapKind::gder, false) == 7);
    CHECK(cache.dim(MapKind::gder, true) == 5);
  }
}
