// omegalie: JSON reports for map spaces, statements, the t^2 extension and
// Jordan shapes of omega-Lie superalgebras.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "omegalie/algebra_io.hpp"
#include "omegalie/catalog.hpp"
#include "omegalie/derivations.hpp"
#include "omegalie/errors.hpp"
#include "omegalie/extension.hpp"
#include "omegalie/jordan.hpp"
#include "omegalie/theorems.hpp"

using nlohmann::json;
using namespace omegalie;

namespace {

constexpr const char* kVersion = "0.1.0";

// Bad flag values, reported like library input errors.
class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "UsageError"; }
};

struct Options {
  std::string algebra;
  std::string kind;
  std::string degree = "both";
  bool compatible = false;
  bool strict_witnesses = false;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::string statement = "all";
};

struct Outcome {
  json results;
  bool failed = false;
  std::string summary;
};

OmegaSuperAlgebra resolve_algebra(const std::string& source) {
  if (catalog::contains(source)) return catalog::get(source).algebra;
  return load_algebra_file(source);
}

MapKind resolve_kind(const std::string& s) {
  const auto k = parse_map_kind(s);
  if (!k) throw UsageError("unknown map kind '" + s + "'");
  return *k;
}

std::vector<Parity> resolve_degrees(const std::string& s) {
  if (s == "even") return {Parity::even};
  if (s == "odd") return {Parity::odd};
  if (s == "both") return {Parity::even, Parity::odd};
  throw UsageError("degree must be even, odd or both, not '" + s + "'");
}

json map_json(const GradedMap& d) {
  return {{"degree", std::string(to_string(d.degree))}, {"matrix", matrix_to_json(d.matrix)}};
}

json names_json(const OmegaSuperAlgebra& a, std::initializer_list<std::size_t> idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(a.basis_names()[i]);
  return out;
}

json axioms_json(const OmegaSuperAlgebra& a, const AxiomReport& r) {
  json failures = json::array();
  for (const auto& f : r.jacobi_failures) {
    const JacobiSides sides = jacobi_sides(a, f.i, f.j, f.k);
    failures.push_back({{"triple", names_json(a, {f.i, f.j, f.k})},
                        {"bracket_side", vector_to_json(sides.bracket_side)},
                        {"form_side", vector_to_json(sides.form_side)},
                        {"residual", vector_to_json(f.residual)}});
  }
  return {{"closure", r.closure_ok},         {"skew", r.skew_ok},
          {"mixed_omega", r.mixed_omega_ok}, {"jacobi", r.jacobi_ok},
          {"all_ok", r.all_ok()},            {"jacobi_failures", failures}};
}

json report_json(const TheoremReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"description", h.description}, {"holds", h.holds}});
  json out = {{"statement", std::string(to_string(r.statement))},
              {"formula", std::string(describe(r.statement))},
              {"hypotheses", hyps},
              {"hypotheses_hold", r.hypotheses_hold()},
              {"verdict", std::string(to_string(r.verdict))},
              {"dims", r.dims},
              {"facts", r.facts}};
  out["informational"] = r.informational ? json(*r.informational) : json(nullptr);
  if (r.counterexample) {
    json elems = json::array();
    for (const auto& [name, d] : r.counterexample->elements) elems.push_back({{"name", name}, {"map", map_json(d)}});
    out["counterexample"] = {{"elements", elems},
                             {"residual", vector_to_json(r.counterexample->residual)},
                             {"note", r.counterexample->note}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json structure_json(const JordanStructure& j) {
  json out = json::array();
  for (const auto& g : j.spectrum) out.push_back({{"eigenvalue", scalar_to_json(g.eigenvalue)}, {"block_sizes", g.sizes}});
  return out;
}

std::string verdict_summary(const std::vector<TheoremReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += std::string(to_string(r.statement)) + ": " + std::string(to_string(r.verdict)) + "\n";
  return out;
}

Outcome cmd_validate(const OmegaSuperAlgebra& a) {
  const AxiomReport r = validate(a);
  Outcome o;
  o.results = {{"algebra", algebra_to_json(a)},
               {"dim", {{"even", a.dim_even()}, {"odd", a.dim_odd()}, {"total", a.dim()}}},
               {"axioms", axioms_json(a, r)}};
  o.failed = !r.all_ok();
  o.summary = a.name() + ": " + (r.all_ok() ? "all axioms hold" : "axiom failures") + " (" +
              std::to_string(r.jacobi_failures.size()) + " omega-Jacobi failures)\n";
  return o;
}

Outcome cmd_spaces(const OmegaSuperAlgebra& a, const Options& opt) {
  const MapKind kind = resolve_kind(opt.kind);
  const bool witnessed = kind == MapKind::gder || kind == MapKind::qder;
  Outcome o;
  json parts = json::object();
  json dims = json::object();
  std::size_t total = 0;
  for (Parity p : resolve_degrees(opt.degree)) {
    const MapSpace s = solve_space(a, kind, p, opt.compatible, {opt.strict_witnesses});
    json basis = json::array();
    json witnesses = json::array();
    for (const auto& d : s.elements()) {
      basis.push_back(matrix_to_json(d.matrix));
      if (witnessed) {
        const Witness w = gder_witness(s, d);
        witnesses.push_back({{"d_prime", matrix_to_json(w.d_prime.matrix)},
                             {"d_double_prime", matrix_to_json(w.d_double_prime.matrix)}});
      }
    }
    json part = {{"dim", s.dim()}, {"basis", basis}};
    if (witnessed) {
      part["witnesses"] = witnesses;
      part["witness_freedom_dim"] = witness_freedom(s).size();
    }
    parts[std::string(to_string(p))] = part;
    dims[std::string(to_string(p))] = s.dim();
    total += s.dim();
  }
  dims["total"] = total;
  o.results = {{"space", space_name(kind, opt.compatible)}, {"dims", dims}, {"parts", parts}};
  o.summary = space_name(kind, opt.compatible) + "(" + a.name() + "): dim " + std::to_string(total) + "\n";
  return o;
}

Outcome cmd_theorems(const OmegaSuperAlgebra& a, const Options& opt) {
  std::vector<TheoremReport> reports;
  if (opt.statement == "all") {
    SpaceCache cache(a, {opt.strict_witnesses});
    reports = check_all(cache);
  } else {
    const auto s = parse_statement(opt.statement);
    if (!s) throw UsageError("unknown statement '" + opt.statement + "'");
    const auto& ext = extension_statements();
    if (std::find(ext.begin(), ext.end(), *s) != ext.end()) {
      ExtensionContext ctx(a, {opt.strict_witnesses});
      reports.push_back(check_extension(*s, ctx));
    } else {
      SpaceCache cache(a, {opt.strict_witnesses});
      reports.push_back(check(*s, cache));
    }
  }
  Outcome o;
  json list = json::array();
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    o.failed = o.failed || r.verdict == Verdict::fails;
  }
  o.results = {{"reports", list}};
  o.summary = verdict_summary(reports);
  return o;
}

Outcome cmd_extend(const OmegaSuperAlgebra& a, const Options& opt) {
  ExtensionContext ctx(a, {opt.strict_witnesses});
  const BreveAlgebra& b = ctx.breve();
  json phi = json::array();
  for (bool compatible : {false, true}) {
    for (Parity p : kParities) {
      for (const PhiMap& m : ctx.phi_basis(p, compatible)) {
        phi.push_back({{"source", space_name(MapKind::qder, compatible)},
                       {"d", map_json(m.d)},
                       {"d_prime", map_json(m.d_prime)},
                       {"image", map_json(m.image)},
                       {"witness_independent", m.witness_independent}});
      }
    }
  }
  const auto reports = check_extension_all(ctx);
  Outcome o;
  json list = json::array();
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    o.failed = o.failed || r.verdict == Verdict::fails;
  }
  o.results = {{"breve", algebra_to_json(b.breve)},
               {"derived_dim", b.derived.dim()},
               {"complement_dim", b.complement.dim()},
               {"breve_axioms", axioms_json(b.breve, b.breve_report)},
               {"phi", phi},
               {"reports", list}};
  o.summary = "breve(" + a.name() + "): dim " + std::to_string(b.breve.dim()) + ", " +
              std::to_string(b.breve_report.jacobi_failures.size()) + " omega-Jacobi failures\n" +
              verdict_summary(reports);
  return o;
}

Outcome cmd_jordan(const OmegaSuperAlgebra& a, const Options& opt) {
  const MapKind kind = resolve_kind(opt.kind.empty() ? "gder" : opt.kind);
  const SolveOptions so{opt.strict_witnesses};
  const MapSpace even = solve_space(a, kind, Parity::even, opt.compatible, so);
  const MapSpace odd = solve_space(a, kind, Parity::odd, opt.compatible, so);
  // the shape lists describe 3x3 matrices only
  static const std::vector<JordanShape> none;
  const bool matching = a.dim() == 3;
  const auto& shapes = !matching ? none : opt.compatible ? gder_omega_h_shapes() : gder_h_shapes();

  Outcome o;
  if (even.dim() + odd.dim() == 0) {
    o.results = {{"space", space_name(kind, opt.compatible)}, {"shape_matching", false}, {"samples", 0},
                 {"note", "zero space, nothing to sample"}};
    o.summary = "zero space\n";
    return o;
  }
  const SampleTally t = classify_samples(even, odd, opt.samples, opt.seed, shapes);
  json shape_list = json::array();
  for (const auto& s : shapes) shape_list.push_back({{"id", s.id}, {"description", s.description}});
  json mismatches = json::array();
  for (const auto& m : t.mismatches)
    mismatches.push_back({{"mode", to_string(m.mode)}, {"matrix", matrix_to_json(m.matrix)},
                          {"structure", structure_json(m.structure)}});
  o.results = {{"space", space_name(kind, opt.compatible)},
               {"shape_matching", matching},
               {"shapes", shape_list},
               {"samples", t.samples},
               {"not_split_redraws", t.not_split},
               {"by_shape", t.by_shape},
               {"by_mode", t.by_mode},
               {"by_blocks", t.by_blocks},
               {"mismatches", mismatches}};
  o.failed = !t.mismatches.empty();
  o.summary = std::to_string(t.samples) + " samples of " + space_name(kind, opt.compatible) + "(" + a.name() +
              "), " + std::to_string(t.mismatches.size()) + " mismatches, " + std::to_string(t.not_split) +
              " not split redraws\n";
  return o;
}

json inputs_json(const std::string& command, const Options& opt, const std::string& algebra_name) {
  json in = {{"algebra", opt.algebra}, {"algebra_name", algebra_name}};
  if (command == "spaces" || command == "jordan") {
    in["kind"] = opt.kind.empty() ? "gder" : opt.kind;
    in["compatible"] = opt.compatible;
  }
  if (command == "spaces") in["degree"] = opt.degree;
  if (command != "validate") in["strict_witnesses"] = opt.strict_witnesses;
  if (command == "theorems") in["statement"] = opt.statement;
  if (command == "jordan") {
    in["samples"] = opt.samples;
    in["seed"] = opt.seed;
  }
  return in;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

void emit_error(const std::string& command, const std::string& kind, const std::string& message) {
  emit({{"command", command}, {"error", {{"kind", kind}, {"message", message}}}, {"version", kVersion}});
  std::cerr << "error: " << message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on omega-Lie superalgebras"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options opt;

  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", opt.algebra, "catalog id or path to an algebra document")->required();
  };
  auto add_witness = [&](CLI::App* sub) {
    sub->add_flag("--strict-witnesses", opt.strict_witnesses,
                  "also require witnesses of compatible maps to be compatible");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms");
  add_algebra(validate_cmd);

  auto* spaces_cmd = app.add_subcommand("spaces", "solve a map space");
  add_algebra(spaces_cmd);
  spaces_cmd->add_option("--kind", opt.kind, "der|gder|qder|cent|qcent|zder")->required();
  spaces_cmd->add_option("--degree", opt.degree, "even|odd|both");
  spaces_cmd->add_flag("--compatible", opt.compatible, "compatible variant");
  add_witness(spaces_cmd);

  auto* theorems_cmd = app.add_subcommand("theorems", "decide structural statements");
  add_algebra(theorems_cmd);
  theorems_cmd->add_option("--statement", opt.statement, "statement id or all");
  add_witness(theorems_cmd);

  auto* extend_cmd = app.add_subcommand("extend", "build the t^2 extension and check the embedding");
  add_algebra(extend_cmd);
  add_witness(extend_cmd);

  auto* jordan_cmd = app.add_subcommand("jordan", "sample Jordan structures of a map space");
  add_algebra(jordan_cmd);
  jordan_cmd->add_option("--kind", opt.kind, "der|gder|qder|cent|qcent|zder (default gder)");
  jordan_cmd->add_flag("--compatible", opt.compatible, "compatible variant");
  jordan_cmd->add_option("--samples", opt.samples, "number of samples");
  jordan_cmd->add_option("--seed", opt.seed, "sampler seed")->required();
  add_witness(jordan_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("", "UsageError", e.what());
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const OmegaSuperAlgebra a = resolve_algebra(opt.algebra);
    Outcome o;
    if (command == "validate") o = cmd_validate(a);
    else if (command == "spaces") o = cmd_spaces(a, opt);
    else if (command == "theorems") o = cmd_theorems(a, opt);
    else if (command == "extend") o = cmd_extend(a, opt);
    else o = cmd_jordan(a, opt);
    emit({{"command", command}, {"inputs", inputs_json(command, opt, a.name())}, {"results", o.results},
          {"version", kVersion}});
    std::cerr << o.summary;
    return o.failed ? 1 : 0;
  } catch (const Error& e) {
    emit_error(command, e.kind(), e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(command, "InternalError", e.what());
    return 3;
  }
}
