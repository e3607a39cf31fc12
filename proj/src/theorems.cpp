#include "omegalie/theorems.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace omegalie {

namespace {

struct StatementInfo {
  Statement statement;
  std::string_view id;
  std::string_view formula;
};

constexpr StatementInfo kStatements[] = {
    {Statement::compatible_tower, "compatible-tower",
     "Der^omega <= QDer^omega <= GDer^omega <= GDer"},
    {Statement::compatible_subalgebras, "compatible-subalgebras",
     "GDer^omega, QDer^omega, Der^omega, C^omega are closed under the super-commutator"},
    {Statement::zder_ideal, "zder-ideal", "[Der^omega, ZDer^omega] <= ZDer^omega"},
    {Statement::zder_compatible, "zder-compatible", "ZDer = ZDer^omega"},
    {Statement::der_cent_bracket, "der-cent-bracket", "[Der^omega, C^omega] <= C^omega"},
    {Statement::qder_qcent_bracket, "qder-qcent-bracket", "[QDer^omega, QC^omega] <= QC^omega"},
    {Statement::qcent_qcent_bracket, "qcent-qcent-bracket", "[QC^omega, QC^omega] <= QDer^omega"},
    {Statement::cent_in_qder, "cent-in-qder", "C^omega <= QDer^omega"},
    {Statement::gder_sum, "gder-sum",
     "QDer^omega = QDer or QC^omega = QC implies GDer^omega = QDer^omega + QC^omega"},
    {Statement::qcent_ideal, "qcent-ideal",
     "QC^omega + [QC^omega, QC^omega] is an ideal of GDer^omega"},
    {Statement::cent_qcent_central, "cent-qcent-central",
     "[C^omega, QC^omega] maps g into Z(g), and vanishes when Z(g) = 0"},
    {Statement::cent_intersection, "cent-intersection",
     "Z(g) = 0 implies C^omega = QDer^omega meet QC^omega"},
    {Statement::qcent_abelian_criterion, "qcent-abelian-criterion",
     "Z(g) = 0 implies: QC^omega is closed under the super-commutator iff [QC^omega, QC^omega] = 0"},
    {Statement::embedding_injective, "embedding-injective",
     "phi: QDer(g) -> End(breve g) is even and injective, independent of the witness on [g,g]t^2"},
    {Statement::embedding_derivation, "embedding-derivation",
     "phi(QDer(g)) <= Der(breve g), and phi(d) is compatible iff d is compatible"},
    {Statement::embedding_compatible, "embedding-compatible", "phi(QDer^omega(g)) <= Der^omega(breve g)"},
    {Statement::extension_decomposition, "extension-decomposition",
     "Z(g) = 0 implies Der^omega(breve g) = phi(QDer^omega(g)) (+) ZDer(breve g)"},
};

const StatementInfo& info(Statement s) {
  for (const auto& i : kStatements)
    if (i.statement == s) return i;
  throw std::logic_error("unknown statement");
}

/// Both degree parts of one map space, over their layout coordinates.
struct MapFamily {
  std::string name;
  std::array<Subspace, 2> parts;
  std::array<CoordinateLayout, 2> layouts;

  const Subspace& part(Parity p) const { return parts[static_cast<unsigned>(p)]; }
  const CoordinateLayout& layout(Parity p) const { return layouts[static_cast<unsigned>(p)]; }

  std::vector<GradedMap> elements(Parity p) const {
    std::vector<GradedMap> out;
    for (const auto& v : part(p).basis()) out.push_back(layout(p).to_map(v));
    return out;
  }
  /// Zero when d is a member.
  Vector residual(const GradedMap& d) const { return part(d.degree).residual(layout(d.degree).to_coords(d)); }
};

MapFamily family(SpaceCache& cache, MapKind kind, bool compatible) {
  MapFamily f;
  f.name = space_name(kind, compatible);
  for (Parity p : kParities) {
    const auto& space = cache.get(kind, p, compatible);
    f.parts[static_cast<unsigned>(p)] = space.basis;
    f.layouts[static_cast<unsigned>(p)] = space.layout;
  }
  return f;
}

using Failure = std::optional<Counterexample>;

Failure containment(const MapFamily& sub, const MapFamily& sup) {
  for (Parity p : kParities) {
    for (const auto& d : sub.elements(p)) {
      Vector r = sup.residual(d);
      if (!is_zero(r)) {
        return Counterexample{{{sub.name, d}}, std::move(r), sub.name + " element outside " + sup.name};
      }
    }
  }
  return std::nullopt;
}

Failure equality(const MapFamily& a, const MapFamily& b) {
  if (auto f = containment(a, b)) return f;
  return containment(b, a);
}

/// Applies `visit` to every commutator of basis elements of `a` and `b`; stops
/// at the first counterexample it returns.
Failure for_each_commutator(const MapFamily& a, const MapFamily& b,
                            const std::function<Failure(const GradedMap&, const GradedMap&,
                                                        const GradedMap&)>& visit) {
  for (Parity p : kParities)
    for (Parity q : kParities)
      for (const auto& d : a.elements(p))
        for (const auto& e : b.elements(q))
          if (auto f = visit(d, e, super_commutator(d, e))) return f;
  return std::nullopt;
}

Failure bracket_into(const MapFamily& a, const MapFamily& b, const MapFamily& target) {
  return for_each_commutator(a, b, [&](const GradedMap& d, const GradedMap& e, const GradedMap& c) -> Failure {
    Vector r = target.residual(c);
    if (is_zero(r)) return std::nullopt;
    return Counterexample{{{a.name, d}, {b.name, e}, {"commutator", c}},
                          std::move(r),
                          "commutator outside " + target.name};
  });
}

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r) v.insert(v.end(), m.row(r).begin(), m.row(r).end());
  return v;
}

/// Report builder bound to the spaces of one algebra.
class Checker {
 public:
  Checker(Statement s, SpaceCache& cache) : cache_(cache), builder_(s, cache.jacobi_ok()) {}

  void hypothesis(std::string description, bool holds) {
    builder_.hypothesis(std::move(description), holds);
  }
  void fact(const std::string& key, bool value) { builder_.fact(key, value); }

  MapFamily space(MapKind kind, bool compatible) {
    builder_.dim(space_name(kind, compatible), cache_.dim(kind, compatible));
    return family(cache_, kind, compatible);
  }

  const GradedSubspace& center() {
    const auto& z = cache_.center();
    builder_.dim("Z", z.dim());
    return z;
  }

  TheoremReport finish(Failure failure) { return builder_.finish(std::move(failure)); }

 private:
  SpaceCache& cache_;
  ReportBuilder builder_;
};

TheoremReport compatible_tower(Checker& b) {
  const auto der = b.space(MapKind::der, true);
  const auto qder = b.space(MapKind::qder, true);
  const auto gder = b.space(MapKind::gder, true);
  const auto gder_all = b.space(MapKind::gder, false);
  Failure f = containment(der, qder);
  if (!f) f = containment(qder, gder);
  if (!f) f = containment(gder, gder_all);
  return b.finish(std::move(f));
}

TheoremReport compatible_subalgebras(Checker& b) {
  Failure f;
  for (MapKind kind : {MapKind::gder, MapKind::qder, MapKind::der, MapKind::cent}) {
    const auto s = b.space(kind, true);
    if (!f) f = bracket_into(s, s, s);
  }
  return b.finish(std::move(f));
}

TheoremReport zder_ideal(Checker& b) {
  const auto zder = b.space(MapKind::zder, true);
  return b.finish(bracket_into(b.space(MapKind::der, true), zder, zder));
}

TheoremReport zder_compatible(Checker& b, const OmegaSuperAlgebra& a) {
  b.hypothesis("dim(g) >= 3", a.dim() >= 3);
  return b.finish(equality(b.space(MapKind::zder, false), b.space(MapKind::zder, true)));
}

TheoremReport gder_sum(Checker& b) {
  const auto qder = b.space(MapKind::qder, true);
  const auto qc = b.space(MapKind::qcent, true);
  const auto gder = b.space(MapKind::gder, true);
  const bool qder_equal = !equality(qder, b.space(MapKind::qder, false)).has_value();
  const bool qc_equal = !equality(qc, b.space(MapKind::qcent, false)).has_value();
  b.fact("QDer^omega = QDer", qder_equal);
  b.fact("QC^omega = QC", qc_equal);
  b.hypothesis("QDer^omega = QDer or QC^omega = QC", qder_equal || qc_equal);
  MapFamily sum = qder;
  sum.name = "QDer^omega + QC^omega";
  for (Parity p : kParities) {
    sum.parts[static_cast<unsigned>(p)] = subspace_sum(qder.part(p), qc.part(p));
  }
  return b.finish(equality(gder, sum));
}

TheoremReport qcent_ideal(Checker& b) {
  const auto qc = b.space(MapKind::qcent, true);
  const auto gder = b.space(MapKind::gder, true);
  MapFamily s = qc;
  s.name = "QC^omega + [QC^omega, QC^omega]";
  std::array<std::vector<Vector>, 2> spans;
  for (Parity p : kParities) spans[static_cast<unsigned>(p)] = qc.part(p).basis();
  for_each_commutator(qc, qc, [&](const GradedMap&, const GradedMap&, const GradedMap& c) -> Failure {
    spans[static_cast<unsigned>(c.degree)].push_back(s.layout(c.degree).to_coords(c));
    return std::nullopt;
  });
  for (Parity p : kParities) {
    const auto k = static_cast<unsigned>(p);
    s.parts[k] = Subspace::span(s.layouts[k].size(), spans[k]);
  }
  return b.finish(bracket_into(gder, s, s));
}

TheoremReport cent_qcent_central(Checker& b, const OmegaSuperAlgebra& a) {
  const auto& z = b.center().total();
  b.fact("Z(g) = 0", z.is_zero());
  bool all_zero = true;
  Failure f = for_each_commutator(
      b.space(MapKind::cent, true), b.space(MapKind::qcent, true),
      [&](const GradedMap& d, const GradedMap& e, const GradedMap& c) -> Failure {
        all_zero = all_zero && c.matrix.is_zero();
        for (std::size_t j = 0; j < a.dim(); ++j) {
          Vector r = z.residual(c.matrix.column(j));
          if (!is_zero(r)) {
            return Counterexample{{{"C^omega", d}, {"QC^omega", e}, {"commutator", c}},
                                  std::move(r),
                                  "image of " + a.basis_names()[j] + " outside Z(g)"};
          }
        }
        return std::nullopt;
      });
  b.fact("[C^omega, QC^omega] = 0", all_zero && !f);
  return b.finish(std::move(f));
}

TheoremReport cent_intersection(Checker& b) {
  b.hypothesis("Z(g) = 0", b.center().is_zero());
  const auto qder = b.space(MapKind::qder, true);
  const auto qc = b.space(MapKind::qcent, true);
  MapFamily meet = qder;
  meet.name = "QDer^omega meet QC^omega";
  for (Parity p : kParities) {
    meet.parts[static_cast<unsigned>(p)] = subspace_intersect(qder.part(p), qc.part(p));
  }
  return b.finish(equality(b.space(MapKind::cent, true), meet));
}

TheoremReport qcent_abelian_criterion(Checker& b) {
  b.hypothesis("Z(g) = 0", b.center().is_zero());
  const auto qc = b.space(MapKind::qcent, true);
  const bool closed = !bracket_into(qc, qc, qc).has_value();
  std::optional<Counterexample> nonzero = for_each_commutator(
      qc, qc, [&](const GradedMap& d, const GradedMap& e, const GradedMap& c) -> Failure {
        if (c.matrix.is_zero()) return std::nullopt;
        return Counterexample{{{"QC^omega", d}, {"QC^omega", e}, {"commutator", c}},
                              flatten(c.matrix),
                              "nonzero commutator inside QC^omega"};
      });
  b.fact("QC^omega closed under the super-commutator", closed);
  b.fact("[QC^omega, QC^omega] = 0", !nonzero);
  // The biconditional fails only when QC^omega is closed but not abelian.
  return b.finish(closed && nonzero ? std::move(nonzero) : std::nullopt);
}

}  // namespace

std::string_view to_string(Statement s) { return info(s).id; }

std::string_view describe(Statement s) { return info(s).formula; }

std::optional<Statement> parse_statement(std::string_view id) {
  for (const auto& i : kStatements)
    if (i.id == id) return i.statement;
  return std::nullopt;
}

const std::vector<Statement>& all_statements() {
  static const std::vector<Statement> all = [] {
    std::vector<Statement> out;
    for (const auto& i : kStatements)
      if (i.statement < Statement::embedding_injective) out.push_back(i.statement);
    return out;
  }();
  return all;
}

const std::vector<Statement>& extension_statements() {
  static const std::vector<Statement> all = {
      Statement::embedding_injective, Statement::embedding_derivation,
      Statement::embedding_compatible, Statement::extension_decomposition};
  return all;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "";
}

ReportBuilder::ReportBuilder(Statement s, bool omega_jacobi) {
  report_.statement = s;
  hypothesis("omega-Jacobi identity holds", omega_jacobi);
}

void ReportBuilder::hypothesis(std::string description, bool holds) {
  report_.hypotheses.push_back({std::move(description), holds});
}

TheoremReport ReportBuilder::finish(std::optional<Counterexample> failure) {
  if (!report_.hypotheses_hold()) {
    report_.verdict = Verdict::not_applicable;
    report_.informational = !failure.has_value();
  } else if (failure) {
    report_.verdict = Verdict::fails;
    report_.counterexample = std::move(failure);
  } else {
    report_.verdict = Verdict::holds;
  }
  return std::move(report_);
}

bool TheoremReport::hypotheses_hold() const {
  for (const auto& h : hypotheses)
    if (!h.holds) return false;
  return true;
}

std::string space_name(MapKind kind, bool compatible) {
  std::string base;
  switch (kind) {
    case MapKind::der: base = "Der"; break;
    case MapKind::gder: base = "GDer"; break;
    case MapKind::qder: base = "QDer"; break;
    case MapKind::cent: base = "C"; break;
    case MapKind::qcent: base = "QC"; break;
    case MapKind::zder: base = "ZDer"; break;
  }
  return compatible ? base + "^omega" : base;
}

SpaceCache::SpaceCache(const OmegaSuperAlgebra& a, SolveOptions options)
    : algebra_(&a), options_(options) {}

const MapSpace& SpaceCache::get(MapKind kind, Parity degree, bool compatible) {
  const auto key = std::make_tuple(kind, degree, compatible);
  auto it = spaces_.find(key);
  if (it == spaces_.end()) {
    it = spaces_.emplace(key, solve_space(*algebra_, kind, degree, compatible, options_)).first;
  }
  return it->second;
}

std::size_t SpaceCache::dim(MapKind kind, bool compatible) {
  return get(kind, Parity::even, compatible).dim() + get(kind, Parity::odd, compatible).dim();
}

const GradedSubspace& SpaceCache::center() {
  if (!center_) center_ = omegalie::center(*algebra_);
  return *center_;
}

bool SpaceCache::jacobi_ok() {
  if (!jacobi_ok_) jacobi_ok_ = validate(*algebra_).jacobi_ok;
  return *jacobi_ok_;
}

TheoremReport check(Statement s, SpaceCache& cache) {
  Checker b(s, cache);
  const auto& a = cache.algebra();
  switch (s) {
    case Statement::compatible_tower: return compatible_tower(b);
    case Statement::compatible_subalgebras: return compatible_subalgebras(b);
    case Statement::zder_ideal: return zder_ideal(b);
    case Statement::zder_compatible: return zder_compatible(b, a);
    case Statement::der_cent_bracket: {
      const auto c = b.space(MapKind::cent, true);
      return b.finish(bracket_into(b.space(MapKind::der, true), c, c));
    }
    case Statement::qder_qcent_bracket: {
      const auto qc = b.space(MapKind::qcent, true);
      return b.finish(bracket_into(b.space(MapKind::qder, true), qc, qc));
    }
    case Statement::qcent_qcent_bracket: {
      const auto qc = b.space(MapKind::qcent, true);
      return b.finish(bracket_into(qc, qc, b.space(MapKind::qder, true)));
    }
    case Statement::cent_in_qder:
      return b.finish(containment(b.space(MapKind::cent, true), b.space(MapKind::qder, true)));
    case Statement::gder_sum: return gder_sum(b);
    case Statement::qcent_ideal: return qcent_ideal(b);
    case Statement::cent_qcent_central: return cent_qcent_central(b, a);
    case Statement::cent_intersection: return cent_intersection(b);
    case Statement::qcent_abelian_criterion: return qcent_abelian_criterion(b);
    case Statement::embedding_injective:
    case Statement::embedding_derivation:
    case Statement::embedding_compatible:
    case Statement::extension_decomposition:
      break;
  }
  throw std::invalid_argument(std::string(to_string(s)) + " is checked on the extension");
}

std::vector<TheoremReport> check_all(SpaceCache& cache) {
  std::vector<TheoremReport> out;
  for (Statement s : all_statements()) out.push_back(check(s, cache));
  return out;
}

}  // namespace omegalie
