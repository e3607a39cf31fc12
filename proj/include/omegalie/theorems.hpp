#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "omegalie/derivations.hpp"
#include "omegalie/superalgebra.hpp"

namespace omegalie {

/// Structural statements about the compatible map spaces of an omega-Lie
/// superalgebra, each decided on a concrete algebra.
enum class Statement {
  compatible_tower,         // Der^w <= QDer^w <= GDer^w <= GDer
  compatible_subalgebras,   // GDer^w, QDer^w, Der^w, C^w closed under [ , ]
  zder_ideal,               // [Der^w, ZDer^w] <= ZDer^w
  zder_compatible,          // ZDer = ZDer^w
  der_cent_bracket,         // [Der^w, C^w] <= C^w
  qder_qcent_bracket,       // [QDer^w, QC^w] <= QC^w
  qcent_qcent_bracket,      // [QC^w, QC^w] <= QDer^w
  cent_in_qder,             // C^w <= QDer^w
  gder_sum,                 // GDer^w = QDer^w + QC^w when QDer^w = QDer or QC^w = QC
  qcent_ideal,              // QC^w + [QC^w, QC^w] is an ideal of GDer^w
  cent_qcent_central,       // [C^w, QC^w] maps into Z, and is zero when Z = 0
  cent_intersection,        // C^w = QDer^w meet QC^w when Z = 0
  qcent_abelian_criterion,  // Z = 0: QC^w closed under [ , ] iff [QC^w, QC^w] = 0
  // Statements about the truncated current extension (see extension.hpp).
  embedding_injective,      // phi is even and injective on QDer
  embedding_derivation,     // phi(QDer) <= Der(breve), phi(d) compatible iff d compatible
  embedding_compatible,     // phi(QDer^w) <= Der^w(breve)
  extension_decomposition,  // Z = 0: Der^w(breve) = phi(QDer^w) (+) ZDer(breve)
};

std::string_view to_string(Statement s);
std::optional<Statement> parse_statement(std::string_view id);
/// Statements about the map spaces of g itself, in report order.
const std::vector<Statement>& all_statements();
/// Statements about the extension, in report order.
const std::vector<Statement>& extension_statements();
/// One-line formula for the statement.
std::string_view describe(Statement s);

enum class Verdict { holds, fails, not_applicable };
std::string_view to_string(Verdict v);

struct Hypothesis {
  std::string description;
  bool holds = false;
};

struct Counterexample {
  /// Named maps involved, e.g. the two factors and their commutator.
  std::vector<std::pair<std::string, GradedMap>> elements;
  /// Residual of the failed membership or identity.
  Vector residual;
  std::string note;
};

struct TheoremReport {
  Statement statement = Statement::compatible_tower;
  std::vector<Hypothesis> hypotheses;
  Verdict verdict = Verdict::holds;
  /// Value of the conclusion when some hypothesis fails.
  std::optional<bool> informational;
  /// Total dimension of each space consulted, keyed by display name.
  std::map<std::string, std::size_t> dims;
  /// Present exactly when verdict == fails.
  std::optional<Counterexample> counterexample;
  /// Auxiliary boolean findings (individual hypothesis parts, directions of a
  /// biconditional).
  std::map<std::string, bool> facts;

  bool hypotheses_hold() const;
};

/// Display name of a space, e.g. "QDer^omega".
std::string space_name(MapKind kind, bool compatible);

/// Report assembly shared by the statement checkers: records hypotheses,
/// dimensions and facts, then derives the verdict from the first failure.
class ReportBuilder {
 public:
  ReportBuilder(Statement s, bool omega_jacobi);
  void hypothesis(std::string description, bool holds);
  void fact(const std::string& key, bool value) { report_.facts[key] = value; }
  void dim(const std::string& key, std::size_t value) { report_.dims[key] = value; }
  TheoremReport finish(std::optional<Counterexample> failure);

 private:
  TheoremReport report_;
};

/// Lazily solved map spaces of one algebra.
class SpaceCache {
 public:
  explicit SpaceCache(const OmegaSuperAlgebra& a, SolveOptions options = {});

  const OmegaSuperAlgebra& algebra() const noexcept { return *algebra_; }
  const MapSpace& get(MapKind kind, Parity degree, bool compatible);
  std::size_t dim(MapKind kind, bool compatible);
  const GradedSubspace& center();
  bool jacobi_ok();

 private:
  const OmegaSuperAlgebra* algebra_;
  SolveOptions options_;
  std::map<std::tuple<MapKind, Parity, bool>, MapSpace> spaces_;
  std::optional<GradedSubspace> center_;
  std::optional<bool> jacobi_ok_;
};

/// Throws std::invalid_argument for extension statements; those are checked
/// by check_extension.
TheoremReport check(Statement s, SpaceCache& cache);
inline TheoremReport check(Statement s, const OmegaSuperAlgebra& a) {
  SpaceCache cache(a);
  return check(s, cache);
}
std::vector<TheoremReport> check_all(SpaceCache& cache);

}  // namespace omegalie
