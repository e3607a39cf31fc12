#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "omegalie/derivations.hpp"
#include "omegalie/superalgebra.hpp"
#include "omegalie/theorems.hpp"

namespace omegalie {

/// Truncated current extension g t + g t^2 of g, with basis
/// b_1 t .. b_n t, b_1 t^2 .. b_n t^2:
///   [b_i t, b_j t] = [b_i, b_j] t^2, every bracket with a t^2 factor is 0,
///   form(b_i t, b_j t) = omega(b_i, b_j), zero when a t^2 factor is involved.
struct BreveAlgebra {
  OmegaSuperAlgebra base;
  OmegaSuperAlgebra breve;
  /// [g, g] in base coordinates.
  GradedSubspace derived;
  /// Graded complement U of [g, g] spanned by standard basis vectors.
  GradedSubspace complement;
  /// Axiom check of the extension; the omega-Jacobi identity may fail.
  AxiomReport breve_report;

  std::size_t n() const { return base.dim(); }
};

BreveAlgebra build_breve(const OmegaSuperAlgebra& a);

/// phi(d)(a t + b t^2 + u t^2) = d(a) t + d'(b) t^2 for a in g, b in [g, g],
/// u in U, where d' is a quasiderivation witness of d.
struct PhiMap {
  GradedMap d;
  GradedMap d_prime;
  GradedMap image;
  /// Every other witness of d gives the same action on [g, g] t^2.
  bool witness_independent = true;
};

/// Throws NotMember if d is not in `qder_space` (a QDer space of the base).
PhiMap phi(const BreveAlgebra& b, const GradedMap& d, const MapSpace& qder_space);

/// Base and extension spaces together; holds pointers into itself, so it is
/// neither copyable nor movable.
class ExtensionContext {
 public:
  explicit ExtensionContext(const OmegaSuperAlgebra& a, SolveOptions options = {});
  ExtensionContext(const ExtensionContext&) = delete;
  ExtensionContext& operator=(const ExtensionContext&) = delete;

  const BreveAlgebra& breve() const noexcept { return breve_; }
  SpaceCache& base_spaces() noexcept { return base_; }
  SpaceCache& breve_spaces() noexcept { return extended_; }

  /// phi of every basis element of QDer (or QDer^omega) of the base.
  const std::vector<PhiMap>& phi_basis(Parity degree, bool compatible);
  /// Span of phi_basis over the extension's layout coordinates.
  Subspace phi_image(Parity degree, bool compatible);

 private:
  BreveAlgebra breve_;
  SpaceCache base_;
  SpaceCache extended_;
  std::map<std::pair<Parity, bool>, std::vector<PhiMap>> phi_;
};

/// Checks one of extension_statements().
TheoremReport check_extension(Statement s, ExtensionContext& context);
std::vector<TheoremReport> check_extension_all(ExtensionContext& context);

}  // namespace omegalie
