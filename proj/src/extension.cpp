#include "omegalie/extension.hpp"

#include <stdexcept>
#include <string>

#include "omegalie/errors.hpp"

namespace omegalie {

namespace {

/// Projection of g onto [g, g] along the complement spanned by the non-pivot
/// standard basis vectors: v -> sum_k v[pivot_k] s_k.
Matrix derived_projection(const BreveAlgebra& b) {
  const Subspace s = b.derived.total();
  const std::size_t n = b.n();
  Matrix p(n, n);
  for (std::size_t k = 0; k < s.dim(); ++k)
    for (std::size_t r = 0; r < n; ++r) p(r, s.pivot_cols()[k]) = s.basis()[k][r];
  return p;
}

/// Witness of a QDer element: the single map d' of its identity.
const GradedMap& qder_witness(const Witness& w) { return w.d_double_prime; }

GradedMap restrict_to_base(const GradedMap& image, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = image.matrix(r, c);
  return {image.degree, m};
}

std::optional<Counterexample> first_outside(const std::vector<GradedMap>& maps,
                                            const MapSpace& target, const std::string& name) {
  for (const auto& d : maps) {
    Vector r = target.basis.residual(target.layout.to_coords(d));
    if (!is_zero(r)) return Counterexample{{{name, d}}, std::move(r), name + " element outside " +
                                                                          space_name(target.kind, target.compatible) + "(breve)"};
  }
  return std::nullopt;
}

std::vector<GradedMap> images(const std::vector<PhiMap>& maps) {
  std::vector<GradedMap> out;
  for (const auto& m : maps) out.push_back(m.image);
  return out;
}

TheoremReport embedding_injective(ExtensionContext& c) {
  ReportBuilder b(Statement::embedding_injective, c.base_spaces().jacobi_ok());
  const std::size_t n = c.breve().n();
  b.dim("QDer", c.base_spaces().dim(MapKind::qder, false));
  std::optional<Counterexample> failure;
  bool independent = true, even = true;
  std::size_t image_dim = 0;
  for (Parity p : kParities) {
    const auto& maps = c.phi_basis(p, false);
    const Subspace image = c.phi_image(p, false);
    image_dim += image.dim();
    for (const auto& m : maps) {
      independent = independent && m.witness_independent;
      even = even && m.image.degree == m.d.degree;
      if (!failure && restrict_to_base(m.image, n) != m.d) {
        failure = Counterexample{{{"d", m.d}, {"phi(d)", m.image}}, {}, "t-block of phi(d) differs from d"};
      }
    }
    if (!failure && image.dim() != maps.size()) {
      failure = Counterexample{{}, {}, "phi has a nonzero kernel on QDer in degree " + std::string(to_string(p))};
    }
  }
  b.dim("phi(QDer)", image_dim);
  b.fact("phi preserves degree", even);
  b.fact("witness independent on [g,g]t^2", independent);
  if (!failure && !even) failure = Counterexample{{}, {}, "phi changes the degree"};
  if (!failure && !independent) failure = Counterexample{{}, {}, "phi depends on the witness on [g,g]t^2"};
  return b.finish(std::move(failure));
}

TheoremReport embedding_derivation(ExtensionContext& c) {
  ReportBuilder b(Statement::embedding_derivation, c.base_spaces().jacobi_ok());
  const auto& breve = c.breve();
  b.dim("QDer", c.base_spaces().dim(MapKind::qder, false));
  std::optional<Counterexample> failure;
  std::size_t compatible_seen = 0, incompatible_seen = 0;
  for (bool compatible : {false, true}) {
    for (Parity p : kParities) {
      for (const auto& m : c.phi_basis(p, compatible)) {
        if (auto v = find_violation(breve.breve, MapKind::der, m.image); v && !failure) {
          failure = Counterexample{{{"d", m.d}, {"phi(d)", m.image}}, v->residual,
                                   "phi(d) violates the derivation identity on (" +
                                       breve.breve.basis_names()[v->i] + ", " +
                                       breve.breve.basis_names()[v->j] + ")"};
        }
        const bool base_ok = is_compatible(breve.base, m.d);
        const bool image_ok = is_compatible(breve.breve, m.image);
        (base_ok ? compatible_seen : incompatible_seen) += 1;
        if (base_ok != image_ok && !failure) {
          failure = Counterexample{{{"d", m.d}, {"phi(d)", m.image}}, {},
                                   base_ok ? "d compatible but phi(d) not" : "phi(d) compatible but d not"};
        }
      }
    }
  }
  b.dim("compatible elements checked", compatible_seen);
  b.dim("incompatible elements checked", incompatible_seen);
  b.fact("both compatibility directions exercised", compatible_seen > 0 && incompatible_seen > 0);
  return b.finish(std::move(failure));
}

TheoremReport embedding_compatible(ExtensionContext& c) {
  ReportBuilder b(Statement::embedding_compatible, c.base_spaces().jacobi_ok());
  b.dim("QDer^omega", c.base_spaces().dim(MapKind::qder, true));
  b.dim("Der^omega(breve)", c.breve_spaces().dim(MapKind::der, true));
  std::optional<Counterexample> failure;
  for (Parity p : kParities) {
    if (failure) break;
    failure = first_outside(images(c.phi_basis(p, true)), c.breve_spaces().get(MapKind::der, p, true),
                            "phi(QDer^omega)");
  }
  return b.finish(std::move(failure));
}

TheoremReport extension_decomposition(ExtensionContext& c) {
  ReportBuilder b(Statement::extension_decomposition, c.base_spaces().jacobi_ok());
  const bool centerless = c.base_spaces().center().is_zero();
  b.hypothesis("Z(g) = 0", centerless);
  b.dim("Z", c.base_spaces().center().dim());
  auto& ext = c.breve_spaces();
  b.dim("Der^omega(breve)", ext.dim(MapKind::der, true));
  b.dim("Der(breve)", ext.dim(MapKind::der, false));
  b.dim("ZDer(breve)", ext.dim(MapKind::zder, false));
  b.dim("ZDer^omega(breve)", ext.dim(MapKind::zder, true));
  b.dim("QDer^omega", c.base_spaces().dim(MapKind::qder, true));
  b.dim("QDer", c.base_spaces().dim(MapKind::qder, false));

  std::optional<Counterexample> failure;
  bool plain_holds = true;
  std::size_t phi_dim = 0;
  for (bool compatible : {true, false}) {
    for (Parity p : kParities) {
      const auto& der = ext.get(MapKind::der, p, compatible);
      const auto& zder = ext.get(MapKind::zder, p, false);
      const Subspace image = c.phi_image(p, compatible);
      if (compatible) phi_dim += image.dim();
      const Subspace sum = subspace_sum(image, zder.basis);
      const Subspace meet = subspace_intersect(image, zder.basis);
      std::optional<Counterexample> local;
      if (!meet.is_zero()) {
        local = Counterexample{{{"phi(d) in ZDer(breve)", der.layout.to_map(meet.basis().front())}},
                               {}, "phi image meets ZDer(breve)"};
      } else if (!der.basis.contains(sum)) {
        for (const auto& v : sum.basis()) {
          Vector r = der.basis.residual(v);
          if (is_zero(r)) continue;
          local = Counterexample{{{"element of the sum", der.layout.to_map(v)}}, std::move(r),
                                 "sum not contained in Der(breve)"};
          break;
        }
      } else if (!sum.contains(der.basis)) {
        for (const auto& v : der.basis.basis()) {
          Vector r = sum.residual(v);
          if (is_zero(r)) continue;
          local = Counterexample{{{"derivation of breve", der.layout.to_map(v)}}, std::move(r),
                                 "derivation outside phi image + ZDer(breve)"};
          break;
        }
      }
      if (compatible) {
        if (!failure) failure = std::move(local);
      } else {
        plain_holds = plain_holds && !local;
      }
    }
  }
  b.dim("phi(QDer^omega)", phi_dim);
  b.fact("Der(breve) = phi(QDer) (+) ZDer(breve)", plain_holds);
  bool zder_equal = true;
  for (Parity p : kParities)
    zder_equal = zder_equal && ext.get(MapKind::zder, p, false).basis == ext.get(MapKind::zder, p, true).basis;
  b.fact("ZDer(breve) = ZDer^omega(breve)", zder_equal);
  b.fact("breve omega-Jacobi identity holds", c.breve().breve_report.jacobi_ok);
  return b.finish(std::move(failure));
}

}  // namespace

BreveAlgebra build_breve(const OmegaSuperAlgebra& a) {
  const std::size_t n = a.dim();
  const std::size_t m = 2 * n;
  std::vector<std::string> names;
  std::vector<Parity> degrees;
  for (const char* suffix : {"t", "t2"}) {
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(a.basis_names()[i] + suffix);
      degrees.push_back(a.degree(i));
    }
  }
  std::vector<GaussianRational> c(m * m * m);
  Matrix omega(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c[(i * m + j) * m + n + k] = a.c(i, j, k);
      omega(i, j) = a.omega()(i, j);
    }
  }
  BreveAlgebra b;
  b.base = a;
  b.breve = OmegaSuperAlgebra(a.name() + "-breve", std::move(names), std::move(degrees), std::move(c),
                              std::move(omega));
  b.derived = derived_subalgebra(a);
  b.complement = graded_complement(a, b.derived);
  b.breve_report = validate(b.breve);
  return b;
}

PhiMap phi(const BreveAlgebra& b, const GradedMap& d, const MapSpace& qder_space) {
  if (qder_space.kind != MapKind::qder) throw std::invalid_argument("phi needs a QDer space");
  const std::size_t n = b.n();
  if (d.matrix.rows() != n) throw AmbientMismatch("map size differs from the base algebra");
  const GradedMap witness = qder_witness(gder_witness(qder_space, d));
  const Matrix proj = derived_projection(b);
  const Matrix lower = witness.matrix * proj;

  Matrix m(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = d.matrix(r, c);
      m(n + r, n + c) = lower(r, c);
    }
  }
  PhiMap out{d, witness, {d.degree, m}, true};
  // Shifting the witness along any free direction must not change the
  // t^2 block.
  for (const auto& free : witness_freedom(qder_space)) {
    const Matrix shifted = (witness.matrix + qder_witness(free).matrix) * proj;
    if (shifted != lower) out.witness_independent = false;
  }
  return out;
}

ExtensionContext::ExtensionContext(const OmegaSuperAlgebra& a, SolveOptions options)
    : breve_(build_breve(a)), base_(breve_.base, options), extended_(breve_.breve, options) {}

const std::vector<PhiMap>& ExtensionContext::phi_basis(Parity degree, bool compatible) {
  const auto key = std::make_pair(degree, compatible);
  auto it = phi_.find(key);
  if (it == phi_.end()) {
    const auto& space = base_.get(MapKind::qder, degree, compatible);
    std::vector<PhiMap> maps;
    for (const auto& d : space.elements()) maps.push_back(phi(breve_, d, space));
    it = phi_.emplace(key, std::move(maps)).first;
  }
  return it->second;
}

Subspace ExtensionContext::phi_image(Parity degree, bool compatible) {
  const CoordinateLayout layout(breve_.breve.degrees(), degree);
  std::vector<Vector> rows;
  for (const auto& m : phi_basis(degree, compatible)) rows.push_back(layout.to_coords(m.image));
  return Subspace::span(layout.size(), rows);
}

TheoremReport check_extension(Statement s, ExtensionContext& context) {
  switch (s) {
    case Statement::embedding_injective: return embedding_injective(context);
    case Statement::embedding_derivation: return embedding_derivation(context);
    case Statement::embedding_compatible: return embedding_compatible(context);
    case Statement::extension_decomposition: return extension_decomposition(context);
    default: break;
  }
  throw std::invalid_argument(std::string(to_string(s)) + " is not an extension statement");
}

std::vector<TheoremReport> check_extension_all(ExtensionContext& context) {
  std::vector<TheoremReport> out;
  for (Statement s : extension_statements()) out.push_back(check_extension(s, context));
  return out;
}

}  // namespace omegalie
