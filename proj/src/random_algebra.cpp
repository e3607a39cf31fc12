#include "omegalie/random_algebra.hpp"

#include <stdexcept>
#include <string>

#include "omegalie/catalog.hpp"
#include "omegalie/errors.hpp"
#include "omegalie/random.hpp"

namespace omegalie {

namespace {

GaussianRational small_coefficient(std::mt19937_64& rng) {
  GaussianRational z;
  do {
    z = GaussianRational(mpq_class(uniform_int(rng, -2, 2)), mpq_class(uniform_int(rng, -1, 1)));
  } while (z.is_zero());
  return z;
}

std::vector<std::string> default_names(std::size_t even, std::size_t odd) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < even; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < odd; ++i) names.push_back("y" + std::to_string(i + 1));
  return names;
}

OmegaSuperAlgebra renamed(const OmegaSuperAlgebra& a, std::string name) {
  return {std::move(name), a.basis_names(), a.degrees(), a.structure(), a.omega()};
}

}  // namespace

OmegaSuperAlgebra random_sparse_algebra(std::mt19937_64& rng, std::size_t dim,
                                        std::size_t even_dim, std::size_t max_attempts) {
  if (even_dim > dim) throw std::invalid_argument("even dimension exceeds dimension");
  std::vector<Parity> degrees(dim, Parity::odd);
  for (std::size_t i = 0; i < even_dim; ++i) degrees[i] = Parity::even;
  const auto names = default_names(even_dim, dim - even_dim);
  const auto n = static_cast<long>(dim);

  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<GaussianRational> c(dim * dim * dim);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> GaussianRational& {
      return c[(i * dim + j) * dim + k];
    };
    const long relations = uniform_int(rng, 0, 3);
    for (long r = 0; r < relations; ++r) {
      std::size_t i = uniform_int(rng, 0, n - 1), j = uniform_int(rng, 0, n - 1);
      if (i > j) std::swap(i, j);
      if (i == j && degrees[i] == Parity::even) continue;
      const Parity target = degrees[i] + degrees[j];
      const std::size_t k = uniform_int(rng, 0, n - 1);
      if (degrees[k] != target) continue;
      at(i, j, k) += small_coefficient(rng);
      if (i != j) at(j, i, k) = at(i, j, k) * GaussianRational(-koszul_sign(degrees[i], degrees[j]));
    }
    Matrix omega(dim, dim);
    if (uniform_int(rng, 0, 1) == 1) {
      std::size_t i = uniform_int(rng, 0, n - 1), j = uniform_int(rng, 0, n - 1);
      if (i > j) std::swap(i, j);
      const GaussianRational v = small_coefficient(rng);
      if (degrees[i] == Parity::even && degrees[j] == Parity::even && i != j) {
        omega(i, j) = v;
        omega(j, i) = -v;
      } else if (degrees[i] == Parity::odd && degrees[j] == Parity::odd) {
        omega(i, j) = v;
        omega(j, i) = v;
      }
    }
    OmegaSuperAlgebra a("random", names, degrees, std::move(c), std::move(omega));
    if (validate(a).all_ok()) return a;
  }
  throw std::runtime_error("no valid random algebra within the attempt budget");
}

OmegaSuperAlgebra change_basis(const OmegaSuperAlgebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  const auto inv = inverse(p);
  if (!inv) throw std::invalid_argument("basis change is singular");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a.degree(i) != a.degree(k) && !p(k, i).is_zero())
        throw GradingError("basis change mixes degrees");

  std::vector<GaussianRational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // [b'_i, b'_j] in old coordinates, then mapped to new ones.
      Vector old(n);
      for (std::size_t u = 0; u < n; ++u) {
        if (p(u, i).is_zero()) continue;
        for (std::size_t v = 0; v < n; ++v) {
          if (p(v, j).is_zero()) continue;
          const GaussianRational f = p(u, i) * p(v, j);
          for (std::size_t m = 0; m < n; ++m)
            if (!a.c(u, v, m).is_zero()) old[m] += f * a.c(u, v, m);
        }
      }
      const Vector fresh = inv->apply(old);
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = fresh[k];
    }
  }
  const Matrix omega = p.transpose() * a.omega() * p;
  return {a.name(), a.basis_names(), a.degrees(), std::move(c), omega};
}

Matrix random_graded_basis_change(std::mt19937_64& rng, const std::vector<Parity>& degrees) {
  const std::size_t n = degrees.size();
  while (true) {
    Matrix p(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (degrees[r] == degrees[c])
          p(r, c) = GaussianRational(mpq_class(uniform_int(rng, -2, 2)),
                                     mpq_class(uniform_int(rng, -1, 1)));
    if (rank(p) == n) return p;
  }
}

std::vector<OmegaSuperAlgebra> random_algebras(std::uint64_t seed, std::size_t count,
                                               const RandomAlgebraOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<OmegaSuperAlgebra> seeds;
  for (const auto& id : catalog::ids()) {
    const auto& entry = catalog::get(id);
    if (entry.omega_lie_superalgebra && !entry.algebra.omega().is_zero() &&
        entry.algebra.dim() <= options.max_dim) {
      seeds.push_back(entry.algebra);
    }
  }
  std::vector<OmegaSuperAlgebra> out;
  for (std::size_t s = 0; s < count; ++s) {
    const std::string name = "random-" + std::to_string(seed) + "-" + std::to_string(s);
    const std::size_t every = options.transformed_every;
    if (every != 0 && !seeds.empty() && s % every == every - 1) {
      const auto& base = seeds[bounded_draw(rng, seeds.size())];
      out.push_back(renamed(change_basis(base, random_graded_basis_change(rng, base.degrees())), name));
      continue;
    }
    const std::size_t dim = uniform_int(rng, 1, static_cast<long>(options.max_dim));
    const std::size_t even = uniform_int(rng, 0, static_cast<long>(dim));
    out.push_back(renamed(random_sparse_algebra(rng, dim, even, options.max_attempts), name));
  }
  return out;
}

}  // namespace omegalie
