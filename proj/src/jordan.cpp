#include "omegalie/jordan.hpp"

#include <algorithm>
#include <sstream>

#include "omegalie/errors.hpp"
#include "omegalie/random.hpp"

namespace omegalie {

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw AmbientMismatch("polynomial evaluated at a non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  const Matrix id = Matrix::identity(n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * m + id * *it;
  return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  Polynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, GaussianRational());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const GaussianRational& c = coeffs[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    const bool unit = c == GaussianRational(1);
    if (k == 0 || !unit) os << (compound ? "(" + c.to_string() + ")" : c.to_string());
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return first ? "0" : os.str();
}

Polynomial linear_factor(const GaussianRational& root) { return {{-root, GaussianRational(1)}}; }

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw AmbientMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Polynomial p;
  p.coeffs.assign(n + 1, GaussianRational());
  p.coeffs[n] = 1;
  Matrix acc(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc + id * p.coeffs[n - k + 1];
    p.coeffs[n - k] = -((m * acc).trace() / GaussianRational(static_cast<long>(k)));
  }
  return p;
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  return mpq_class(sqrt(num), sqrt(den));
}

mpz_class lcm_of_denominators(const std::vector<GaussianRational>& cs) {
  mpz_class l = 1;
  for (const auto& c : cs) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return l;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  auto take = [&](const mpz_class& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(2);
  if (n.fits_ulong_p()) {
    unsigned long m = n.get_ui();
    for (unsigned long p = 3; p * p <= m; p += 2) {
      if (m % p != 0) continue;
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace_back(mpz_class(p), e);
    }
    n = m;
  } else {
    for (mpz_class p = 3; p * p <= n; p += 2) take(p);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool divides(const GaussianRational& d, const GaussianRational& z) {
  const GaussianRational q = z / d;
  return q.re().get_den() == 1 && q.im().get_den() == 1;
}

// Gaussian primes lying over the rational prime p.
std::vector<GaussianRational> gaussian_primes_over(const mpz_class& p) {
  if (p == 2) return {{mpq_class(1), mpq_class(1)}};
  if (p % 4 == 3) return {{mpq_class(p), mpq_class(0)}};
  for (mpz_class a = 1;; ++a) {
    const mpz_class rest = p - a * a;
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      const mpz_class b = sqrt(rest);
      return {{mpq_class(a), mpq_class(b)}, {mpq_class(a), mpq_class(-b)}};
    }
  }
}

// Every Gaussian integer dividing the nonzero Gaussian integer z.
std::vector<GaussianRational> gaussian_divisors(GaussianRational z) {
  std::vector<GaussianRational> out{GaussianRational(1)};
  for (const auto& factor : factor_integer(z.norm().get_num())) {
    for (const GaussianRational& pi : gaussian_primes_over(factor.first)) {
      const std::size_t base = out.size();
      GaussianRational pk = 1;
      while (divides(pi, z)) {
        z /= pi;
        pk *= pi;
        for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
      }
    }
  }
  const GaussianRational i = GaussianRational::imaginary_unit();
  std::vector<GaussianRational> with_units;
  for (const auto& d : out)
    for (const auto& u : {GaussianRational(1), i, GaussianRational(-1), -i}) with_units.push_back(d * u);
  return with_units;
}

// Divides by (x - r), assuming r is a root.
Polynomial deflate(const Polynomial& p, const GaussianRational& r) {
  Polynomial q;
  const std::size_t d = p.degree();
  q.coeffs.assign(d, GaussianRational());
  GaussianRational carry;
  for (std::size_t k = d; k-- > 0;) {
    carry = p.coeffs[k + 1] + carry * r;
    q.coeffs[k] = carry;
  }
  return q;
}

}  // namespace

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational();
  const auto s = rational_sqrt(z.norm());
  if (!s) return std::nullopt;
  const auto x = rational_sqrt((z.re() + *s) / 2);
  const auto y = rational_sqrt((*s - z.re()) / 2);
  if (!x || !y) return std::nullopt;
  return GaussianRational(*x, sgn(z.im()) < 0 ? mpq_class(-*y) : *y);
}

std::vector<std::pair<GaussianRational, std::size_t>> eigenvalues(const Polynomial& input) {
  Polynomial p = input;
  while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
  if (p.coeffs.empty()) throw std::invalid_argument("eigenvalues of the zero polynomial");
  const GaussianRational lead = p.coeffs.back();
  for (auto& c : p.coeffs) c /= lead;

  std::map<std::pair<mpq_class, mpq_class>, std::size_t> found;
  auto record = [&](const GaussianRational& r) { ++found[{r.re(), r.im()}]; };

  while (p.degree() > 0 && p.coeffs[0].is_zero()) {
    p = deflate(p, GaussianRational());
    record(GaussianRational());
  }

  // x = y / D turns p into a monic polynomial over Z[i], whose roots in Q(i)
  // are Gaussian integers dividing the constant term.
  if (p.degree() > 0) {
    const mpz_class dd = lcm_of_denominators(p.coeffs);
    const GaussianRational d{mpq_class(dd), mpq_class(0)};
    Polynomial q = p;
    GaussianRational scale = 1;
    for (std::size_t k = q.degree() + 1; k-- > 0;) {
      q.coeffs[k] *= scale;
      scale *= d;
    }
    for (const auto& c : gaussian_divisors(q.coeffs[0])) {
      while (q.degree() > 0 && q(c).is_zero()) {
        q = deflate(q, c);
        record(c / d);
      }
      if (q.degree() == 0) break;
    }
    if (q.degree() == 2) {
      // (-b +- sqrt(b^2 - 4c)) / 2, only reached when no integral root exists
      const auto& b = q.coeffs[1];
      const auto& c = q.coeffs[0];
      const auto root = exact_sqrt(b * b - GaussianRational(4) * c);
      if (!root) throw NotSplit("characteristic polynomial " + input.to_string() + " does not split over Q(i)");
      record((-b + *root) / GaussianRational(2) / d);
      record((-b - *root) / GaussianRational(2) / d);
    } else if (q.degree() > 0) {
      throw NotSplit("characteristic polynomial " + input.to_string() + " does not split over Q(i)");
    }
  }

  std::vector<std::pair<GaussianRational, std::size_t>> out;
  for (const auto& [key, mult] : found) out.emplace_back(GaussianRational(key.first, key.second), mult);
  return out;
}

std::size_t JordanStructure::size() const {
  std::size_t n = 0;
  for (const auto& g : spectrum)
    for (auto s : g.sizes) n += s;
  return n;
}

std::string JordanStructure::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (i) os << ", ";
    os << spectrum[i].eigenvalue.to_string() << ": [";
    for (std::size_t k = 0; k < spectrum[i].sizes.size(); ++k) os << (k ? "," : "") << spectrum[i].sizes[k];
    os << ']';
  }
  return os.str();
}

std::string JordanStructure::block_signature() const {
  std::vector<std::size_t> all;
  for (const auto& g : spectrum) all.insert(all.end(), g.sizes.begin(), g.sizes.end());
  std::sort(all.rbegin(), all.rend());
  std::string out;
  for (auto s : all) out += (out.empty() ? "" : "+") + std::to_string(s);
  return out;
}

JordanStructure jordan_structure(const Matrix& m) {
  const std::size_t n = m.rows();
  JordanStructure out;
  for (const auto& [lambda, mult] : eigenvalues(char_poly(m))) {
    const Matrix b = m - Matrix::identity(n) * lambda;
    // ranks[k] = rank(b^k)
    std::vector<std::size_t> ranks{n};
    Matrix pw = Matrix::identity(n);
    while (ranks.back() > n - mult) {
      pw = pw * b;
      ranks.push_back(rank(pw));
      if (ranks.size() > n + 1) throw std::logic_error("rank profile did not stabilize");
    }
    ranks.push_back(ranks.back());
    JordanBlocks blocks{lambda, {}};
    for (std::size_t k = ranks.size() - 2; k >= 1; --k) {
      const std::size_t at_least_k = ranks[k - 1] - ranks[k];
      const std::size_t at_least_next = ranks[k] - ranks[k + 1];
      blocks.sizes.insert(blocks.sizes.end(), at_least_k - at_least_next, k);
    }
    out.spectrum.push_back(std::move(blocks));
  }
  return out;
}

Matrix jordan_matrix(const JordanStructure& j) {
  const std::size_t n = j.size();
  Matrix out(n, n);
  std::size_t at = 0;
  for (const auto& g : j.spectrum) {
    for (auto s : g.sizes) {
      for (std::size_t k = 0; k < s; ++k) {
        out(at + k, at + k) = g.eigenvalue;
        if (k + 1 < s) out(at + k + 1, at + k) = 1;
      }
      at += s;
    }
  }
  return out;
}

namespace {

struct Block {
  GaussianRational eigenvalue;
  std::size_t size;
};

std::vector<Block> flatten(const JordanStructure& j) {
  std::vector<Block> out;
  for (const auto& g : j.spectrum)
    for (auto s : g.sizes) out.push_back({g.eigenvalue, s});
  return out;
}

std::vector<std::size_t> sizes_of(const std::vector<Block>& bs) {
  std::vector<std::size_t> out;
  for (const auto& b : bs) out.push_back(b.size);
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool sizes_are(const JordanStructure& j, std::vector<std::size_t> want) {
  return sizes_of(flatten(j)) == want;
}

// The 2-block and the 1-block of a [2,1] structure.
std::pair<Block, Block> two_one(const JordanStructure& j) {
  auto bs = flatten(j);
  if (bs[0].size == 1) std::swap(bs[0], bs[1]);
  return {bs[0], bs[1]};
}

}  // namespace

const std::vector<JordanShape>& gder_h_shapes() {
  static const std::vector<JordanShape> shapes{
      {"diagonal", "diag(a, b, c)", [](const JordanStructure& j) { return sizes_are(j, {1, 1, 1}); }},
      {"block-2-1", "2-block at a, 1-block at b", [](const JordanStructure& j) { return sizes_are(j, {2, 1}); }},
      {"block-3", "3-block at a", [](const JordanStructure& j) { return sizes_are(j, {3}); }},
  };
  return shapes;
}

const std::vector<JordanShape>& gder_omega_h_shapes() {
  static const std::vector<JordanShape> shapes{
      {"diagonal-opposite-pair", "diag(a, -a, b)",
       [](const JordanStructure& j) {
         if (!sizes_are(j, {1, 1, 1})) return false;
         const auto bs = flatten(j);
         for (std::size_t p = 0; p < 3; ++p)
           for (std::size_t q = p + 1; q < 3; ++q)
             if ((bs[p].eigenvalue + bs[q].eigenvalue).is_zero()) return true;
         return false;
       }},
      {"block-2-opposite", "2-block at a, 1-block at -a",
       [](const JordanStructure& j) {
         if (!sizes_are(j, {2, 1})) return false;
         const auto [two, one] = two_one(j);
         return (two.eigenvalue + one.eigenvalue).is_zero();
       }},
      {"block-2-zero-1-nonzero", "2-block at 0, 1-block at c != 0",
       [](const JordanStructure& j) {
         if (!sizes_are(j, {2, 1})) return false;
         const auto [two, one] = two_one(j);
         return two.eigenvalue.is_zero() && !one.eigenvalue.is_zero();
       }},
      {"block-3-zero", "3-block at 0",
       [](const JordanStructure& j) { return sizes_are(j, {3}) && j.spectrum[0].eigenvalue.is_zero(); }},
  };
  return shapes;
}

std::optional<std::string> match_shape(const JordanStructure& j, const std::vector<JordanShape>& shapes) {
  for (const auto& s : shapes)
    if (s.matches(j)) return s.id;
  return std::nullopt;
}

std::string to_string(SampleMode m) {
  switch (m) {
    case SampleMode::even: return "even";
    case SampleMode::odd: return "odd";
    case SampleMode::mixed: return "mixed";
  }
  return "?";
}

SampleTally classify_samples(const MapSpace& space_even, const MapSpace& space_odd, std::size_t count,
                             std::uint64_t seed, const std::vector<JordanShape>& shapes) {
  const auto even = space_even.elements();
  const auto odd = space_odd.elements();
  if (even.empty() && odd.empty()) throw std::invalid_argument("cannot sample from the zero space");
  const std::size_t n = (even.empty() ? odd : even).front().matrix.rows();
  constexpr std::size_t max_redraws = 10000;

  std::mt19937_64 rng(seed);
  SampleTally tally;
  for (std::size_t s = 0; s < count; ++s) {
    auto mode = static_cast<SampleMode>(s % 3);
    if (mode == SampleMode::even && even.empty()) mode = SampleMode::odd;
    if (mode == SampleMode::odd && odd.empty()) mode = SampleMode::even;
    std::vector<const GradedMap*> pool;
    if (mode != SampleMode::odd)
      for (const auto& e : even) pool.push_back(&e);
    if (mode != SampleMode::even)
      for (const auto& e : odd) pool.push_back(&e);

    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == max_redraws) throw NotSplit("no split characteristic polynomial after repeated draws");
      Matrix m(n, n);
      for (const GradedMap* e : pool) {
        const GaussianRational c{mpq_class(uniform_int(rng, -3, 3)), mpq_class(uniform_int(rng, -3, 3))};
        if (!c.is_zero()) m += e->matrix * c;
      }
      if (m.is_zero()) continue;
      JordanStructure j;
      try {
        j = jordan_structure(m);
      } catch (const NotSplit&) {
        ++tally.not_split;
        continue;
      }
      ++tally.samples;
      ++tally.by_mode[to_string(mode)];
      ++tally.by_blocks[j.block_signature()];
      if (shapes.empty()) break;
      if (auto id = match_shape(j, shapes))
        ++tally.by_shape[*id];
      else
        tally.mismatches.push_back({mode, std::move(m), std::move(j)});
      break;
    }
  }
  return tally;
}

}  // namespace omegalie
