#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace omegalie {

/// Exact element a + b*i of Q(i). Both components are GMP rationals, which
/// keep themselves canonical (positive denominator, lowest terms) after every
/// arithmetic operation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: implicit from integers
  GaussianRational(mpq_class re, mpq_class im);

  /// Builds (re_num/re_den) + (im_num/im_den) i; throws std::domain_error on a
  /// zero denominator.
  static GaussianRational from_parts(const mpz_class& re_num, const mpz_class& re_den,
                                     const mpz_class& im_num, const mpz_class& im_den);
  static GaussianRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// a^2 + b^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Human-readable form such as "3/2-i" or "0".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Total order by (re, im); used for deterministic output ordering only.
bool lex_less(const GaussianRational& a, const GaussianRational& b);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace omegalie
