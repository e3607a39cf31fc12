#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omegalie/gaussian_rational.hpp"

namespace omegalie {

using Vector = std::vector<GaussianRational>;

bool is_zero(std::span<const GaussianRational> v);
Vector unit_vector(std::size_t n, std::size_t k);

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Stacks `rows` (each of length `cols`); `cols` is explicit so that a
  /// matrix with zero rows still knows its width.
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const GaussianRational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<GaussianRational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  void append_row(std::span<const GaussianRational> values);

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix power(unsigned k) const;
  Vector apply(std::span<const GaussianRational> v) const;
  GaussianRational trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussianRational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const GaussianRational& s) { return a *= s; }
  friend Matrix operator*(const GaussianRational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivots are chosen by scanning columns left to
/// right and taking the first nonzero entry at or below the current row.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace omegalie
