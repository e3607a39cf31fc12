#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "omegalie/matrix.hpp"

namespace omegalie {

/// A linear subspace of Q(i)^n held by its reduced row echelon basis. The
/// RREF basis is unique, so two subspaces are equal exactly when their
/// representations compare equal field by field.
class Subspace {
 public:
  /// The zero subspace of Q(i)^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_full() const noexcept { return basis_.size() == ambient_dim_; }

  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const noexcept { return pivot_cols_; }
  Matrix basis_matrix() const { return Matrix::from_rows(ambient_dim_, basis_); }

  /// v minus its reduction against the basis; zero iff v lies in the space.
  Vector residual(std::span<const GaussianRational> v) const;
  bool contains(std::span<const GaussianRational> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivot_cols_;
};

/// {v : M v = 0}.
Subspace kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const GaussianRational> v);
/// Image of `a` under restriction to the listed coordinates, in that order.
Subspace subspace_project(const Subspace& a, std::span<const std::size_t> coords);

/// {w : <w, v> = 0 for all v in a} under the bilinear pairing sum w_k v_k.
Subspace annihilator(const Subspace& a);

}  // namespace omegalie
