#include "brute_force.hpp"

#include <utility>

namespace oracle {

using omegalie::MapKind;
using omegalie::OmegaSuperAlgebra;
using omegalie::Parity;

namespace {

bool zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Column reduction: for each row, pick the first remaining column with a
// nonzero entry there and clear that row in every other remaining column.
std::vector<Vector> reduce_columns(std::vector<Vector> columns, std::size_t r,
                                   std::vector<bool>& is_pivot_column) {
  const std::size_t c = columns.size();
  is_pivot_column.assign(c, false);
  for (std::size_t row = 0; row < r; ++row) {
    std::size_t p = c;
    for (std::size_t k = 0; k < c; ++k) {
      if (!is_pivot_column[k] && !columns[k][row].is_zero()) {
        p = k;
        break;
      }
    }
    if (p == c) continue;
    is_pivot_column[p] = true;
    for (std::size_t k = 0; k < c; ++k) {
      if (k == p || is_pivot_column[k] || columns[k][row].is_zero()) continue;
      const GaussianRational f = columns[k][row] / columns[p][row];
      for (std::size_t e = 0; e < columns[k].size(); ++e)
        if (!columns[p][e].is_zero()) columns[k][e] -= f * columns[p][e];
    }
  }
  return columns;
}

/// Matrix entry (i, j) of n x n map within a flattened block.
std::size_t entry(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

Vector bracket(const OmegaSuperAlgebra& a, const Vector& u, const Vector& v) {
  const std::size_t n = a.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const GaussianRational f = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero()) out[k] += f * a.c(i, j, k);
    }
  }
  return out;
}

Vector apply(const std::vector<GaussianRational>& block, std::size_t n, const Vector& v) {
  Vector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!block[entry(n, i, j)].is_zero()) out[i] += block[entry(n, i, j)] * v[j];
  }
  return out;
}

Vector basis_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v[k] = 1;
  return v;
}

GaussianRational form(const OmegaSuperAlgebra& a, const Vector& u, const Vector& v) {
  GaussianRational s;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!v[j].is_zero() && !a.omega()(i, j).is_zero()) s += u[i] * a.omega()(i, j) * v[j];
  }
  return s;
}

std::size_t blocks_for(MapKind kind) {
  return kind == MapKind::gder ? 3 : kind == MapKind::qder ? 2 : 1;
}

/// Residual of the defining identity (plus compatibility of block 0) for the
/// given stacked maps, listed over all basis pairs.
Vector residual(const OmegaSuperAlgebra& a, MapKind kind, Parity degree, bool compatible,
                const std::vector<std::vector<GaussianRational>>& maps) {
  const std::size_t n = a.dim();
  Vector out;
  auto push = [&](const Vector& v) { out.insert(out.end(), v.begin(), v.end()); };
  const auto& d = maps[0];
  for (std::size_t i = 0; i < n; ++i) {
    const GaussianRational eps = (degree == Parity::odd && a.degree(i) == Parity::odd) ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = basis_vector(n, i), y = basis_vector(n, j);
      const Vector xy = bracket(a, x, y);
      const Vector dx_y = bracket(a, apply(d, n, x), y);
      const Vector x_dy = bracket(a, x, apply(d, n, y));
      Vector r(n), r2(n);
      switch (kind) {
        case MapKind::der: {
          const Vector dxy = apply(d, n, xy);
          for (std::size_t k = 0; k < n; ++k) r[k] = dxy[k] - dx_y[k] - eps * x_dy[k];
          push(r);
          break;
        }
        case MapKind::gder: {
          const Vector lhs = apply(maps[2], n, xy);
          const Vector x_d1y = bracket(a, x, apply(maps[1], n, y));
          for (std::size_t k = 0; k < n; ++k) r[k] = lhs[k] - dx_y[k] - eps * x_d1y[k];
          push(r);
          break;
        }
        case MapKind::qder: {
          const Vector lhs = apply(maps[1], n, xy);
          for (std::size_t k = 0; k < n; ++k) r[k] = lhs[k] - dx_y[k] - eps * x_dy[k];
          push(r);
          break;
        }
        case MapKind::cent: {
          const Vector dxy = apply(d, n, xy);
          for (std::size_t k = 0; k < n; ++k) {
            r[k] = dx_y[k] - eps * x_dy[k];
            r2[k] = dxy[k] - dx_y[k];
          }
          push(r);
          push(r2);
          break;
        }
        case MapKind::qcent:
          for (std::size_t k = 0; k < n; ++k) r[k] = dx_y[k] - eps * x_dy[k];
          push(r);
          break;
        case MapKind::zder:
          push(dx_y);
          push(apply(d, n, xy));
          break;
      }
      if (compatible) {
        out.push_back(form(a, apply(d, n, x), y) + eps * form(a, x, apply(d, n, y)));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t cols) {
  const std::size_t r = rows.size();
  std::vector<Vector> columns(cols, Vector(r + cols));
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t i = 0; i < r; ++i) columns[k][i] = rows[i][k];
    columns[k][r + k] = 1;
  }
  std::vector<bool> pivot;
  columns = reduce_columns(std::move(columns), r, pivot);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < cols; ++k) {
    if (pivot[k]) continue;
    // Non-pivot columns have a zero top part; their bottom part is a kernel vector.
    out.emplace_back(columns[k].begin() + static_cast<std::ptrdiff_t>(r), columns[k].end());
  }
  return out;
}

std::vector<Vector> canonical_basis(std::vector<Vector> vectors, std::size_t cols) {
  // Gauss-Jordan over the rows, written out independently.
  std::vector<Vector> rows;
  for (auto& v : vectors)
    if (!zero(v)) rows.push_back(std::move(v));
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t p = top;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[top]);
    const GaussianRational lead = rows[top][c];
    for (auto& x : rows[top]) x /= lead;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == top || rows[q][c].is_zero()) continue;
      const GaussianRational f = rows[q][c];
      for (std::size_t k = 0; k < cols; ++k) rows[q][k] -= f * rows[top][k];
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

std::vector<Vector> solve_space(const OmegaSuperAlgebra& a, MapKind kind, Parity degree,
                                bool compatible) {
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  const std::size_t blocks = blocks_for(kind);
  const std::size_t unknowns = blocks * nn;

  // Constraint columns: residual of the identity on each elementary map.
  std::vector<Vector> columns;
  for (std::size_t u = 0; u < unknowns; ++u) {
    std::vector<std::vector<GaussianRational>> maps(blocks, std::vector<GaussianRational>(nn));
    maps[u / nn][u % nn] = 1;
    columns.push_back(residual(a, kind, degree, compatible, maps));
  }
  std::vector<Vector> rows(columns.front().size(), Vector(unknowns));
  for (std::size_t u = 0; u < unknowns; ++u)
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r][u] = columns[u][r];

  // Homogeneity: entries of the wrong degree vanish in every block.
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool admissible = (a.degree(i) == a.degree(j)) == (degree == Parity::even);
        if (admissible) continue;
        Vector row(unknowns);
        row[b * nn + entry(n, i, j)] = 1;
        rows.push_back(std::move(row));
      }
    }
  }

  std::vector<Vector> d_block;
  for (const auto& v : nullspace(rows, unknowns)) d_block.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nn));
  return canonical_basis(std::move(d_block), nn);
}

std::vector<Vector> embed(const omegalie::MapSpace& space) {
  const std::size_t n = space.layout.n();
  std::vector<Vector> out;
  for (const auto& d : space.elements()) {
    Vector v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[entry(n, i, j)] = d.matrix(i, j);
    out.push_back(std::move(v));
  }
  return canonical_basis(std::move(out), n * n);
}

std::vector<Vector> center(const OmegaSuperAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = bracket(a, basis_vector(n, i), basis_vector(n, j))[k];
      rows.push_back(std::move(row));
    }
  }
  return canonical_basis(nullspace(rows, n), n);
}

std::size_t rank(const Matrix& m) {
  std::vector<Vector> columns(m.cols(), Vector(m.rows()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) columns[c][r] = m(r, c);
  std::vector<bool> pivot;
  reduce_columns(std::move(columns), m.rows(), pivot);
  std::size_t count = 0;
  for (bool p : pivot) count += p ? 1 : 0;
  return count;
}

GaussianRational determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  GaussianRational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    const GaussianRational term = m(0, c) * determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace oracle
