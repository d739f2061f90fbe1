#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "quadnet/error.hpp"
#include "quadnet/rational.hpp"

namespace quadnet {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

struct EchelonForm {
  RationalMatrix rows;       ///< nonzero rows of the reduced echelon form, in pivot order
  std::vector<int> pivots;   ///< pivot column (original index) of each row
};

inline std::size_t column_count(const RationalMatrix& m) { return m.empty() ? 0 : m.front().size(); }

/// Reduced row echelon form where columns are visited in `order` (a
/// permutation of the column indices). Each pivot is scaled to 1 and cleared
/// from every other row.
inline EchelonForm reduced_echelon(RationalMatrix m, const std::vector<int>& order) {
  EchelonForm out;
  std::size_t next = 0;
  for (int col : order) {
    if (next == m.size()) break;
    std::size_t p = next;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[next]);
    Rational inv = 1 / m[next][col];
    for (auto& x : m[next]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[next][c];
    }
    out.pivots.push_back(col);
    ++next;
  }
  m.resize(next);
  out.rows = std::move(m);
  return out;
}

inline std::vector<int> natural_order(std::size_t n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

inline EchelonForm reduced_echelon(const RationalMatrix& m) {
  return reduced_echelon(m, natural_order(column_count(m)));
}

inline int rank(const RationalMatrix& m) { return static_cast<int>(reduced_echelon(m).rows.size()); }

/// Basis of { x : m x = 0 }, one vector per free column.
inline RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns) {
  RationalMatrix padded = m;
  for (auto& row : padded) row.resize(columns);
  auto ech = reduced_echelon(padded, natural_order(columns));
  std::vector<bool> is_pivot(columns, false);
  for (int p : ech.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(columns, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < ech.rows.size(); ++r) x[ech.pivots[r]] = -ech.rows[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// A solution of m x = b with free variables set to zero, if one exists.
inline std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (m.size() != b.size()) throw DimensionError("solve: row count mismatch");
  const std::size_t n = column_count(m);
  RationalMatrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto ech = reduced_echelon(aug, natural_order(n + 1));
  RationalVector x(n, 0);
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    if (ech.pivots[r] == static_cast<int>(n)) return std::nullopt;
    x[ech.pivots[r]] = ech.rows[r][n];
  }
  return x;
}

inline Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

inline RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(column_count(m), RationalVector(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
  return t;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = column_count(a);
  if (inner != b.size()) throw DimensionError("multiply: inner dimension mismatch");
  RationalMatrix out(a.size(), RationalVector(column_count(b), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug = m;
  for (std::size_t r = 0; r < n; ++r) {
    if (aug[r].size() != n) throw DimensionError("inverse of a non-square matrix");
    aug[r].resize(2 * n, 0);
    aug[r][n + r] = 1;
  }
  auto ech = reduced_echelon(aug, natural_order(2 * n));
  if (ech.rows.size() < n || ech.pivots[n - 1] >= static_cast<int>(n)) return std::nullopt;
  RationalMatrix inv(n);
  for (std::size_t r = 0; r < n; ++r) inv[r].assign(ech.rows[r].begin() + n, ech.rows[r].end());
  return inv;
}

/// dim(rowspace(a) ∩ rowspace(b)).
inline int intersection_dimension(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(a) + rank(b) - rank(both);
}

/// dim of { v in rowspace(m) : v_j = 0 for every j with !allowed[j] }.
inline int dimension_within_support(const RationalMatrix& m, const std::vector<bool>& allowed) {
  RationalMatrix outside;
  outside.reserve(m.size());
  for (const auto& row : m) {
    RationalVector r;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!allowed[j]) r.push_back(row[j]);
    outside.push_back(std::move(r));
  }
  return rank(m) - (outside.empty() || outside.front().empty() ? 0 : rank(outside));
}

}  // namespace quadnet
