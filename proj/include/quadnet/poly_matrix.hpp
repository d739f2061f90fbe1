#pragma once

#include <cstddef>
#include <vector>

#include "quadnet/error.hpp"
#include "quadnet/poly.hpp"

namespace quadnet {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

namespace detail {
inline void check_square(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DimensionError("determinant of a non-square matrix");
}
}  // namespace detail

/// Fraction-free (Bareiss) determinant over Q[vars]. Every entry must share
/// one variable list; the empty matrix has no ring and is rejected.
inline MultiPoly det_poly_matrix(PolyMatrix m) {
  detail::check_square(m);
  const std::size_t n = m.size();
  if (n == 0) throw DimensionError("determinant of an empty matrix");
  const auto vars = m[0][0].variables();
  for (const auto& row : m)
    for (const auto& x : row)
      if (x.variables() != vars) throw InvalidArgument("matrix entries over different variable lists");
  MultiPoly prev = MultiPoly::constant(vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly(vars);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = detail::exact(num, prev);
      }
      m[i][k] = MultiPoly(vars);
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

/// Laplace expansion along the first row; exponential, used for small
/// matrices and as an independent check of Bareiss.
inline MultiPoly det_by_cofactors(const PolyMatrix& m) {
  detail::check_square(m);
  const std::size_t n = m.size();
  if (n == 0) throw DimensionError("determinant of an empty matrix");
  if (n == 1) return m[0][0];
  MultiPoly total(m[0][0].variables());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][c] * det_by_cofactors(minor);
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// Entry-wise evaluation at a point.
inline RationalMatrix evaluate(const PolyMatrix& m, const std::vector<Rational>& point) {
  RationalMatrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (const auto& x : m[r]) out[r].push_back(x.evaluate(point));
  return out;
}

/// Every k x k minor of m (rows and columns in increasing index order).
inline std::vector<MultiPoly> all_minors(const PolyMatrix& m, std::size_t k) {
  detail::check_square(m);
  const std::size_t n = m.size();
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      subsets.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<MultiPoly> out;
  out.reserve(subsets.size() * subsets.size());
  for (const auto& rows : subsets)
    for (const auto& cols : subsets) {
      PolyMatrix sub;
      for (auto r : rows) {
        std::vector<MultiPoly> row;
        for (auto c : cols) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      out.push_back(det_poly_matrix(std::move(sub)));
    }
  return out;
}

}  // namespace quadnet
