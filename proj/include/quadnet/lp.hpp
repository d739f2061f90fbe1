#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "quadnet/error.hpp"
#include "quadnet/linalg.hpp"

namespace quadnet::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  RationalVector x;     ///< primal solution (optimal only)
  RationalVector dual;  ///< y with yᵀA_j <= c_j; for infeasible: Farkas ray with yᵀA <= 0, yᵀb > 0
  Rational value;       ///< cᵀx, or the phase-one infeasibility when infeasible
};

/// Two-phase tableau simplex over the rationals with Bland's rule for
///   minimize cᵀx  subject to  A x = b, x >= 0.
inline Result solve_standard(const RationalMatrix& A, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = A.size();
  const std::size_t n = column_count(A);
  if (b.size() != m || c.size() != n) throw DimensionError("lp: inconsistent dimensions");
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;

  std::vector<int> flip(m, 1);
  RationalMatrix t(m, RationalVector(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) flip[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip[i] * A[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = flip[i] * b[i];
    basis[i] = n + i;
  }

  auto pivot = [&](std::size_t row, std::size_t col) {
    Rational inv = 1 / t[row][col];
    for (auto& x : t[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(t[i][col]) == 0) continue;
      Rational f = t[i][col];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t[row][j]) != 0) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  };

  // Returns false when unbounded.
  auto run = [&](const RationalVector& cost, std::size_t entering_limit) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < entering_limit && !enter; ++j) {
        if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < m; ++i)
          if (sgn(t[i][j]) != 0) r -= cost[basis[i]] * t[i][j];
        if (sgn(r) < 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(t[i][*enter]) <= 0) continue;
        Rational ratio = t[i][rhs] / t[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  };

  auto duals = [&](const RationalVector& cost) {
    RationalVector y(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < m; ++i) y[k] += cost[basis[i]] * t[i][n + k];
      y[k] *= flip[k];
    }
    return y;
  };

  RationalVector phase1(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  run(phase1, n + m);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) infeasibility += phase1[basis[i]] * t[i][rhs];
  if (sgn(infeasibility) > 0) {
    Result r;
    r.status = Status::infeasible;
    // Optimal phase-one duals satisfy yᵀA <= 0 and yᵀb = infeasibility > 0.
    r.dual = duals(phase1);
    r.value = infeasibility;
    return r;
  }

  // Drive zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(t[i][j]) != 0 && std::find(basis.begin(), basis.end(), j) == basis.end()) {
        pivot(i, j);
        break;
      }
  }

  RationalVector phase2(n + m, 0);
  std::copy(c.begin(), c.end(), phase2.begin());
  Result r;
  if (!run(phase2, n)) {
    r.status = Status::unbounded;
    return r;
  }
  r.status = Status::optimal;
  r.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) r.x[basis[i]] = t[i][rhs];
  r.value = 0;
  for (std::size_t j = 0; j < n; ++j) r.value += c[j] * r.x[j];
  r.dual = duals(phase2);
  return r;
}

/// Minimum-norm point of conv(points) by Wolfe's algorithm in exact
/// arithmetic. Returns the point and its convex weights (indexed like
/// `points`).
struct MinNormPoint {
  RationalVector point;
  RationalVector weights;
};

inline MinNormPoint min_norm_point(const RationalMatrix& points) {
  if (points.empty()) throw InvalidArgument("min_norm_point of an empty set");
  const std::size_t dim = points.front().size();
  auto dot = [](const RationalVector& u, const RationalVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
  };
  auto combine = [&](const std::vector<std::size_t>& idx, const RationalVector& w) {
    RationalVector x(dim, 0);
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t d = 0; d < dim; ++d) x[d] += w[k] * points[idx[k]][d];
    return x;
  };

  std::size_t start = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (dot(points[i], points[i]) < dot(points[start], points[start])) start = i;
  std::vector<std::size_t> active{start};
  RationalVector w{Rational(1)};
  RationalVector x = points[start];

  while (true) {
    std::size_t j = 0;
    Rational best = dot(x, points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
      Rational v = dot(x, points[i]);
      if (v < best) {
        best = v;
        j = i;
      }
    }
    if (best >= dot(x, x) || std::find(active.begin(), active.end(), j) != active.end()) break;
    active.push_back(j);
    w.push_back(0);

    while (true) {
      // Affine minimizer: [PᵀP 1; 1ᵀ 0] [alpha; lambda] = [0; 1].
      const std::size_t k = active.size();
      RationalMatrix sys(k + 1, RationalVector(k + 1, 0));
      RationalVector rhs(k + 1, 0);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t s = 0; s < k; ++s) sys[r][s] = dot(points[active[r]], points[active[s]]);
        sys[r][k] = 1;
        sys[k][r] = 1;
      }
      rhs[k] = 1;
      auto sol = solve(sys, rhs);
      if (!sol) throw Error("internal: affine min-norm system inconsistent");
      RationalVector alpha(sol->begin(), sol->begin() + static_cast<long>(k));
      if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return sgn(a) > 0; })) {
        w = alpha;
        x = combine(active, w);
        break;
      }
      Rational theta = 1;
      for (std::size_t r = 0; r < k; ++r)
        if (sgn(alpha[r]) <= 0 && w[r] != alpha[r]) theta = std::min(theta, Rational(w[r] / (w[r] - alpha[r])));
      for (std::size_t r = 0; r < k; ++r) w[r] = (1 - theta) * w[r] + theta * alpha[r];
      std::vector<std::size_t> keep_idx;
      RationalVector keep_w;
      for (std::size_t r = 0; r < k; ++r)
        if (sgn(w[r]) > 0) {
          keep_idx.push_back(active[r]);
          keep_w.push_back(w[r]);
        }
      active = std::move(keep_idx);
      w = std::move(keep_w);
      x = combine(active, w);
      if (active.size() == 1) break;
    }
  }

  MinNormPoint out;
  out.point = x;
  out.weights.assign(points.size(), 0);
  for (std::size_t k = 0; k < active.size(); ++k) out.weights[active[k]] = w[k];
  return out;
}

}  // namespace quadnet::lp
