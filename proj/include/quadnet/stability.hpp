#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadnet/error.hpp"
#include "quadnet/linalg.hpp"
#include "quadnet/lp.hpp"
#include "quadnet/net.hpp"

namespace quadnet {

using Weights = std::array<long long, kVariables>;

/// Diagonal one-parameter subgroup of SL(5): integer weights on a..e with
/// zero sum, not all zero.
class OneParamSubgroup {
 public:
  OneParamSubgroup(long long a, long long b, long long c, long long d, long long e)
      : OneParamSubgroup(Weights{a, b, c, d, e}) {}
  explicit OneParamSubgroup(const Weights& w) : w_(w) {
    long long s = 0;
    bool nonzero = false;
    for (auto x : w_) {
      s += x;
      nonzero = nonzero || x != 0;
    }
    if (s != 0) throw InvalidArgument("one-parameter subgroup weights must sum to zero");
    if (!nonzero) throw InvalidArgument("one-parameter subgroup weights must not all vanish");
  }

  const Weights& weights() const { return w_; }
  long long operator[](int i) const { return w_[i]; }
  bool is_normalized() const { return std::is_sorted(w_.rbegin(), w_.rend()); }
  long long norm_squared() const {
    long long s = 0;
    for (auto x : w_) s += x * x;
    return s;
  }
  OneParamSubgroup scaled(long long k) const {
    if (k <= 0) throw InvalidArgument("scale must be positive");
    Weights w = w_;
    for (auto& x : w) x *= k;
    return OneParamSubgroup(w);
  }
  OneParamSubgroup inverse() const {
    Weights w = w_;
    for (auto& x : w) x = -x;
    return OneParamSubgroup(w);
  }
  /// Weights sorted into non-increasing order.
  OneParamSubgroup sorted() const {
    Weights w = w_;
    std::sort(w.rbegin(), w.rend());
    return OneParamSubgroup(w);
  }
  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < kVariables; ++i) s += (i ? "," : "") + std::to_string(w_[i]);
    return s + ")";
  }
  friend bool operator==(const OneParamSubgroup& a, const OneParamSubgroup& b) { return a.w_ == b.w_; }

 private:
  Weights w_;
};

/// ρ₁ … ρ₁₂, the numerical types whose semi-stability implies semi-stability.
inline const std::vector<OneParamSubgroup>& twelve_types() {
  static const std::vector<OneParamSubgroup> types{
      {1, 1, 1, 1, -4},   {2, 2, 2, -3, -3},    {3, 3, -2, -2, -2},  {4, -1, -1, -1, -1},
      {3, 3, 3, -2, -7},  {4, 4, -1, -1, -6},   {9, 4, -1, -6, -6},  {7, 2, 2, -3, -8},
      {12, 7, 2, -8, -13}, {9, 4, -1, -1, -11}, {14, 4, -1, -6, -11}, {13, 8, 3, -7, -17}};
  return types;
}

inline const OneParamSubgroup& twelve_type(int k) {
  if (k < 1 || k > 12) throw InvalidArgument("subgroup type must be in 1..12");
  return twelve_types()[k - 1];
}

/// 1-based index of the type whose sorted weights equal rho's, if any.
inline std::optional<int> numerical_type(const OneParamSubgroup& rho) {
  const auto s = rho.sorted();
  for (int k = 1; k <= 12; ++k)
    if (twelve_type(k) == s) return k;
  return std::nullopt;
}

/// All distinct rearrangements of rho's weights, in lexicographically
/// decreasing order of the weight vector.
inline std::vector<OneParamSubgroup> distinct_permutations(const OneParamSubgroup& rho) {
  Weights w = rho.sorted().weights();
  std::vector<OneParamSubgroup> out;
  do {
    out.emplace_back(w);
  } while (std::prev_permutation(w.begin(), w.end()));
  return out;
}

inline long long monomial_weight(Monomial2 m, const OneParamSubgroup& rho) {
  return rho[m.first()] + rho[m.second()];
}

using WeightTriple = std::array<long long, 3>;

/// Column order by weight (descending for >_rho), ties broken lex.
inline std::vector<int> weight_order(const OneParamSubgroup& rho, bool descending = true) {
  std::vector<int> order = natural_order(kQuadraticMonomials);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const auto wx = monomial_weight(Monomial2(x), rho), wy = monomial_weight(Monomial2(y), rho);
    return descending ? wx > wy : wx < wy;
  });
  return order;
}

/// Sorted weights of the pivot monomials of the >_rho echelon basis.
inline WeightTriple initial_weights(const Net& n, const OneParamSubgroup& rho) {
  auto ech = reduced_echelon(n.coefficient_matrix(), weight_order(rho));
  WeightTriple t{};
  for (int i = 0; i < 3; ++i) t[i] = monomial_weight(Monomial2(ech.pivots[i]), rho);
  std::sort(t.rbegin(), t.rend());
  return t;
}

/// Distinct weight vectors (sum of the three exponent vectors) of the
/// nonvanishing Plücker coordinates. Every vector has coordinate sum 6.
class WeightProfile {
 public:
  explicit WeightProfile(const Net& n) {
    for (const auto& t : plucker_support(n)) {
      std::array<int, kVariables> v{};
      for (int idx : t) {
        Monomial2 m(idx);
        ++v[m.first()];
        ++v[m.second()];
      }
      vectors_.push_back(v);
    }
    std::sort(vectors_.begin(), vectors_.end());
    vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
  }
  const std::vector<std::array<int, kVariables>>& vectors() const { return vectors_; }

  long long mu(const OneParamSubgroup& rho) const {
    long long best = 0;
    bool first = true;
    for (const auto& v : vectors_) {
      long long s = 0;
      for (int i = 0; i < kVariables; ++i) s += v[i] * rho[i];
      if (first || s > best) best = s;
      first = false;
    }
    return best;
  }

 private:
  std::vector<std::array<int, kVariables>> vectors_;
};

/// Maximum rho-weight of a nonvanishing Plücker coordinate. The net is
/// rho-semi-stable iff mu >= 0 and rho-stable iff mu > 0.
inline long long mu(const Net& n, const OneParamSubgroup& rho) { return WeightProfile(n).mu(rho); }

enum class StabilityStatus { stable, strictly_semistable, unstable };
enum class Method { twelve_type, polytope };

inline std::string to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::stable: return "stable";
    case StabilityStatus::strictly_semistable: return "strictly-semistable";
    case StabilityStatus::unstable: return "unstable";
  }
  return "?";
}
inline std::string to_string(Method m) { return m == Method::twelve_type ? "twelve-type" : "polytope"; }

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::stable;
  long long worst_mu = 0;
  std::optional<OneParamSubgroup> certificate;
  std::optional<int> certificate_type;  ///< k when the certificate is a rearranged ρ_k
  Method method = Method::twelve_type;
  bool probabilistic = false;

  bool semistable() const { return status != StabilityStatus::unstable; }
};

/// Hilbert–Mumford index normalized by |rho|: a < b compares mu/|rho| exactly.
struct NormalizedIndex {
  long long mu;
  long long norm_squared;

  friend bool operator<(const NormalizedIndex& a, const NormalizedIndex& b) {
    const int sa = (a.mu > 0) - (a.mu < 0), sb = (b.mu > 0) - (b.mu < 0);
    if (sa != sb) return sa < sb;
    if (sa == 0) return false;
    const __int128 lhs = static_cast<__int128>(a.mu) * a.mu * b.norm_squared;
    const __int128 rhs = static_cast<__int128>(b.mu) * b.mu * a.norm_squared;
    return sa < 0 ? lhs > rhs : lhs < rhs;
  }
};

struct ScanResult {
  OneParamSubgroup argmin;
  int type;
  long long mu;
};

enum class PermutationMode { all, identity };

/// Scans ρ_1..ρ_{max_type} (every distinct rearrangement, or the given order
/// only) and returns the subgroup minimizing mu/|rho|; ties keep scan order.
inline ScanResult scan_types(const WeightProfile& profile, int max_type = 12,
                             PermutationMode mode = PermutationMode::all) {
  std::optional<ScanResult> best;
  std::optional<NormalizedIndex> best_index;
  for (int k = 1; k <= max_type; ++k) {
    const auto& rho = twelve_type(k);
    const auto candidates =
        mode == PermutationMode::all ? distinct_permutations(rho) : std::vector<OneParamSubgroup>{rho};
    for (const auto& p : candidates) {
      NormalizedIndex idx{profile.mu(p), p.norm_squared()};
      if (!best_index || idx < *best_index) {
        best_index = idx;
        best = ScanResult{p, k, idx.mu};
      }
    }
  }
  if (!best) throw InvalidArgument("empty subgroup scan");
  return *best;
}

namespace detail {

inline OneParamSubgroup subgroup_from_rational(const RationalVector& v) {
  auto z = primitive_integer_vector(v);
  Weights w{};
  for (int i = 0; i < kVariables; ++i) {
    if (!z[i].fits_slong_p()) throw Error("certificate weight overflows 64-bit integers");
    w[i] = z[i].get_si();
  }
  // primitive_integer_vector fixes the sign of the first nonzero entry; undo that.
  for (int i = 0; i < kVariables; ++i)
    if (sgn(v[i]) != 0) {
      if ((sgn(v[i]) > 0) != (w[i] > 0))
        for (auto& x : w) x = -x;
      break;
    }
  return OneParamSubgroup(w);
}

inline RationalVector centered(const RationalVector& y) {
  Rational mean = 0;
  for (const auto& x : y) mean += x;
  mean /= static_cast<long>(y.size());
  RationalVector out = y;
  for (auto& x : out) x -= mean;
  return out;
}

}  // namespace detail

/// Exact analysis of the barycenter (6/5,…,6/5) against the convex hull of
/// the Plücker weight vectors.
struct PolytopeAnalysis {
  bool feasible = false;   ///< barycenter in the hull: torus semi-stable
  bool interior = false;   ///< barycenter in the interior of the sum-6 hyperplane: torus stable
  std::optional<OneParamSubgroup> destabilizer;  ///< Kempf direction (unstable)
  std::optional<OneParamSubgroup> farkas;        ///< simplex dual ray (unstable)
  std::optional<OneParamSubgroup> boundary;      ///< mu = 0 witness (strictly semi-stable)
};

inline PolytopeAnalysis analyze_polytope(const WeightProfile& profile) {
  const auto& vs = profile.vectors();
  const std::size_t count = vs.size();
  RationalMatrix A(kVariables, RationalVector(count));
  for (std::size_t j = 0; j < count; ++j)
    for (int i = 0; i < kVariables; ++i) A[i][j] = vs[j][i];
  const RationalVector b(kVariables, Rational(6, 5));

  PolytopeAnalysis out;
  auto feas = lp::solve_standard(A, b, RationalVector(count, 0));
  out.feasible = feas.status == lp::Status::optimal;
  if (!out.feasible) {
    // Farkas ray: yᵀv <= 0 and yᵀb > 0, so (y - mean(y))·v = yᵀv - yᵀb < 0.
    out.farkas = detail::subgroup_from_rational(detail::centered(feas.dual));
    RationalMatrix shifted;
    for (const auto& v : vs) {
      RationalVector p(kVariables);
      for (int i = 0; i < kVariables; ++i) p[i] = 5 * v[i] - 6;
      shifted.push_back(std::move(p));
    }
    auto mnp = lp::min_norm_point(shifted);
    for (auto& x : mnp.point) x = -x;
    out.destabilizer = detail::subgroup_from_rational(mnp.point);
    return out;
  }

  // Affine hull normal(s) inside the sum-zero hyperplane.
  RationalMatrix rel;
  for (std::size_t j = 1; j < count; ++j) {
    RationalVector d(kVariables);
    for (int i = 0; i < kVariables; ++i) d[i] = vs[j][i] - vs[0][i];
    rel.push_back(std::move(d));
  }
  rel.push_back(RationalVector(kVariables, 1));
  auto normals = nullspace(rel, kVariables);
  if (!normals.empty()) {
    out.interior = false;
    out.boundary = detail::subgroup_from_rational(normals.front());
    return out;
  }

  // Full-dimensional hull: maximize t with lambda_i = t + s_i.
  RationalMatrix B = A;
  for (int i = 0; i < kVariables; ++i) {
    Rational total = 0;
    for (std::size_t j = 0; j < count; ++j) total += A[i][j];
    B[i].push_back(total);
  }
  RationalVector cost(count + 1, 0);
  cost[count] = -1;
  auto rel_int = lp::solve_standard(B, b, cost);
  if (rel_int.status != lp::Status::optimal) throw Error("internal: relative-interior LP failed");
  out.interior = sgn(rel_int.value) < 0;
  if (!out.interior) {
    // Dual: yᵀv_j <= 0, so (y - mean) has mu = 0 with some v strictly negative.
    out.boundary = detail::subgroup_from_rational(detail::centered(rel_int.dual));
  }
  return out;
}

inline StabilityVerdict state_polytope_check(const Net& n) {
  const WeightProfile profile(n);
  const auto pa = analyze_polytope(profile);
  StabilityVerdict v;
  v.method = Method::polytope;
  if (!pa.feasible) {
    v.status = StabilityStatus::unstable;
    v.certificate = pa.destabilizer;
    v.worst_mu = profile.mu(*pa.destabilizer);
  } else if (!pa.interior) {
    v.status = StabilityStatus::strictly_semistable;
    v.certificate = pa.boundary;
    v.worst_mu = 0;
  } else {
    v.status = StabilityStatus::stable;
    v.worst_mu = scan_types(profile).mu;
  }
  if (v.certificate) v.certificate_type = numerical_type(*v.certificate);
  return v;
}

/// Semi-stable vs unstable from the 12 types; stable vs strictly
/// semi-stable from polytope interior membership.
inline StabilityVerdict twelve_type_check(const Net& n, PermutationMode mode = PermutationMode::all) {
  const WeightProfile profile(n);
  const auto scan = scan_types(profile, 12, mode);
  StabilityVerdict v;
  v.method = Method::twelve_type;
  v.worst_mu = scan.mu;
  v.certificate = scan.argmin;
  v.certificate_type = scan.type;
  if (scan.mu < 0) {
    v.status = StabilityStatus::unstable;
    return v;
  }
  if (scan.mu == 0) {
    v.status = StabilityStatus::strictly_semistable;
    return v;
  }
  const auto pa = analyze_polytope(profile);
  if (pa.feasible && !pa.interior) {
    v.status = StabilityStatus::strictly_semistable;
    v.worst_mu = 0;
    v.certificate = pa.boundary;
    v.certificate_type = numerical_type(*pa.boundary);
  } else {
    v.status = StabilityStatus::stable;
    v.certificate.reset();
    v.certificate_type.reset();
  }
  return v;
}

/// True iff rho(t)·Λ = Λ: every weight component of every basis quadric
/// lies in the net.
inline bool stabilizing_subgroup_check(const Net& n, const OneParamSubgroup& rho) {
  const auto m = n.coefficient_matrix();
  RationalMatrix all = m;
  for (const auto& row : m) {
    std::vector<long long> seen;
    for (int i = 0; i < kQuadraticMonomials; ++i) {
      const auto w = monomial_weight(Monomial2(i), rho);
      if (sgn(row[i]) == 0 || std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
      seen.push_back(w);
      RationalVector part(kQuadraticMonomials, 0);
      for (int j = 0; j < kQuadraticMonomials; ++j)
        if (monomial_weight(Monomial2(j), rho) == w) part[j] = row[j];
      all.push_back(std::move(part));
    }
  }
  return rank(all) == 3;
}

enum class LimitDirection { to_zero, to_infinity };

/// Flat limit of rho(t)·Λ: keeps the extreme-weight part of each echelon
/// row (maximal weight toward infinity, minimal toward zero).
inline Net one_param_limit(const Net& n, const OneParamSubgroup& rho, LimitDirection dir) {
  const bool top = dir == LimitDirection::to_infinity;
  auto ech = reduced_echelon(n.coefficient_matrix(), weight_order(rho, top));
  std::vector<QuadraticForm> rows;
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    const auto w = monomial_weight(Monomial2(ech.pivots[r]), rho);
    RationalVector kept(kQuadraticMonomials, 0);
    for (int j = 0; j < kQuadraticMonomials; ++j)
      if (monomial_weight(Monomial2(j), rho) == w) kept[j] = ech.rows[r][j];
    rows.emplace_back(std::move(kept));
  }
  return Net(std::move(rows));
}

/// Achievable weights with the number of monomials carrying each.
inline std::vector<std::pair<long long, int>> weight_multiplicities(const OneParamSubgroup& rho) {
  std::vector<std::pair<long long, int>> out;
  for (const auto& m : all_monomials()) {
    const auto w = monomial_weight(m, rho);
    auto it = std::find_if(out.begin(), out.end(), [w](const auto& p) { return p.first == w; });
    if (it == out.end())
      out.emplace_back(w, 1);
    else
      ++it->second;
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// A non-increasing triple is achievable when each weight value occurs at
/// most as often as there are monomials of that weight.
inline bool achievable(const OneParamSubgroup& rho, const WeightTriple& t) {
  if (!(t[0] >= t[1] && t[1] >= t[2])) return false;
  const auto mult = weight_multiplicities(rho);
  for (int i = 0; i < 3; ++i) {
    const auto need = std::count(t.begin(), t.end(), t[i]);
    auto it = std::find_if(mult.begin(), mult.end(), [&](const auto& p) { return p.first == t[i]; });
    if (it == mult.end() || it->second < need) return false;
  }
  return true;
}

/// Whether a triple of initial weights passes conditions (C1)–(C4) for a
/// normalized rho, i.e. is compatible with ρ_1..ρ_4 semi-stability.
inline bool passes_initial_weight_conditions(const OneParamSubgroup& rho, const WeightTriple& t) {
  const long long a = rho[0], b = rho[1], c = rho[2], d = rho[3], e = rho[4];
  const long long w1 = t[0], w2 = t[1], w3 = t[2];
  if (d != e && !(w3 > 2 * e)) return false;                          // C1
  if (!(w1 >= 2 * c)) return false;                                   // C2
  if (w2 < 2 * c && !(w3 >= c + e)) return false;
  if (!(w2 >= b + e)) return false;                                   // C3
  if (w1 < 2 * b && !(w2 >= a + e && w3 >= b + e)) return false;
  if (w1 != 2 * a && !(w1 >= a + d && w2 >= a + e)) return false;     // C4
  return true;
}

/// Triples of initial weights with negative sum that pass (C1)–(C4),
/// in decreasing lex order.
inline std::vector<WeightTriple> enumerate_candidate_triples(const OneParamSubgroup& rho) {
  if (!rho.is_normalized()) throw InvalidArgument("enumerate_candidate_triples requires a normalized subgroup");
  const auto mult = weight_multiplicities(rho);
  std::vector<WeightTriple> out;
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (std::size_t j = i; j < mult.size(); ++j)
      for (std::size_t k = j; k < mult.size(); ++k) {
        WeightTriple t{mult[i].first, mult[j].first, mult[k].first};
        if (t[0] + t[1] + t[2] >= 0) continue;
        if (!achievable(rho, t) || !passes_initial_weight_conditions(rho, t)) continue;
        out.push_back(t);
      }
  return out;
}

/// A net whose initial weights under rho equal `triple`: generator i is a
/// random combination (coefficients in ±1..±3) of every monomial of weight
/// <= triple[i]. Deterministic in `seed`.
inline Net generic_stratum_net(const OneParamSubgroup& rho, const WeightTriple& triple, std::uint64_t seed) {
  if (!achievable(rho, triple)) throw InvalidArgument("weight triple is not achievable for this subgroup");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> mag(1, 3), sign(0, 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<QuadraticForm> rows;
    for (int i = 0; i < 3; ++i) {
      RationalVector c(kQuadraticMonomials, 0);
      for (int j = 0; j < kQuadraticMonomials; ++j)
        if (monomial_weight(Monomial2(j), rho) <= triple[i]) c[j] = mag(rng) * (sign(rng) ? 1 : -1);
      rows.emplace_back(std::move(c));
    }
    if (rank(detail::coefficient_rows(rows)) < 3) continue;
    Net n(std::move(rows));
    if (initial_weights(n, rho) == triple) return n;
  }
  throw Error("generic_stratum_net: no representative found");
}

/// Copies of `n` in coordinates adapted to the equal-weight blocks of rho.
/// For a block B, a generator and a variable x outside B, the initial form's
/// part x*(sum v_y y, y in B) is turned into x*y0 by a change of coordinates
/// inside B. Such changes commute with rho, so every copy lies in the same
/// stratum and the same orbit as `n`.
inline std::vector<Net> levi_adapted_nets(const Net& n, const OneParamSubgroup& rho) {
  const auto& w = rho.weights();
  std::vector<Net> out;
  for (int y0 = 0; y0 < kVariables; ++y0) {
    std::vector<int> block;
    for (int y = 0; y < kVariables; ++y)
      if (w[y] == w[y0]) block.push_back(y);
    if (block.size() < 2) continue;
    for (const auto& q : n.basis()) {
      long long top = 0;
      bool any = false;
      for (int j = 0; j < kQuadraticMonomials; ++j)
        if (sgn(q.coefficients()[j]) != 0) {
          const long long mw = monomial_weight(Monomial2(j), rho);
          top = any ? std::max(top, mw) : mw;
          any = true;
        }
      for (int x = 0; x < kVariables; ++x) {
        if (w[x] == w[y0] || w[x] + w[y0] != top) continue;
        RationalVector v(kVariables, 0);
        for (int y : block) v[y] = q[Monomial2::from_pair(x, y)];
        if (sgn(v[y0]) == 0) continue;
        // Old y0 = (y0' - sum_{y != y0} v_y y') / v_y0.
        RationalMatrix g(kVariables, RationalVector(kVariables, 0));
        for (int i = 0; i < kVariables; ++i) g[i][i] = 1;
        for (int y : block) g[y0][y] = y == y0 ? Rational(1 / v[y0]) : Rational(-v[y] / v[y0]);
        const CoordinateChange change(g);
        std::vector<QuadraticForm> rows;
        for (const auto& r : n.basis()) rows.push_back(change.apply(r));
        out.emplace_back(std::move(rows));
      }
    }
  }
  return out;
}

struct RefinedTriples {
  std::vector<WeightTriple> triples;
  bool probabilistic = true;
};

/// Drops each candidate whose stratum representatives (one per seed) are all
/// destabilized by some rearrangement of ρ_1..ρ_{k-1}. A representative counts
/// as destabilized when it or one of its Levi-adapted copies is: instability
/// does not depend on coordinates, and a random representative rarely sits in
/// coordinates where a torus subgroup sees it.
inline RefinedTriples refine_triples_by_cross_elimination(int k, const std::vector<WeightTriple>& candidates,
                                                          const std::vector<std::uint64_t>& seeds) {
  if (k < 5 || k > 12) throw InvalidArgument("cross-elimination applies to types 5..12");
  if (seeds.empty()) throw InvalidArgument("cross-elimination needs at least one seed");
  const auto& rho = twelve_type(k);
  RefinedTriples out;
  for (const auto& t : candidates) {
    bool all_destabilized = true;
    for (auto s : seeds) {
      const Net n = generic_stratum_net(rho, t, s);
      bool destabilized = scan_types(WeightProfile(n), k - 1).mu < 0;
      if (!destabilized)
        for (const auto& m : levi_adapted_nets(n, rho))
          if (scan_types(WeightProfile(m), k - 1).mu < 0) {
            destabilized = true;
            break;
          }
      if (!destabilized) {
        all_destabilized = false;
        break;
      }
    }
    if (!all_destabilized) out.triples.push_back(t);
  }
  return out;
}

inline std::vector<std::uint64_t> default_seeds(std::size_t count = 8) {
  std::vector<std::uint64_t> s(count);
  for (std::size_t i = 0; i < count; ++i) s[i] = i;
  return s;
}

}  // namespace quadnet
