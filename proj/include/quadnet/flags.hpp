#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadnet/linalg.hpp"
#include "quadnet/net.hpp"
#include "quadnet/stability.hpp"

namespace quadnet {

/// Monomial spans used by the flag conditions, as masks over the 15
/// quadratic monomials.
namespace spans {

using Mask = std::vector<bool>;

inline Mask where(bool (*pred)(Monomial2)) {
  Mask m(kQuadraticMonomials);
  for (const auto& x : all_monomials()) m[x.index()] = pred(x);
  return m;
}

// e·V: quadrics containing H = {e = 0}.
inline Mask e_times_v() { return where([](Monomial2 m) { return m.involves(4); }); }
inline Mask e_squared() { return where([](Monomial2 m) { return m.index() == 14; }); }
// (d, e)·V: quadrics containing P = {d = e = 0}.
inline Mask de_times_v() { return where([](Monomial2 m) { return m.involves(3) || m.involves(4); }); }
// (d, e)^2: singular along P.
inline Mask de_squared() { return where([](Monomial2 m) { return m.first() >= 3; }); }
// (c, d, e)·V: quadrics containing L = {c = d = e = 0}.
inline Mask cde_times_v() { return where([](Monomial2 m) { return m.second() >= 2; }); }
// (c, d, e)^2: singular along L.
inline Mask cde_squared() { return where([](Monomial2 m) { return m.first() >= 2; }); }
// Quadrics through O = [1:0:0:0:0].
inline Mask not_a_squared() { return where([](Monomial2 m) { return m.index() != 0; }); }
// (b, c, d, e)^2: singular at O.
inline Mask a_free() { return where([](Monomial2 m) { return m.first() >= 1; }); }

}  // namespace spans

/// Conditions for destabilization by ρ_1..ρ_4 along the coordinate flag
/// O ⊂ L ⊂ P ⊂ H, and the normalized-basis conditions they imply.
struct FlagReport {
  bool c1a = false;  ///< a pencil of Λ contains H
  bool c1b = false;  ///< a member is singular along H
  bool c2a = false;  ///< Λ contains P
  bool c2b = false;  ///< a pencil contains P with a member singular along P
  bool c3a = false;  ///< Λ contains L with a member singular along L
  bool c3b = false;  ///< a pencil is singular along L
  bool c4 = false;   ///< Λ contains O and a pencil is singular at O

  bool obs_i = true;  ///< normalized-basis conditions; false certifies ρ_1..ρ_4 instability
  bool obs_ii = true;
  bool obs_iii = true;
  bool obs_iv = true;

  /// Smallest k such that a condition of type ρ_k holds.
  std::optional<int> destabilizer_type() const {
    if (c1a || c1b) return 1;
    if (c2a || c2b) return 2;
    if (c3a || c3b) return 3;
    if (c4) return 4;
    return std::nullopt;
  }
  std::optional<int> violated_observation() const {
    if (!obs_i) return 1;
    if (!obs_ii) return 2;
    if (!obs_iii) return 3;
    if (!obs_iv) return 4;
    return std::nullopt;
  }
};

namespace detail {

inline bool contained_in(const RationalMatrix& rows, const spans::Mask& allowed) {
  for (const auto& r : rows)
    for (int j = 0; j < kQuadraticMonomials; ++j)
      if (!allowed[j] && sgn(r[j]) != 0) return false;
  return true;
}

}  // namespace detail

/// Normalized-basis conditions (i) to (iv), evaluated on the
/// lex-normalized basis of n.
inline FlagReport normalized_basis_conditions(const Net& n) {
  using namespace spans;
  const Net nb = normalized_basis(n);
  const auto rows = nb.coefficient_matrix();
  const RationalMatrix q1{rows[0]}, q3{rows[2]};
  const RationalMatrix q23{rows[1], rows[2]};
  FlagReport r;
  r.obs_i = !detail::contained_in(q3, e_squared());
  r.obs_ii = !detail::contained_in(rows, de_times_v()) &&
             (!detail::contained_in(q23, de_times_v()) || !detail::contained_in(q3, de_squared()));
  r.obs_iii = !detail::contained_in(q23, cde_squared()) &&
              (!detail::contained_in(rows, cde_times_v()) || !detail::contained_in(q3, cde_squared()));
  const auto in1 = nb[0].initial_lex(), in2 = nb[1].initial_lex();
  r.obs_iv = in1->index() == 0 || (in1->involves(0) && in2->involves(0));
  return r;
}

/// Evaluates the flag conditions after transporting n by g (the flag is the
/// coordinate flag of the new variables), together with conditions (i)–(iv).
inline FlagReport flag_predicates(const Net& n, const CoordinateChange& g = CoordinateChange::identity()) {
  using namespace spans;
  const Net moved = apply_coordinate_change(n, g);
  const auto m = moved.coefficient_matrix();
  FlagReport r = normalized_basis_conditions(moved);
  r.c1a = dimension_within_support(m, e_times_v()) >= 2;
  r.c1b = dimension_within_support(m, e_squared()) >= 1;
  r.c2a = detail::contained_in(m, de_times_v());
  r.c2b = dimension_within_support(m, de_times_v()) >= 2 && dimension_within_support(m, de_squared()) >= 1;
  r.c3a = detail::contained_in(m, cde_times_v()) && dimension_within_support(m, cde_squared()) >= 1;
  r.c3b = dimension_within_support(m, cde_squared()) >= 2;
  r.c4 = detail::contained_in(m, not_a_squared()) && dimension_within_support(m, a_free()) >= 2;
  return r;
}

struct PermutedFlagReport {
  std::array<int, kVariables> permutation;
  FlagReport report;
};

/// Flag reports for the 120 coordinate-permutation flags, in
/// lexicographic order of the permutation.
inline std::vector<PermutedFlagReport> scan_permutation_flags(const Net& n) {
  std::array<int, kVariables> perm{0, 1, 2, 3, 4};
  std::vector<PermutedFlagReport> out;
  do {
    out.push_back({perm, flag_predicates(n, CoordinateChange::permutation(perm))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace quadnet
