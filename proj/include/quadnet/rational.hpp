#pragma once

#include <gmpxx.h>

#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "quadnet/error.hpp"

namespace quadnet {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (q nonzero) into canonical form.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgument("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw InvalidArgument("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Least common multiple of the denominators.
inline Integer common_denominator(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  return l;
}

/// Scales `v` to a primitive integer vector with positive first nonzero
/// entry. The zero vector maps to itself.
inline std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer den = common_denominator(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Rational y = x * den;
    out.push_back(y.get_num());
    g = gcd(g, out.back());
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& z : out) {
    if (z != 0) {
      sign = sgn(z);
      break;
    }
  }
  for (auto& z : out) {
    z /= g;
    if (sign < 0) z = -z;
  }
  return out;
}

inline std::vector<Rational> to_rationals(const std::vector<Integer>& v) {
  return {v.begin(), v.end()};
}

}  // namespace quadnet
