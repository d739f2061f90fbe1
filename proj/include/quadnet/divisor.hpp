#pragma once

#include <array>
#include <string>
#include <vector>

#include "quadnet/error.hpp"
#include "quadnet/linalg.hpp"
#include "quadnet/rational.hpp"

namespace quadnet {

/// A divisor class a·λ + b·δ₀ + c·δ₁ + d·δ₂ stored as (a, b, c, d).
class DivisorClass {
 public:
  DivisorClass() : c_{0, 0, 0, 0} {}
  DivisorClass(Rational lambda, Rational delta0, Rational delta1, Rational delta2)
      : c_{std::move(lambda), std::move(delta0), std::move(delta1), std::move(delta2)} {}

  static DivisorClass lambda() { return {1, 0, 0, 0}; }
  static DivisorClass delta0() { return {0, 1, 0, 0}; }
  static DivisorClass delta1() { return {0, 0, 1, 0}; }
  static DivisorClass delta2() { return {0, 0, 0, 1}; }
  static DivisorClass delta() { return {0, 1, 1, 1}; }
  /// K = 13λ − 2δ, the convention under which the log-canonical identities are checked.
  static DivisorClass canonical() { return {13, -2, -2, -2}; }

  const std::array<Rational, 4>& coefficients() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }

  DivisorClass& operator+=(const DivisorClass& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  DivisorClass& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.c_ == b.c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }

  /// Equal up to a nonzero rational scalar.
  bool proportional_to(const DivisorClass& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (c_[i] * o.c_[j] != c_[j] * o.c_[i]) return false;
    return true;
  }

  std::string to_string() const {
    static const char* names[] = {"lambda", "delta0", "delta1", "delta2"};
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) {
      if (sgn(c_[i]) == 0) continue;
      Rational a = abs(c_[i]);
      if (s.empty())
        s += sgn(c_[i]) < 0 ? "-" : "";
      else
        s += sgn(c_[i]) < 0 ? " - " : " + ";
      if (a != 1) s += quadnet::to_string(a) + "*";
      s += names[i];
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::array<Rational, 4> c_;
};

/// A one-parameter family T with its intersection numbers (λ·T, δ₀·T, δ₁·T, δ₂·T).
struct TestFamily {
  std::string name;
  std::array<long, 4> intersections{};
};

inline const std::vector<TestFamily>& contraction_test_families() {
  static const std::vector<TestFamily> families{
      {"T1", {1, 12, -1, 0}}, {"T2", {3, 30, 0, -1}}, {"T3", {4, 33, 0, 0}}};
  return families;
}

/// The class aλ − bδ₀ − cδ₁ − dδ₂ meeting every family in zero, returned as
/// the primitive integer vector (a, b, c, d) with a > 0 (or the first
/// nonzero entry positive when a = 0).
inline DivisorClass solve_contracted_class(const std::vector<TestFamily>& families) {
  RationalMatrix rows;
  for (const auto& f : families) {
    // Unknowns are (a, b, c, d) in aλ − bδ₀ − cδ₁ − dδ₂.
    rows.push_back({Rational(f.intersections[0]), Rational(-f.intersections[1]), Rational(-f.intersections[2]),
                    Rational(-f.intersections[3])});
  }
  const auto ns = rows.empty() ? RationalMatrix{} : nullspace(rows, 4);
  const std::size_t dim = rows.empty() ? 4 : ns.size();
  if (dim != 1)
    throw InvalidArgument("intersection rows have a " + std::to_string(dim) +
                          "-dimensional nullspace; expected exactly 1 (" +
                          (dim == 0 ? "over-determined" : "under-determined") + ")");
  auto v = primitive_integer_vector(ns.front());
  for (const auto& x : v)
    if (sgn(x) != 0) {
      if (sgn(x) < 0)
        for (auto& y : v) y = -y;
      break;
    }
  return DivisorClass(Rational(v[0]), Rational(v[1]), Rational(v[2]), Rational(v[3]));
}

/// The signed class aλ − bδ₀ − cδ₁ − dδ₂ for the vector (a, b, c, d).
inline DivisorClass signed_class(const DivisorClass& abcd) {
  return DivisorClass(abcd[0], -abcd[1], -abcd[2], -abcd[3]);
}

inline Rational intersect(const DivisorClass& d, const TestFamily& f) {
  Rational s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += d[i] * f.intersections[i];
  return s;
}

struct IdentityCheck {
  std::string name;
  DivisorClass lhs;
  DivisorClass rhs;
  bool holds = false;
};

struct LogCanonicalReport {
  std::string convention = "K = 13*lambda - 2*delta, delta = delta0 + delta1 + delta2";
  std::vector<IdentityCheck> identities;
  bool passed() const {
    for (const auto& i : identities)
      if (!i.holds) return false;
    return !identities.empty();
  }
};

/// scale·(K + t·δ) against factor·(base + correction), exactly.
inline IdentityCheck check_identity(std::string name, const Rational& scale, const Rational& t, const Rational& factor,
                                    const DivisorClass& base, const DivisorClass& correction) {
  IdentityCheck c;
  c.name = std::move(name);
  c.lhs = scale * (DivisorClass::canonical() + t * DivisorClass::delta());
  c.rhs = factor * (base + correction);
  c.holds = c.lhs == c.rhs;
  return c;
}

/// The two log-canonical identities; `first_coefficient` and
/// `second_coefficient` default to 14/33 and 3/8 and are exposed so a
/// perturbed value can be shown to fail.
inline LogCanonicalReport check_log_canonical_identities(const Rational& first_coefficient = make_rational(14, 33),
                                                         const Rational& second_coefficient = make_rational(3, 8)) {
  LogCanonicalReport r;
  r.identities.push_back(check_identity("K + (14/33) delta", 33, first_coefficient, 13,
                                        DivisorClass(33, -4, -15, -21), DivisorClass(0, 0, 11, 17)));
  r.identities.push_back(check_identity("K + (3/8) delta", 8, second_coefficient, 13, DivisorClass(8, -1, -4, -6),
                                        DivisorClass(0, 0, 3, 5)));
  return r;
}

}  // namespace quadnet
