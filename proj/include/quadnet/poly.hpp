#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quadnet/error.hpp"
#include "quadnet/rational.hpp"

namespace quadnet {

/// Sparse multivariate polynomial with rational coefficients over a fixed,
/// ordered list of variable names. Terms are kept in decreasing lex order of
/// exponent vectors (first variable most significant); zero coefficients are
/// never stored.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  struct LexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
  };
  using Terms = std::map<Exponent, Rational, LexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c) {
    MultiPoly p(std::move(variables));
    if (sgn(c) != 0) p.terms_.emplace(Exponent(p.vars_.size(), 0), c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index) {
    MultiPoly p(std::move(variables));
    if (index >= p.vars_.size()) throw InvalidArgument("variable index out of range");
    Exponent e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }
  static MultiPoly monomial(std::vector<std::string> variables, Exponent exponent, const Rational& c) {
    MultiPoly p(std::move(variables));
    if (exponent.size() != p.vars_.size()) throw DimensionError("exponent length mismatch");
    p.add_term(exponent, c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](int x) { return x == 0; }));
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, sum(e));
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = sum(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return sum(t.first) == d; });
  }
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  const std::pair<const Exponent, Rational>& leading_term() const {
    if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
    return *terms_.begin();
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.vars_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(int k) const {
    if (k < 0) throw InvalidArgument("negative power");
    MultiPoly r = constant(vars_, 1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      --f[var];
      r.add_term(f, c * e[var]);
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw DimensionError("evaluation point has wrong length");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      total += t;
    }
    return total;
  }

  /// Replaces variable i by images[i]; the result lives in the images' ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size()) throw DimensionError("substitution has wrong arity");
    if (images.empty()) throw DimensionError("substitution into a ring without variables");
    MultiPoly r(images.front().variables());
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(r.vars_, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t *= images[i].pow(e[i]);
      r += t;
    }
    return r;
  }

  /// Exact quotient by `d` if `d` divides this polynomial, else nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
    check_compatible(d);
    if (d.is_zero()) throw InvalidArgument("division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly quo(vars_);
    const auto& [de, dc] = d.leading_term();
    Exponent qe(vars_.size());
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.leading_term();
      for (std::size_t i = 0; i < qe.size(); ++i) {
        qe[i] = re[i] - de[i];
        if (qe[i] < 0) return std::nullopt;
      }
      Rational qc = rc / dc;
      quo.add_term(qe, qc);
      rem -= monomial(vars_, qe, qc) * d;
    }
    return quo;
  }

  bool divides(const MultiPoly& f) const { return f.divide_exact(*this).has_value(); }

  /// Primitive integer coefficients, positive leading coefficient in lex
  /// order. Zero stays zero.
  MultiPoly normalized() const {
    if (terms_.empty()) return *this;
    Integer den = 1;
    for (const auto& [e, c] : terms_) den = lcm(den, Integer(c.get_den()));
    Integer g = 0;
    for (const auto& [e, c] : terms_) g = gcd(g, Integer(Rational(c * den).get_num()));
    Rational scale = Rational(den) / Rational(g);
    if (sgn(terms_.begin()->second) < 0) scale = -scale;
    MultiPoly r = *this;
    r *= scale;
    return r;
  }

  /// Coefficients with respect to variable `var`: result[k] is the
  /// coefficient of var^k, a polynomial not involving `var`.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const {
    std::vector<MultiPoly> out(std::max(degree_in(var), 0) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f[var] = 0;
      out[e[var]].add_term(f, c);
    }
    return out;
  }

  MultiPoly times_power(std::size_t var, int k) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f[var] += k;
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = abs(c);
      const bool is_const = sum(e) == 0;
      if (sgn(c) < 0)
        os << (first ? "-" : " - ");
      else if (!first)
        os << " + ";
      if (a != 1 || is_const) os << a.get_str();
      bool need_star = (a != 1 || is_const);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << "*";
        os << vars_[i];
        if (e[i] > 1) os << "^" << e[i];
        need_star = true;
      }
      first = false;
    }
    return os.str();
  }

 private:
  static int sum(const Exponent& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }
  void check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw InvalidArgument("polynomials over different variable lists");
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

inline constexpr int kInfiniteMultiplicity = std::numeric_limits<int>::max();

namespace detail {

inline MultiPoly lead_coefficient_in(const MultiPoly& f, std::size_t var) {
  return f.coefficients_in(var).back();
}

inline MultiPoly exact(const MultiPoly& f, const MultiPoly& d) {
  auto q = f.divide_exact(d);
  if (!q) throw Error("internal: expected exact division failed");
  return *q;
}

// Pseudo-remainder of a by b with respect to `var`.
inline MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const MultiPoly lb = lead_coefficient_in(b, var);
  int e = a.degree_in(var) - db + 1;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    MultiPoly t = lead_coefficient_in(a, var).times_power(var, a.degree_in(var) - db);
    a = lb * a - t * b;
    --e;
  }
  return e > 0 ? lb.pow(e) * a : a;
}

MultiPoly gcd_from(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// gcd of the coefficients of f with respect to `var` (a polynomial in the
// variables after `var`).
inline MultiPoly content_in(const MultiPoly& f, std::size_t var) {
  MultiPoly c(f.variables());
  for (const auto& coeff : f.coefficients_in(var)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff.normalized() : gcd_from(c, coeff, var + 1);
    if (c.is_constant()) break;
  }
  return c;
}

// Subresultant remainder sequence for primitive a, b (deg a >= deg b >= 1 in var).
inline MultiPoly subresultant_gcd(MultiPoly a, MultiPoly b, std::size_t var) {
  const auto& vars = a.variables();
  MultiPoly g = MultiPoly::constant(vars, 1);
  MultiPoly h = MultiPoly::constant(vars, 1);
  while (true) {
    const int delta = a.degree_in(var) - b.degree_in(var);
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return b;
    if (r.degree_in(var) == 0) return MultiPoly::constant(vars, 1);
    a = b;
    b = exact(r, g * h.pow(delta));
    g = lead_coefficient_in(a, var);
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact(g.pow(delta), h.pow(delta - 1));
    }
  }
}

inline MultiPoly gcd_from(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  const auto& vars = f.variables();
  if (var >= f.nvars()) return MultiPoly::constant(vars, 1);
  if (!f.involves(var) && !g.involves(var)) return gcd_from(f, g, var + 1);
  MultiPoly cf = content_in(f, var);
  MultiPoly cg = content_in(g, var);
  MultiPoly content = gcd_from(cf, cg, var + 1);
  MultiPoly pf = exact(f, cf);
  MultiPoly pg = exact(g, cg);
  if (pf.degree_in(var) < pg.degree_in(var)) std::swap(pf, pg);
  if (pg.degree_in(var) <= 0) return content.normalized();
  MultiPoly h = subresultant_gcd(pf, pg, var);
  if (h.degree_in(var) <= 0) return content.normalized();
  MultiPoly primitive = exact(h, content_in(h, var));
  return (content * primitive).normalized();
}

}  // namespace detail

/// Greatest common divisor, normalized (primitive, positive lex-leading
/// coefficient). gcd(f, 0) = normalized f; gcd(0, 0) = 0.
inline MultiPoly multivariate_gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.variables() != g.variables()) throw InvalidArgument("gcd over different variable lists");
  return detail::gcd_from(f, g, 0);
}

struct SquarefreeResult {
  MultiPoly squarefree;  ///< f divided by its repeated-factor content, normalized
  bool is_squarefree;
};

/// Throws IdenticallyZero on the zero polynomial.
inline SquarefreeResult squarefree_part(const MultiPoly& f) {
  if (f.is_zero()) throw IdenticallyZero();
  MultiPoly g = f;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    MultiPoly d = f.derivative(i);
    if (!d.is_zero()) g = multivariate_gcd(g, d);
    if (g.is_constant()) break;
  }
  if (g.is_constant()) return {f.normalized(), true};
  return {detail::exact(f, g).normalized(), false};
}

/// Largest k with p^k | f; kInfiniteMultiplicity when f = 0.
inline int factor_multiplicity(const MultiPoly& f, const MultiPoly& p) {
  if (p.is_constant()) throw InvalidArgument("factor_multiplicity: divisor must be nonconstant");
  if (f.is_zero()) return kInfiniteMultiplicity;
  int k = 0;
  MultiPoly rest = f;
  while (auto q = rest.divide_exact(p)) {
    rest = std::move(*q);
    ++k;
  }
  return k;
}

/// True when a = c * b for some nonzero rational c.
inline bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized();
}

}  // namespace quadnet
