#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "quadnet/error.hpp"
#include "quadnet/linalg.hpp"
#include "quadnet/net.hpp"
#include "quadnet/poly.hpp"
#include "quadnet/poly_matrix.hpp"

namespace quadnet {

inline const std::vector<std::string>& net_plane_variables() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}
inline const std::vector<std::string>& pencil_line_variables() {
  static const std::vector<std::string> v{"s", "t"};
  return v;
}

/// Gram matrix of Σ vars[i]·basis[i], entries linear forms in `vars`.
inline PolyMatrix gram_pencil(const std::vector<QuadraticForm>& basis, const std::vector<std::string>& vars) {
  if (basis.size() != vars.size()) throw DimensionError("gram_pencil: one variable per quadric");
  PolyMatrix m(kVariables, std::vector<MultiPoly>(kVariables, MultiPoly(vars)));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto g = basis[k].gram();
    const auto v = MultiPoly::variable(vars, k);
    for (int i = 0; i < kVariables; ++i)
      for (int j = 0; j < kVariables; ++j)
        if (sgn(g[i][j]) != 0) m[i][j] += v * g[i][j];
  }
  return m;
}

/// det(Σ vars[i]·Gram(basis[i])) for the basis as given (no normalization).
inline MultiPoly discriminant_of_basis(const std::vector<QuadraticForm>& basis, const std::vector<std::string>& vars) {
  return det_poly_matrix(gram_pencil(basis, vars));
}

/// det(x Q1 + y Q2 + z Q3) on the normalized basis, primitive-normalized;
/// the zero polynomial when every member of the net is singular.
inline MultiPoly discriminant_net(const Net& n) {
  return discriminant_of_basis(normalized_basis(n).basis(), net_plane_variables()).normalized();
}

/// det(s Q1 + t Q2) in the given basis order, primitive-normalized.
inline MultiPoly discriminant_pencil(const Pencil& p) {
  return discriminant_of_basis(p.basis(), pencil_line_variables()).normalized();
}

enum class QuinticClass { identically_zero, non_reduced, reduced };

inline std::string to_string(QuinticClass c) {
  switch (c) {
    case QuinticClass::identically_zero: return "identically-zero";
    case QuinticClass::non_reduced: return "non-reduced";
    case QuinticClass::reduced: return "reduced";
  }
  return "?";
}

inline QuinticClass classify_quintic(const MultiPoly& f) {
  if (f.is_zero()) return QuinticClass::identically_zero;
  return squarefree_part(f).is_squarefree ? QuinticClass::reduced : QuinticClass::non_reduced;
}

inline QuinticClass classify_discriminant(const Net& n) { return classify_quintic(discriminant_net(n)); }

/// Coefficients of a homogeneous form in lex-decreasing monomial order
/// (21 for ternary quintics, 6 for binary quintics), as integers after
/// primitive normalization.
inline std::vector<Integer> form_coefficients(const MultiPoly& f, int degree) {
  const MultiPoly g = f.normalized();
  std::vector<Integer> out;
  const std::size_t n = g.nvars();
  MultiPoly::Exponent e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      const Rational c = g.coefficient(e);
      out.push_back(c.get_num());
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

/// Multiplicity of the point [s0 : t0] of the pencil line as a root of the
/// binary discriminant (0 if it is not a root).
inline int pencil_root_multiplicity(const Pencil& p, const Rational& s0, const Rational& t0) {
  if (sgn(s0) == 0 && sgn(t0) == 0) throw InvalidArgument("pencil point must be nonzero");
  const MultiPoly f = discriminant_pencil(p);
  if (f.is_zero()) throw WhollySingularPencil();
  const auto& v = pencil_line_variables();
  const MultiPoly linear = MultiPoly::variable(v, 0) * t0 - MultiPoly::variable(v, 1) * s0;
  return factor_multiplicity(f, linear);
}

/// One irreducible (over the rationals) factor of the discriminant of a
/// pencil together with the block sizes of its roots, largest first.
struct SegreEntry {
  MultiPoly factor;
  int degree = 0;
  std::vector<int> blocks;
};

struct SegreSymbol {
  std::vector<SegreEntry> entries;

  /// Block multisets per geometric root, sorted; a degree-d factor
  /// contributes d copies.
  std::vector<std::vector<int>> shape() const {
    std::vector<std::vector<int>> out;
    for (const auto& e : entries)
      for (int i = 0; i < e.degree; ++i) out.push_back(e.blocks);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::string to_string() const {
    auto shp = shape();
    std::string s = "(";
    for (std::size_t i = 0; i < shp.size(); ++i) {
      if (i) s += ",";
      if (shp[i].size() == 1) {
        s += std::to_string(shp[i][0]);
      } else {
        s += "(";
        for (std::size_t j = 0; j < shp[i].size(); ++j) s += (j ? "," : "") + std::to_string(shp[i][j]);
        s += ")";
      }
    }
    return s + ")";
  }
};

namespace detail {

inline MultiPoly binary_linear(const Rational& a, const Rational& b) {
  const auto& v = pencil_line_variables();
  return (MultiPoly::variable(v, 0) * a + MultiPoly::variable(v, 1) * b).normalized();
}

// Continued-fraction convergents of x with denominators up to `limit`.
inline std::vector<Rational> convergents(long double x, long double limit = 1e12L) {
  std::vector<Rational> out;
  // h1/k1 is the latest convergent, h2/k2 the one before.
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  long double r = x;
  for (int it = 0; it < 40; ++it) {
    const long double fl = std::floor(r);
    if (!std::isfinite(fl) || std::fabs(fl) > 1e18L) break;
    const Integer a(static_cast<double>(fl));
    const Integer h = a * h1 + h2, k = a * k1 + k2;
    if (k > Integer(static_cast<double>(limit))) break;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    out.push_back(Rational(h, k));
    out.back().canonicalize();
    const long double frac = r - fl;
    if (frac < 1e-30L) break;
    r = 1 / frac;
  }
  return out;
}

// Roots of the dehomogenized form f(u) = F(u, 1) by Aberth iteration.
inline std::vector<std::complex<long double>> numeric_roots(const MultiPoly& F) {
  const int n = F.degree();
  std::vector<long double> c(n + 1, 0);  // c[k] = coefficient of u^k
  long double scale = 0;
  for (const auto& [e, coeff] : F.terms()) scale = std::max(scale, std::fabs(static_cast<long double>(coeff.get_d())));
  for (const auto& [e, coeff] : F.terms()) c[e[0]] = static_cast<long double>(coeff.get_d()) / scale;
  using C = std::complex<long double>;
  auto eval = [&](C u, C& deriv) {
    C p = 0;
    deriv = 0;
    for (int k = n; k >= 0; --k) {
      deriv = deriv * u + p;
      p = p * u + c[k];
    }
    return p;
  };
  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::fabs(c[k] / c[n]));
  radius = 1 + radius;
  std::vector<C> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius * 0.5L, 0.4L + 2 * M_PIl * k / n);
  for (int it = 0; it < 500; ++it) {
    long double moved = 0;
    for (int k = 0; k < n; ++k) {
      C d;
      const C p = eval(z[k], d);
      if (std::abs(p) == 0) continue;
      const C ratio = p / d;
      C sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      const C w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      moved = std::max(moved, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

inline bool divides_binary(const MultiPoly& d, MultiPoly& f) {
  if (auto q = f.divide_exact(d)) {
    f = std::move(*q);
    return true;
  }
  return false;
}

// Splits a squarefree binary form into factors irreducible over Q. Linear
// and quadratic factors are located numerically and confirmed by exact
// division; what remains after removing them (degree <= 5) is irreducible.
inline std::vector<MultiPoly> split_squarefree_binary(MultiPoly f) {
  const auto& v = pencil_line_variables();
  std::vector<MultiPoly> out;
  const MultiPoly s = MultiPoly::variable(v, 0), t = MultiPoly::variable(v, 1);
  if (divides_binary(t, f)) out.push_back(t);
  if (divides_binary(s, f)) out.push_back(s);
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.push_back(f.normalized());
    return out;
  }
  // Rational roots u = p/q give factors q s - p t.
  for (const auto& r : numeric_roots(f)) {
    if (f.degree() <= 1) break;
    if (std::fabs(r.imag()) > 1e-6L * (1 + std::abs(r))) continue;
    for (const auto& cand : convergents(r.real())) {
      const MultiPoly lin = binary_linear(cand.get_den(), -cand.get_num());
      if (divides_binary(lin, f)) {
        out.push_back(lin);
        break;
      }
    }
  }
  if (f.degree() == 1) {
    out.push_back(f.normalized());
    return out;
  }
  // Quadratic factors from pairs of roots.
  while (f.degree() >= 4) {
    const auto roots = numeric_roots(f);
    bool found = false;
    for (std::size_t i = 0; i < roots.size() && !found; ++i)
      for (std::size_t j = i + 1; j < roots.size() && !found; ++j) {
        const auto sum = roots[i] + roots[j], prod = roots[i] * roots[j];
        if (std::fabs(sum.imag()) > 1e-6L * (1 + std::abs(sum)) ||
            std::fabs(prod.imag()) > 1e-6L * (1 + std::abs(prod)))
          continue;
        const auto cs = convergents(-sum.real()), cp = convergents(prod.real());
        for (std::size_t a = 0; a < cs.size() && !found; ++a)
          for (std::size_t b = 0; b < cp.size() && !found; ++b) {
            if (std::fabs(static_cast<long double>(cs[a].get_d()) + sum.real()) > 1e-6L * (1 + std::abs(sum)) ||
                std::fabs(static_cast<long double>(cp[b].get_d()) - prod.real()) > 1e-6L * (1 + std::abs(prod)))
              continue;
            MultiPoly q = s * s + s * t * cs[a] + t * t * cp[b];
            q = q.normalized();
            if (divides_binary(q, f)) {
              out.push_back(q);
              found = true;
            }
          }
      }
    if (!found) break;
  }
  if (!f.is_constant()) out.push_back(f.normalized());
  return out;
}

// Roots of a squarefree form p whose order in `d` is at least m, as a
// squarefree divisor of p.
inline MultiPoly roots_with_order_at_least(const MultiPoly& p, const MultiPoly& d, int m) {
  const auto& v = p.variables();
  if (m == 0) return p;
  if (d.is_zero()) return p;
  const MultiPoly hi = multivariate_gcd(p.pow(m), d);
  const MultiPoly lo = m == 1 ? MultiPoly::constant(v, 1) : multivariate_gcd(p.pow(m - 1), d);
  return exact(hi, lo).normalized();
}

// gcd of all k x k minors; the zero polynomial if they all vanish.
inline MultiPoly minor_gcd(const PolyMatrix& m, std::size_t k) {
  MultiPoly g(m[0][0].variables());
  for (const auto& minor : all_minors(m, k)) {
    if (minor.is_zero()) continue;
    g = multivariate_gcd(g, minor);
    if (g.is_constant()) break;
  }
  return g;
}

}  // namespace detail

/// Segre symbol of a pencil: for each rational-irreducible factor p of the
/// discriminant, e_r = min over (6-r)-minors of the order of p, and the
/// blocks are the positive differences e_r - e_{r+1}.
inline SegreSymbol segre_symbol(const Pencil& pencil) {
  const PolyMatrix m = gram_pencil(pencil.basis(), pencil_line_variables());
  const MultiPoly f = det_poly_matrix(m);
  if (f.is_zero()) throw WhollySingularPencil();
  const auto& v = pencil_line_variables();

  // D[k] = gcd of k x k minors; e_r uses D[6 - r].
  std::vector<MultiPoly> D(kVariables + 1, MultiPoly::constant(v, 1));
  for (int k = 1; k < kVariables; ++k) D[k] = detail::minor_gcd(m, k);
  D[kVariables] = f;

  // Group the roots by their order vector so that every reported factor
  // has uniform block data even if it cannot be split further.
  struct Part {
    MultiPoly poly;
    std::vector<int> orders;
  };
  std::vector<Part> parts{{squarefree_part(f).squarefree, {}}};
  if (parts[0].poly.is_constant()) return {};
  for (int k = kVariables; k >= 1; --k) {
    std::vector<Part> next;
    for (const auto& part : parts) {
      MultiPoly rest = part.poly;
      for (int order = 1; order <= kVariables && !rest.is_constant(); ++order) {
        const MultiPoly at_least = detail::roots_with_order_at_least(rest, D[k], order);
        const MultiPoly more = detail::roots_with_order_at_least(rest, D[k], order + 1);
        const MultiPoly exact_order = detail::exact(at_least, more).normalized();
        if (!exact_order.is_constant()) {
          auto o = part.orders;
          o.push_back(order);
          next.push_back({exact_order, o});
        }
      }
      // Roots with order 0 in D[k].
      const MultiPoly some = detail::roots_with_order_at_least(rest, D[k], 1);
      const MultiPoly none = detail::exact(rest, some).normalized();
      if (!none.is_constant()) {
        auto o = part.orders;
        o.push_back(0);
        next.push_back({none, o});
      }
    }
    parts = std::move(next);
  }

  SegreSymbol sym;
  for (const auto& part : parts) {
    // orders[i] is e_{i+1}; e_6 = 0.
    std::vector<int> blocks;
    for (int r = 0; r < kVariables; ++r) {
      const int er = part.orders[r];
      const int next = r + 1 < kVariables ? part.orders[r + 1] : 0;
      if (er - next > 0) blocks.push_back(er - next);
    }
    std::sort(blocks.rbegin(), blocks.rend());
    for (auto& factor : detail::split_squarefree_binary(part.poly)) {
      const int deg = factor.degree();
      sym.entries.push_back({std::move(factor), deg, blocks});
    }
  }
  std::sort(sym.entries.begin(), sym.entries.end(), [](const SegreEntry& a, const SegreEntry& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.blocks != b.blocks) return a.blocks > b.blocks;
    return a.factor.to_string() < b.factor.to_string();
  });
  return sym;
}

/// Blocks attached to one eigenvalue: the pencil member s + λt degenerates.
struct SegreBlockSpec {
  Rational eigenvalue;
  std::vector<int> blocks;
};

/// Weierstrass normal form: per block of size k and eigenvalue λ, the first
/// Gram matrix has ones on the block anti-diagonal and the second has λ on
/// the anti-diagonal and ones just above it.
inline Pencil pencil_from_segre(const std::vector<SegreBlockSpec>& spec) {
  int total = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (spec[i].eigenvalue == spec[j].eigenvalue) throw InvalidArgument("eigenvalues must be distinct");
    if (spec[i].blocks.empty()) throw InvalidArgument("every eigenvalue needs at least one block");
    for (int b : spec[i].blocks) {
      if (b <= 0) throw InvalidArgument("block sizes must be positive");
      total += b;
    }
  }
  if (total != kVariables) throw InvalidArgument("block sizes must sum to 5, got " + std::to_string(total));
  RationalMatrix A(kVariables, RationalVector(kVariables, 0)), B = A;
  int offset = 0;
  for (const auto& e : spec)
    for (int k : e.blocks) {
      for (int i = 0; i < k; ++i) {
        A[offset + i][offset + k - 1 - i] = 1;
        B[offset + i][offset + k - 1 - i] = e.eigenvalue;
        if (i <= k - 2) B[offset + i][offset + k - 2 - i] = 1;
      }
      offset += k;
    }
  return Pencil({QuadraticForm::from_gram(A), QuadraticForm::from_gram(B)});
}

/// If f^2 is a quadric in the Veronese coordinates a = x^2, b = xy,
/// c = y^2, d = yz, e = z^2, returns one such quadric (free coefficients
/// set to zero, pivots in monomial order); otherwise nullopt.
inline std::optional<QuadraticForm> veronese_quadric_section_test(const MultiPoly& f) {
  if (f.variables() != net_plane_variables()) throw InvalidArgument("expected a form in x, y, z");
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != 2)
    throw InvalidArgument("expected a nonzero ternary quadratic form");
  const auto& v = net_plane_variables();
  const MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1), z = MultiPoly::variable(v, 2);
  const std::vector<MultiPoly> images{x * x, x * y, y * y, y * z, z * z};
  // Quartic monomials indexed by exponents (i, j, 4 - i - j).
  std::vector<MultiPoly::Exponent> quartics;
  for (int i = 4; i >= 0; --i)
    for (int j = 4 - i; j >= 0; --j) quartics.push_back({i, j, 4 - i - j});
  RationalMatrix system(quartics.size(), RationalVector(kQuadraticMonomials, 0));
  for (const auto& m : all_monomials()) {
    const MultiPoly img = images[m.first()] * images[m.second()];
    for (std::size_t r = 0; r < quartics.size(); ++r) system[r][m.index()] = img.coefficient(quartics[r]);
  }
  const MultiPoly sq = f * f;
  RationalVector rhs(quartics.size());
  for (std::size_t r = 0; r < quartics.size(); ++r) rhs[r] = sq.coefficient(quartics[r]);
  auto sol = solve(system, rhs);
  if (!sol) return std::nullopt;
  return QuadraticForm(*sol);
}

}  // namespace quadnet
