#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quadnet/error.hpp"
#include "quadnet/linalg.hpp"
#include "quadnet/poly.hpp"
#include "quadnet/rational.hpp"

namespace quadnet {

inline constexpr int kVariables = 5;
inline constexpr int kQuadraticMonomials = 15;

inline const std::vector<std::string>& variable_names() {
  static const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  return names;
}

using Exponent5 = std::array<int, kVariables>;

/// A quadratic monomial in a..e. Index 0..14 enumerates a², ab, ac, ad, ae,
/// b², bc, bd, be, c², cd, ce, d², de, e², strictly decreasing in lex order.
class Monomial2 {
 public:
  constexpr Monomial2() = default;
  explicit Monomial2(int index) : index_(index) {
    if (index < 0 || index >= kQuadraticMonomials) throw InvalidArgument("monomial index out of range");
  }
  static Monomial2 from_pair(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= kVariables) throw InvalidArgument("variable index out of range");
    return Monomial2(pair_index(i, j));
  }
  static Monomial2 from_exponent(const Exponent5& e) {
    int first = -1, second = -1, total = 0;
    for (int v = 0; v < kVariables; ++v) {
      if (e[v] < 0) throw InvalidArgument("negative exponent");
      total += e[v];
      for (int k = 0; k < e[v]; ++k) (first < 0 ? first : second) = v;
    }
    if (total != 2) throw InvalidArgument("exponent vector is not quadratic");
    return from_pair(first, second);
  }

  int index() const { return index_; }
  int first() const { return pairs()[index_][0]; }
  int second() const { return pairs()[index_][1]; }
  Exponent5 exponent() const {
    Exponent5 e{};
    ++e[first()];
    ++e[second()];
    return e;
  }
  bool involves(int var) const { return first() == var || second() == var; }
  std::string name() const {
    const auto& v = variable_names();
    return first() == second() ? v[first()] + "^2" : v[first()] + v[second()];
  }
  friend bool operator==(Monomial2 a, Monomial2 b) { return a.index_ == b.index_; }
  friend bool operator<(Monomial2 a, Monomial2 b) { return a.index_ < b.index_; }

 private:
  static const std::array<std::array<int, 2>, kQuadraticMonomials>& pairs() {
    static const auto table = [] {
      std::array<std::array<int, 2>, kQuadraticMonomials> t{};
      int k = 0;
      for (int i = 0; i < kVariables; ++i)
        for (int j = i; j < kVariables; ++j) t[k++] = {i, j};
      return t;
    }();
    return table;
  }
  static int pair_index(int i, int j) {
    int k = 0;
    for (int a = 0; a < i; ++a) k += kVariables - a;
    return k + (j - i);
  }
  int index_ = 0;
};

inline std::vector<Monomial2> all_monomials() {
  std::vector<Monomial2> out;
  for (int i = 0; i < kQuadraticMonomials; ++i) out.emplace_back(i);
  return out;
}

/// A quadric in a..e stored by its 15 coefficients in monomial order.
class QuadraticForm {
 public:
  QuadraticForm() : coeffs_(kQuadraticMonomials, 0) {}
  explicit QuadraticForm(RationalVector coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != kQuadraticMonomials) throw DimensionError("a quadratic form has 15 coefficients");
  }

  static QuadraticForm from_gram(const RationalMatrix& g) {
    if (g.size() != kVariables) throw DimensionError("Gram matrix must be 5x5");
    QuadraticForm q;
    for (int i = 0; i < kVariables; ++i) {
      if (g[i].size() != kVariables) throw DimensionError("Gram matrix must be 5x5");
      for (int j = i; j < kVariables; ++j) {
        if (g[i][j] != g[j][i]) throw InvalidArgument("Gram matrix must be symmetric");
        q.coeffs_[Monomial2::from_pair(i, j).index()] = (i == j) ? g[i][i] : 2 * g[i][j];
      }
    }
    return q;
  }
  static QuadraticForm from_poly(const MultiPoly& p) {
    if (p.variables() != variable_names()) throw InvalidArgument("quadric must be a polynomial in a,b,c,d,e");
    QuadraticForm q;
    for (const auto& [e, c] : p.terms()) {
      Exponent5 x{};
      std::copy(e.begin(), e.end(), x.begin());
      q.coeffs_[Monomial2::from_exponent(x).index()] += c;
    }
    return q;
  }
  static QuadraticForm monomial(Monomial2 m, const Rational& c = 1) {
    QuadraticForm q;
    q.coeffs_[m.index()] = c;
    return q;
  }

  const RationalVector& coefficients() const { return coeffs_; }
  const Rational& operator[](Monomial2 m) const { return coeffs_[m.index()]; }
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  /// Symmetric matrix with the diagonal coefficients of x_i² and half the
  /// coefficient of x_i x_j off the diagonal.
  RationalMatrix gram() const {
    RationalMatrix g(kVariables, RationalVector(kVariables, 0));
    for (const auto& m : all_monomials()) {
      const auto& c = coeffs_[m.index()];
      if (m.first() == m.second())
        g[m.first()][m.first()] = c;
      else
        g[m.first()][m.second()] = g[m.second()][m.first()] = c / 2;
    }
    return g;
  }

  MultiPoly to_poly() const {
    MultiPoly p(variable_names());
    for (const auto& m : all_monomials()) {
      const auto e = m.exponent();
      p.add_term(MultiPoly::Exponent(e.begin(), e.end()), coeffs_[m.index()]);
    }
    return p;
  }

  std::string to_string() const;

  /// Initial monomial in lex order; nullopt for the zero form.
  std::optional<Monomial2> initial_lex() const {
    for (int i = 0; i < kQuadraticMonomials; ++i)
      if (sgn(coeffs_[i]) != 0) return Monomial2(i);
    return std::nullopt;
  }

  QuadraticForm& operator+=(const QuadraticForm& o) {
    for (int i = 0; i < kQuadraticMonomials; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  QuadraticForm& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend QuadraticForm operator+(QuadraticForm a, const QuadraticForm& b) { return a += b; }
  friend QuadraticForm operator-(QuadraticForm a, const QuadraticForm& b) { return a += b * Rational(-1); }
  friend QuadraticForm operator*(QuadraticForm a, const Rational& s) { return a *= s; }
  friend QuadraticForm operator*(const Rational& s, QuadraticForm a) { return a *= s; }
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.coeffs_ == b.coeffs_; }

 private:
  RationalVector coeffs_;
};

/// Human-readable form in the parser's syntax, e.g. "ad - bc".
inline std::string QuadraticForm::to_string() const {
  std::string out;
  for (const auto& m : all_monomials()) {
    const Rational& c = coeffs_[m.index()];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    if (a != 1) out += a.get_str();
    out += m.name();
  }
  return out.empty() ? "0" : out;
}

/// Rank of the Gram matrix.
inline int rank(const QuadraticForm& q) { return rank(q.gram()); }

using ProjectivePoint = std::vector<Integer>;

inline ProjectivePoint make_point(const RationalVector& v) {
  if (v.size() != kVariables) throw DimensionError("points of P^4 have 5 coordinates");
  auto p = primitive_integer_vector(v);
  if (std::all_of(p.begin(), p.end(), [](const Integer& z) { return z == 0; }))
    throw InvalidArgument("zero vector is not a projective point");
  return p;
}

/// The vertex of a rank-4 quadric: the point spanning the Gram kernel.
inline ProjectivePoint vertex(const QuadraticForm& q) {
  const int r = rank(q);
  if (r != 4) throw VertexUndefined(r);
  auto kernel = nullspace(q.gram(), kVariables);
  return make_point(kernel.front());
}

/// Value at a fixed affine representative of p.
inline Rational evaluate(const QuadraticForm& q, const std::vector<Rational>& p) {
  if (p.size() != kVariables) throw DimensionError("points of P^4 have 5 coordinates");
  if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return sgn(x) == 0; }))
    throw InvalidArgument("zero vector is not a projective point");
  Rational total = 0;
  for (const auto& m : all_monomials()) total += q[m] * p[m.first()] * p[m.second()];
  return total;
}

inline Rational evaluate(const QuadraticForm& q, const ProjectivePoint& p) {
  return evaluate(q, to_rationals(p));
}

/// Invertible 5x5 matrix g acting by substitution: Q ↦ Q(g·x).
class CoordinateChange {
 public:
  explicit CoordinateChange(RationalMatrix m) : matrix_(std::move(m)) {
    if (matrix_.size() != kVariables) throw DimensionError("coordinate change must be 5x5");
    for (const auto& row : matrix_)
      if (row.size() != kVariables) throw DimensionError("coordinate change must be 5x5");
    if (sgn(determinant(matrix_)) == 0) throw InvalidArgument("coordinate change is singular");
  }
  static CoordinateChange identity() {
    RationalMatrix m(kVariables, RationalVector(kVariables, 0));
    for (int i = 0; i < kVariables; ++i) m[i][i] = 1;
    return CoordinateChange(std::move(m));
  }
  /// Variable i is replaced by variable perm[i].
  static CoordinateChange permutation(const std::array<int, kVariables>& perm) {
    RationalMatrix m(kVariables, RationalVector(kVariables, 0));
    for (int i = 0; i < kVariables; ++i) m[i][perm[i]] = 1;
    return CoordinateChange(std::move(m));
  }

  const RationalMatrix& matrix() const { return matrix_; }
  CoordinateChange inverse() const { return CoordinateChange(*quadnet::inverse(matrix_)); }

  QuadraticForm apply(const QuadraticForm& q) const {
    // Gram of Q(g x) is gᵀ G g.
    RationalMatrix g = multiply(multiply(transpose(matrix_), q.gram()), matrix_);
    return QuadraticForm::from_gram(g);
  }

 private:
  RationalMatrix matrix_;
};

namespace detail {

inline RationalMatrix coefficient_rows(const std::vector<QuadraticForm>& forms) {
  RationalMatrix m;
  for (const auto& q : forms) m.push_back(q.coefficients());
  return m;
}

}  // namespace detail

/// A linear system of quadrics of fixed dimension: a point of Gr(k, 15).
/// Equality is equality of row spaces.
template <int Dim>
class QuadricSystem {
 public:
  explicit QuadricSystem(std::vector<QuadraticForm> basis) : basis_(std::move(basis)) {
    if (basis_.size() != Dim)
      throw DimensionError("expected " + std::to_string(Dim) + " quadrics, got " + std::to_string(basis_.size()));
    const int r = quadnet::rank(coefficient_matrix());
    if (r != Dim) throw RankError(Dim == 3 ? "not a net: generators are dependent" : "not a pencil: generators are dependent", r);
  }

  const std::vector<QuadraticForm>& basis() const { return basis_; }
  const QuadraticForm& operator[](std::size_t i) const { return basis_[i]; }
  RationalMatrix coefficient_matrix() const { return detail::coefficient_rows(basis_); }

  friend bool operator==(const QuadricSystem& a, const QuadricSystem& b) {
    return reduced_echelon(a.coefficient_matrix()).rows == reduced_echelon(b.coefficient_matrix()).rows;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i) s += ", ";
      s += basis_[i].to_string();
    }
    return s;
  }

 private:
  std::vector<QuadraticForm> basis_;
};

using Net = QuadricSystem<3>;
using Pencil = QuadricSystem<2>;

/// Reduced echelon basis under lex column order; initial monomials are
/// strictly lex-decreasing. Idempotent.
template <int Dim>
QuadricSystem<Dim> normalized_basis(const QuadricSystem<Dim>& n) {
  auto ech = reduced_echelon(n.coefficient_matrix());
  std::vector<QuadraticForm> rows;
  for (auto& r : ech.rows) rows.emplace_back(std::move(r));
  return QuadricSystem<Dim>(std::move(rows));
}

template <int Dim>
QuadricSystem<Dim> apply_coordinate_change(const QuadricSystem<Dim>& n, const CoordinateChange& g) {
  std::vector<QuadraticForm> rows;
  for (const auto& q : n.basis()) rows.push_back(g.apply(q));
  return QuadricSystem<Dim>(std::move(rows));
}

using Triple = std::array<int, 3>;

namespace detail {

// Rows scaled to primitive integer vectors; minors then only change by a
// common nonzero factor.
inline std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out;
  for (const auto& row : m) out.push_back(primitive_integer_vector(row));
  return out;
}

}  // namespace detail

/// Index triples {i<j<k} whose 3x3 minor is nonzero.
inline std::vector<Triple> plucker_support(const Net& n) {
  const auto m = detail::integer_rows(n.coefficient_matrix());
  std::vector<Triple> support;
  Integer t1, t2, det;
  for (int i = 0; i < kQuadraticMonomials; ++i)
    for (int j = i + 1; j < kQuadraticMonomials; ++j) {
      // 2x2 minors of the first two rows on columns (i, j), (i, k), (j, k).
      const Integer mij = m[0][i] * m[1][j] - m[0][j] * m[1][i];
      for (int k = j + 1; k < kQuadraticMonomials; ++k) {
        det = m[2][k] * mij;
        t1 = m[0][i] * m[1][k] - m[0][k] * m[1][i];
        det -= m[2][j] * t1;
        t2 = m[0][j] * m[1][k] - m[0][k] * m[1][j];
        det += m[2][i] * t2;
        if (sgn(det) != 0) support.push_back({i, j, k});
      }
    }
  return support;
}

/// Quadrics of a net given as polynomials in a..e.
inline Net net_from_polys(const std::vector<MultiPoly>& polys) {
  std::vector<QuadraticForm> rows;
  for (const auto& p : polys) rows.push_back(QuadraticForm::from_poly(p));
  return Net(std::move(rows));
}

}  // namespace quadnet
