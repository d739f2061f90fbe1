#include <gtest/gtest.h>

#include <random>

#include "quadnet/linalg.hpp"
#include "quadnet/parse.hpp"
#include "quadnet/poly.hpp"
#include "quadnet/poly_matrix.hpp"
#include "quadnet/rational.hpp"

using namespace quadnet;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

MultiPoly P(const std::string& s) { return parse_polynomial(s, kXYZ); }

MultiPoly random_form(std::mt19937_64& rng, int degree, int range = 5) {
  std::uniform_int_distribution<int> coeff(-range, range);
  MultiPoly f(kXYZ);
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) f.add_term({i, j, degree - i - j}, coeff(rng));
  return f;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(parse_rational("6/-4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  Rational r = parse_rational("10/4");
  EXPECT_EQ(r.get_den(), 2);
}

TEST(Rational, PrimitiveVector) {
  auto v = primitive_integer_vector({Rational(-1, 2), Rational(3, 4), 0});
  EXPECT_EQ(v, (std::vector<Integer>{2, -3, 0}));
}

TEST(Linalg, RankSolveNullspace) {
  RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(rank(m), 2);
  auto ns = nullspace(m, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& row : m) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * ns[0][j];
    EXPECT_EQ(s, 0);
  }
  EXPECT_EQ(determinant({{2, 1}, {1, 1}}), 1);
  EXPECT_FALSE(solve({{1, 1}, {1, 1}}, {1, 2}).has_value());
}

TEST(Poly, RingAxiomsOnRandomSamples) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_form(rng, 2), g = random_form(rng, 2), h = random_form(rng, 3);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    if (!f.is_zero() && !h.is_zero()) {
      EXPECT_EQ((f * h).degree(), f.degree() + h.degree());
    }
    EXPECT_EQ(f * g, g * f);
  }
}

TEST(Poly, ExactDivision) {
  auto f = P("x^2 - y^2");
  auto q = f.divide_exact(P("x - y"));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, P("x + y"));
  EXPECT_FALSE(f.divide_exact(P("x + z")).has_value());
}

TEST(Gcd, SelfIsNormalized) {
  auto f = P("-2x^2 + 4yz");
  EXPECT_EQ(multivariate_gcd(f, f), P("x^2 - 2yz"));
  EXPECT_EQ(multivariate_gcd(f, MultiPoly(kXYZ)), P("x^2 - 2yz"));
}

TEST(Gcd, MonomialFactor) {
  EXPECT_EQ(multivariate_gcd(P("y^3"), P("y^2 xz - y^4")), P("y^2"));
}

TEST(Gcd, CoprimeRandomQuadratics) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_form(rng, 2), g = random_form(rng, 2);
    // Coprime iff f and g share no common zero; with random data the
    // Sylvester resultant in x (after a generic shift) is nonzero.
    auto gcd = multivariate_gcd(f, g);
    EXPECT_TRUE(gcd.is_constant()) << f.to_string() << " / " << g.to_string();
  }
}

TEST(Gcd, CommonFactorRecovered) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_form(rng, 2), g = random_form(rng, 1), h = random_form(rng, 2);
    if (h.is_zero()) continue;
    auto d = multivariate_gcd(f * h, g * h);
    EXPECT_TRUE(d.divides(f * h));
    EXPECT_TRUE(h.normalized().divides(d) || h.is_constant());
  }
}

TEST(Squarefree, Examples) {
  auto r = squarefree_part(P("x^2y + xyz"));
  EXPECT_TRUE(r.is_squarefree);
  auto t = squarefree_part(P("2y^3xz - 2y^5"));
  EXPECT_FALSE(t.is_squarefree);
  EXPECT_TRUE(proportional(t.squarefree, P("yxz - y^3")));
  EXPECT_THROW(squarefree_part(MultiPoly(kXYZ)), IdenticallyZero);
}

TEST(Squarefree, LinearSquaredTimesCubic) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto l = random_form(rng, 1), c = random_form(rng, 3);
    if (l.is_zero() || c.is_zero()) continue;
    auto r = squarefree_part(l * l * c);
    EXPECT_FALSE(r.is_squarefree);
    EXPECT_TRUE(l.divides(r.squarefree));
  }
}

TEST(Squarefree, SquareOfNonconstantIsNotSquarefree) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_form(rng, 2);
    if (f.is_zero()) continue;
    EXPECT_FALSE(squarefree_part(f * f).is_squarefree);
  }
}

TEST(FactorMultiplicity, Examples) {
  EXPECT_EQ(factor_multiplicity(P("y^3xz - y^5"), P("y")), 3);
  EXPECT_EQ(factor_multiplicity(P("xz - y^2"), P("xz - y^2")), 1);
  EXPECT_EQ(factor_multiplicity(MultiPoly(kXYZ), P("x")), kInfiniteMultiplicity);
  EXPECT_THROW(factor_multiplicity(P("x"), P("3")), InvalidArgument);
}

TEST(PolyMatrix, IdentityDeterminant) {
  PolyMatrix m(5, std::vector<MultiPoly>(5, MultiPoly(kXYZ)));
  for (int i = 0; i < 5; ++i) m[i][i] = MultiPoly::constant(kXYZ, 1);
  EXPECT_EQ(det_poly_matrix(m), MultiPoly::constant(kXYZ, 1));
}

TEST(PolyMatrix, NonSquareRejected) {
  PolyMatrix m(2, std::vector<MultiPoly>(3, MultiPoly(kXYZ)));
  EXPECT_THROW(det_poly_matrix(m), DimensionError);
}

TEST(PolyMatrix, AgreesWithCofactorsAndEvaluation) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m(4, std::vector<MultiPoly>(4, MultiPoly(kXYZ)));
    for (auto& row : m)
      for (auto& e : row) e = random_form(rng, 1, 3);
    auto det = det_poly_matrix(m);
    EXPECT_EQ(det, det_by_cofactors(m));
    for (int p = 0; p < 10; ++p) {
      std::vector<Rational> pt{coeff(rng), coeff(rng), make_rational(coeff(rng), 3)};
      EXPECT_EQ(det.evaluate(pt), determinant(evaluate(m, pt)));
    }
  }
}
