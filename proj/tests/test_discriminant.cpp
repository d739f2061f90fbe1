#include <gtest/gtest.h>

#include <random>

#include "quadnet/discriminant.hpp"
#include "quadnet/parse.hpp"
#include "quadnet/sampling.hpp"

using namespace quadnet;

namespace {

MultiPoly XYZ(const std::string& s) { return parse_polynomial(s, net_plane_variables()); }
MultiPoly ST(const std::string& s) { return parse_polynomial(s, pencil_line_variables()); }

Pencil diagonal_pencil(const std::vector<int>& second) {
  RationalMatrix A(5, RationalVector(5, 0)), B = A;
  for (int i = 0; i < 5; ++i) {
    A[i][i] = 1;
    B[i][i] = second[i];
  }
  return Pencil({QuadraticForm::from_gram(A), QuadraticForm::from_gram(B)});
}

std::vector<std::vector<int>> partitions_of_five() {
  return {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
}

}  // namespace

TEST(PolyDeterminant, VeronesePencilGramIsSingular) {
  const auto p = parse_pencil("ac-b^2, ce-d^2");
  EXPECT_TRUE(det_poly_matrix(gram_pencil(p.basis(), pencil_line_variables())).is_zero());
}

TEST(Discriminant, TripleConic) {
  const auto d = discriminant_net(parse_net("ad-bc, ae+bd-c^2, be-cd"));
  EXPECT_TRUE(proportional(d, XYZ("y^3xz - y^5")));
  const auto raw = discriminant_of_basis(parse_net("ad-bc, ae+bd-c^2, be-cd").basis(), net_plane_variables());
  EXPECT_TRUE(proportional(raw, XYZ("2y^3xz - 2y^5")));
  EXPECT_EQ(classify_discriminant(parse_net("ad-bc, ae+bd-c^2, be-cd")), QuinticClass::non_reduced);
}

TEST(Discriminant, KempfIdealsNonReduced) {
  for (const char* s : {"ac-b^2, ae-2bd+c^2, ce-d^2", "ad-b^2, ae-bd+c^2, be-d^2", "ad-bc, ae+bd-c^2, be-cd",
                        "ad, ae+bd-c^2, be"})
    EXPECT_EQ(classify_discriminant(parse_net(s)), QuinticClass::non_reduced) << s;
}

TEST(Discriminant, GenericNetReduced) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    const Net n = random_dense_net(rng);
    const auto d = discriminant_net(n);
    EXPECT_EQ(d.degree(), 5);
    EXPECT_TRUE(d.is_homogeneous());
    EXPECT_EQ(classify_discriminant(n), QuinticClass::reduced);
  }
}

TEST(Discriminant, WhollySingularNetIsFlagged) {
  const Net n = parse_net("b^2+cd, c^2-be, d^2+e^2-bc");
  EXPECT_TRUE(discriminant_net(n).is_zero());
  EXPECT_EQ(classify_discriminant(n), QuinticClass::identically_zero);
}

TEST(Discriminant, VeronesePencilLineDivides) {
  // Every member of the Veronese pencil is singular, so the pencil's line
  // z = 0 divides the quintic. It is a double component exactly when the
  // third quadric vanishes on the vertices [y:0:0:0:-x] of the pencil,
  // i.e. has no a^2, ae, e^2 terms.
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int t = 0; t < 10; ++t) {
    RationalVector c(15);
    for (auto& x : c) x = coeff(rng);
    c[0] = 1;
    const std::vector<QuadraticForm> basis{parse_quadric("ac-b^2"), parse_quadric("ce-d^2"), QuadraticForm(c)};
    const auto d = discriminant_of_basis(basis, net_plane_variables());
    EXPECT_EQ(factor_multiplicity(d, XYZ("z")), 1);
    c[0] = c[4] = c[14] = 0;
    const std::vector<QuadraticForm> through{parse_quadric("ac-b^2"), parse_quadric("ce-d^2"), QuadraticForm(c)};
    EXPECT_GE(factor_multiplicity(discriminant_of_basis(through, net_plane_variables()), XYZ("z")), 2);
  }
}

TEST(Discriminant, BasisChangeIsSubstitution) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto& v = net_plane_variables();
  for (int t = 0; t < 5; ++t) {
    const Net n = random_dense_net(rng);
    RationalMatrix M(3, RationalVector(3));
    do {
      for (auto& row : M)
        for (auto& x : row) x = coeff(rng);
    } while (sgn(determinant(M)) == 0);
    std::vector<QuadraticForm> changed;
    for (int i = 0; i < 3; ++i) {
      QuadraticForm q;
      for (int j = 0; j < 3; ++j) {
        QuadraticForm term = n[j];
        term *= M[i][j];
        q += term;
      }
      changed.push_back(q);
    }
    // Σ x_i Q'_i = Σ_j (Σ_i M_ij x_i) Q_j.
    std::vector<MultiPoly> images;
    for (int j = 0; j < 3; ++j) {
      MultiPoly img(v);
      for (int i = 0; i < 3; ++i) img += MultiPoly::variable(v, i) * M[i][j];
      images.push_back(img);
    }
    const auto lhs = discriminant_of_basis(changed, v);
    const auto rhs = discriminant_of_basis(n.basis(), v).substitute(images);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Discriminant, UnimodularCoordinateChangeInvariant) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int t = 0; t < 5; ++t) {
    const Net n = random_dense_net(rng);
    // Unipotent upper-triangular times a permutation: determinant ±1.
    RationalMatrix g(5, RationalVector(5, 0));
    for (int i = 0; i < 5; ++i) {
      g[i][i] = 1;
      for (int j = i + 1; j < 5; ++j) g[i][j] = coeff(rng);
    }
    std::swap(g[0], g[3]);
    const auto moved = apply_coordinate_change(n, CoordinateChange(g));
    const auto v = net_plane_variables();
    EXPECT_TRUE(proportional(discriminant_of_basis(moved.basis(), v), discriminant_of_basis(n.basis(), v)));
  }
}

TEST(DiscriminantPencil, Examples) {
  EXPECT_TRUE(discriminant_pencil(parse_pencil("ac-b^2, ce-d^2")).is_zero());
  const auto diag = discriminant_pencil(diagonal_pencil({0, 1, 2, 3, 4}));
  EXPECT_TRUE(proportional(diag, ST("s") * ST("s+t") * ST("s+2t") * ST("s+3t") * ST("s+4t")));
  // Both quadrics contain the plane b = d = 0 and a smooth quadric in P^4
  // contains no plane, so every member of this pencil is singular.
  EXPECT_TRUE(discriminant_pencil(parse_pencil("ad-bc, be-cd")).is_zero());
  EXPECT_TRUE(discriminant_pencil(parse_pencil("ad-3b^2, be-cd")).is_zero());
}

TEST(Segre, GenericDiagonal) {
  const auto sym = segre_symbol(diagonal_pencil({0, 1, 2, 3, 4}));
  EXPECT_EQ(sym.shape(), (std::vector<std::vector<int>>(5, {1})));
  EXPECT_EQ(sym.to_string(), "(1,1,1,1,1)");
}

TEST(Segre, NamedRoundTrips) {
  auto p1 = pencil_from_segre({{0, {1}}, {1, {2}}, {2, {2}}});
  EXPECT_EQ(segre_symbol(p1).shape(), (std::vector<std::vector<int>>{{1}, {2}, {2}}));
  auto p0 = pencil_from_segre({{0, {1}}, {1, {1, 1}}, {2, {1, 1}}});
  EXPECT_EQ(segre_symbol(p0).shape(), (std::vector<std::vector<int>>{{1}, {1, 1}, {1, 1}}));
}

TEST(Segre, AllPartitionShapesRoundTrip) {
  for (const auto& shape : partitions_of_five()) {
    std::vector<SegreBlockSpec> spec;
    for (std::size_t i = 0; i < shape.size(); ++i) spec.push_back({make_rational(static_cast<long>(2 * i) - 3, 2), {shape[i]}});
    const auto sym = segre_symbol(pencil_from_segre(spec));
    ASSERT_EQ(sym.entries.size(), spec.size());
    for (const auto& s : spec) {
      const auto lin = ST("s") + ST("t") * s.eigenvalue;
      auto it = std::find_if(sym.entries.begin(), sym.entries.end(),
                             [&](const SegreEntry& e) { return proportional(e.factor, lin); });
      ASSERT_NE(it, sym.entries.end());
      EXPECT_EQ(it->blocks, s.blocks);
    }
  }
}

TEST(Segre, BlockSumsAreMultiplicities) {
  std::mt19937_64 rng(17);
  const std::vector<std::vector<SegreBlockSpec>> specs{
      {{0, {2, 1}}, {1, {1}}, {5, {1}}}, {{1, {3, 1}}, {-2, {1}}}, {{0, {1, 1, 1}}, {3, {2}}}};
  for (const auto& spec : specs) {
    const auto p = pencil_from_segre(spec);
    const auto sym = segre_symbol(p);
    const auto f = discriminant_pencil(p);
    int total = 0;
    for (const auto& e : sym.entries) {
      int sum = 0;
      for (int b : e.blocks) sum += b;
      EXPECT_EQ(sum, factor_multiplicity(f, e.factor));
      total += e.degree * sum;
    }
    EXPECT_EQ(total, 5);
  }
}

TEST(Segre, IrrationalRootsStayTogether) {
  // -2s^2 - t^2 and 2s^2 - t^2 are irreducible; a rational root adds a fifth.
  RationalMatrix A(5, RationalVector(5, 0)), B = A;
  A[0][0] = 1, A[1][1] = -2, B[0][1] = B[1][0] = 1;
  A[2][2] = 1, A[3][3] = 2, B[2][3] = B[3][2] = 1;
  A[4][4] = 1, B[4][4] = 3;
  const Pencil p({QuadraticForm::from_gram(A), QuadraticForm::from_gram(B)});
  const auto sym = segre_symbol(p);
  int degree_sum = 0;
  for (const auto& e : sym.entries) degree_sum += e.degree * static_cast<int>(e.blocks.size());
  EXPECT_EQ(degree_sum, 5);
  EXPECT_EQ(sym.shape(), (std::vector<std::vector<int>>(5, {1})));
  EXPECT_EQ(sym.entries.size(), 3u);
}

TEST(Segre, WhollySingular) {
  EXPECT_THROW(segre_symbol(parse_pencil("ac-b^2, ce-d^2")), WhollySingularPencil);
}

TEST(PencilFromSegre, Validation) {
  EXPECT_THROW(pencil_from_segre({{0, {2}}, {1, {2}}}), InvalidArgument);
  EXPECT_THROW(pencil_from_segre({{0, {2}}, {0, {3}}}), InvalidArgument);
  EXPECT_EQ(pencil_from_segre({{0, {1}}, {1, {1}}, {2, {1}}, {3, {1}}, {4, {1}}}), diagonal_pencil({0, 1, 2, 3, 4}));
}

TEST(PencilFromSegre, SingleBlockIsFifthPower) {
  const auto f = discriminant_pencil(pencil_from_segre({{3, {5}}}));
  EXPECT_TRUE(proportional(f, (ST("s") + ST("3t")).pow(5)));
}

TEST(RootMultiplicity, VertexProperty) {
  const auto q1 = parse_quadric("ad-bc");
  EXPECT_GE(pencil_root_multiplicity(Pencil({q1, parse_quadric("a^2+b^2+ce")}), 1, 0), 2);
  // Neither ad - bc nor a^2 involves e, so that pencil is wholly singular.
  EXPECT_THROW(pencil_root_multiplicity(Pencil({q1, parse_quadric("a^2")}), 1, 0), WhollySingularPencil);
  EXPECT_EQ(pencil_root_multiplicity(Pencil({q1, parse_quadric("e^2")}), 1, 0), 1);
  EXPECT_EQ(pencil_root_multiplicity(parse_pencil("ae+bd-c^2, a^2"), 1, 0), 0);
  EXPECT_THROW(pencil_root_multiplicity(parse_pencil("ac-b^2, ce-d^2"), 1, 0), WhollySingularPencil);
}

TEST(RootMultiplicity, RandomVertexPairs) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 30; ++t) EXPECT_GE(pencil_root_multiplicity(random_vertex_pencil(rng), 1, 0), 2);
}

TEST(Veronese, QuadricSections) {
  auto r = veronese_quadric_section_test(XYZ("xz - y^2"));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, parse_quadric("ae - 2bd + c^2"));
  auto a = veronese_quadric_section_test(XYZ("x^2"));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, parse_quadric("a^2"));
  EXPECT_FALSE(veronese_quadric_section_test(XYZ("x^2 + xz")).has_value());
  EXPECT_THROW(veronese_quadric_section_test(XYZ("x")), InvalidArgument);
}
