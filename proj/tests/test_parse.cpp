#include <gtest/gtest.h>

#include <random>

#include "quadnet/parse.hpp"
#include "quadnet/sampling.hpp"
#include "quadnet/serialize.hpp"

using namespace quadnet;

namespace {

std::size_t parse_error_position(const std::string& text) {
  try {
    parse_net(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return 0;
}

}  // namespace

TEST(Parse, RibbonCoefficients) {
  const Net n = parse_net("ac-b^2, ae-2bd+c^2, ce-d^2");
  EXPECT_EQ(n[1][Monomial2::from_pair(1, 3)], -2);
  EXPECT_EQ(n[1][Monomial2::from_pair(2, 2)], 1);
  EXPECT_EQ(n[0][Monomial2::from_pair(1, 1)], -1);
}

TEST(Parse, ImplicitAndExplicitMultiplicationAgree) {
  EXPECT_EQ(parse_quadric("ad"), parse_quadric("a*d"));
  EXPECT_EQ(parse_quadric("2ad"), parse_quadric("2*a*d"));
  EXPECT_EQ(parse_quadric("a a"), parse_quadric("a^2"));
  EXPECT_EQ(parse_quadric("da"), parse_quadric("ad"));
  EXPECT_EQ(parse_quadric("  - 3/4 b c + e^2 "), parse_quadric("-3/4bc+e^2"));
}

TEST(Parse, RationalCoefficients) {
  const auto q = parse_quadric("1/2a^2 - 7/3 ce");
  EXPECT_EQ(q[Monomial2::from_pair(0, 0)], make_rational(1, 2));
  EXPECT_EQ(q[Monomial2::from_pair(2, 4)], make_rational(-7, 3));
  EXPECT_EQ(parse_quadric("2/4 ab")[Monomial2::from_pair(0, 1)], make_rational(1, 2));
}

TEST(Parse, LikeTermsCombine) {
  const auto q = parse_quadric("ab + ba - 2ab + c^2");
  EXPECT_EQ(q, parse_quadric("c^2"));
}

TEST(Parse, TripleConic) {
  const Net n = parse_net("ad-bc, ae+bd-c^2, be-cd");
  EXPECT_EQ(n.to_string(), "ad - bc, ae + bd - c^2, be - cd");
}

TEST(ParseErrors, DependentQuadricsAreARankError) {
  try {
    parse_net("ad-bc, 2ad-2bc, be-cd");
    FAIL();
  } catch (const RankError& e) {
    EXPECT_EQ(e.rank(), 2);
  }
  EXPECT_THROW(parse_pencil("ab, 3ab"), RankError);
}

TEST(ParseErrors, Positions) {
  EXPECT_EQ(parse_error_position("ad-bc, ae+bd-c^2, be-cx"), 22u);
  EXPECT_EQ(parse_error_position("ad-bc, ae+bd-c^2, be-c%"), 22u);
  EXPECT_EQ(parse_error_position("ad-bc, ae+bd-c^, be-cd"), 15u);
  EXPECT_EQ(parse_error_position("ad-bc, ae+ -c^2, be-cd"), 11u);
  EXPECT_EQ(parse_error_position("ad-bc, 1/0ab, be-cd"), 9u);
}

TEST(ParseErrors, WrongQuadricCount) {
  EXPECT_THROW(parse_net("ad-bc, be-cd"), ParseError);
  EXPECT_THROW(parse_net("ad, bc, be, cd"), ParseError);
  EXPECT_THROW(parse_pencil("ad"), ParseError);
}

TEST(ParseErrors, InhomogeneousTerms) {
  EXPECT_THROW(parse_net("ad-b, ae, be"), ParseError);
  EXPECT_THROW(parse_net("ad-b^3, ae, be"), ParseError);
  EXPECT_THROW(parse_net("ad+1, ae, be"), ParseError);
  EXPECT_THROW(parse_quadric("a^2b"), ParseError);
}

TEST(ParseErrors, EmptyAndZero) {
  EXPECT_THROW(parse_net(", ae, be"), ParseError);
  EXPECT_THROW(parse_net("ab-ba, ae, be"), ParseError);
  EXPECT_THROW(parse_net(""), ParseError);
  EXPECT_THROW(parse_quadric("a^99999999999999"), ParseError);
}

TEST(ParsePolynomial, OtherVariables) {
  const auto f = parse_polynomial("xy^3z - y^5", {"x", "y", "z"});
  EXPECT_EQ(f.degree(), 5);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_THROW(parse_polynomial("xa", {"x", "y", "z"}), ParseError);
}

TEST(Serialize, NetDocumentShape) {
  const auto j = to_json(parse_net("ad-bc, ae+bd-c^2, be-cd"));
  ASSERT_EQ(j["quadrics"].size(), 3u);
  for (const auto& row : j["quadrics"]) {
    ASSERT_EQ(row.size(), 15u);
    for (const auto& x : row) EXPECT_TRUE(x.is_string());
  }
  EXPECT_EQ(j["quadrics"][0][3], "1");   // ad
  EXPECT_EQ(j["quadrics"][0][6], "-1");  // bc
}

TEST(Serialize, JsonErrors) {
  EXPECT_THROW(net_from_json(Json::parse(R"({"quadric": []})")), InvalidArgument);
  EXPECT_THROW(net_from_json(Json::parse(R"({"quadrics": [[1]]})")), DimensionError);
  Json zero = Json::parse(R"({"quadrics": []})");
  for (int i = 0; i < 3; ++i) zero["quadrics"].push_back(Json::array());
  for (auto& row : zero["quadrics"])
    for (int k = 0; k < 15; ++k) row.push_back("0");
  EXPECT_THROW(net_from_json(zero), RankError);
  zero["quadrics"][0][0] = "1/0";
  EXPECT_THROW(net_from_json(zero), InvalidArgument);
  zero["quadrics"][0][0] = true;
  EXPECT_THROW(net_from_json(zero), InvalidArgument);
}

TEST(Serialize, IntegerEntriesAccepted) {
  Json j = to_json(parse_net("ad-bc, ae+bd-c^2, be-cd"));
  j["quadrics"][0][3] = 1;
  EXPECT_EQ(net_from_json(j), parse_net("ad-bc, ae+bd-c^2, be-cd"));
}

TEST(RoundTrip, ParseSerializeParse) {
  for (const auto& text : {"ac-b^2, ae-2bd+c^2, ce-d^2", "1/2ad - 3/7bc, ae+bd-c^2, be-cd", "ad, ae+bd-c^2, be"}) {
    const Net n = parse_net(text);
    EXPECT_EQ(parse_net(n.to_string()).basis(), n.basis()) << text;
    EXPECT_EQ(net_from_json(Json::parse(to_json(n).dump())).basis(), n.basis()) << text;
  }
}

TEST(RoundTrip, RandomNets) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(31, i);
    const Net n = random_net(static_cast<SampleKind>(i % 3), rng);
    const Net again = parse_net(n.to_string());
    ASSERT_EQ(again.basis(), n.basis()) << n.to_string();
    EXPECT_EQ(parse_net(again.to_string()).basis(), again.basis());
    EXPECT_EQ(net_from_json(to_json(n)).basis(), n.basis());
  }
}

TEST(Serialize, VerdictJson) {
  const auto v = twelve_type_check(parse_net("ad-bc, ae-bd, ce-d^2"));
  const auto j = to_json(v);
  EXPECT_EQ(j["status"], "unstable");
  EXPECT_EQ(j["worst_mu"], -2);
  EXPECT_EQ(j["certificate"], Json::parse("[3,3,-2,-2,-2]"));
  EXPECT_EQ(j["certificate_type"], 3);
  EXPECT_EQ(j["method"], "twelve-type");
}
