#include <gtest/gtest.h>

#include <random>
#include <set>

#include "quadnet/parse.hpp"
#include "quadnet/sampling.hpp"
#include "quadnet/stability.hpp"

using namespace quadnet;

namespace {

const char* kScroll = "ad-bc, ae-bd, ce-d^2";
const char* kRibbon = "ac-b^2, ae-2bd+c^2, ce-d^2";
const char* kDoubleTwisted = "ad-b^2, ae-bd+c^2, be-d^2";
const char* kTripleConic = "ad-bc, ae+bd-c^2, be-cd";
const char* kDoubleLine = "ad, ae+bd-c^2, be";

const OneParamSubgroup kBalanced{2, 1, 0, -1, -2};

Net recombined(const Net& n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  while (true) {
    std::vector<QuadraticForm> rows;
    for (int i = 0; i < 3; ++i) {
      QuadraticForm q;
      for (int j = 0; j < 3; ++j) {
        QuadraticForm t = n[j];
        t *= coeff(rng);
        q += t;
      }
      rows.push_back(q);
    }
    if (rank(detail::coefficient_rows(rows)) == 3) return Net(rows);
  }
}

}  // namespace

TEST(OneParamSubgroup, Validation) {
  EXPECT_THROW(OneParamSubgroup(1, 0, 0, 0, 0), InvalidArgument);
  EXPECT_THROW(OneParamSubgroup(0, 0, 0, 0, 0), InvalidArgument);
  EXPECT_TRUE(OneParamSubgroup(2, 1, 0, -1, -2).is_normalized());
  EXPECT_FALSE(OneParamSubgroup(1, 2, 0, -1, -2).is_normalized());
}

TEST(TwelveTypes, NormalizedAndBalanced) {
  ASSERT_EQ(twelve_types().size(), 12u);
  for (const auto& r : twelve_types()) EXPECT_TRUE(r.is_normalized());
  EXPECT_EQ(distinct_permutations(twelve_type(1)).size(), 5u);
  EXPECT_EQ(distinct_permutations(twelve_type(12)).size(), 120u);
  EXPECT_EQ(distinct_permutations(twelve_type(3)).size(), 10u);
}

TEST(MonomialWeight, RhoTwelveWeightSet) {
  const auto& r12 = twelve_type(12);
  EXPECT_EQ(monomial_weight(Monomial2(0), r12), 26);
  std::set<long long> weights;
  for (const auto& m : all_monomials()) weights.insert(monomial_weight(m, r12));
  EXPECT_EQ(weights, (std::set<long long>{26, 21, 16, 11, 6, 1, -4, -9, -14, -24, -34}));
  for (const auto& m : all_monomials()) EXPECT_EQ(monomial_weight(m, r12.scaled(2)), 2 * monomial_weight(m, r12));
}

TEST(InitialWeights, Examples) {
  EXPECT_EQ(initial_weights(parse_net(kScroll), twelve_type(3)), (WeightTriple{1, 1, -4}));
  EXPECT_EQ(initial_weights(parse_net(kTripleConic), kBalanced), (WeightTriple{1, 0, -1}));
  EXPECT_EQ(initial_weights(parse_net("a^2, b^2, c^2"), twelve_type(4)), (WeightTriple{8, -2, -2}));
}

TEST(Mu, Examples) {
  EXPECT_EQ(mu(parse_net(kScroll), twelve_type(3)), -2);
  EXPECT_EQ(mu(parse_net(kTripleConic), kBalanced), 0);
}

TEST(Mu, EqualsSumOfInitialWeights) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const Net n = random_net(t % 2 ? SampleKind::sparse : SampleKind::strata, rng);
    for (int k = 1; k <= 12; ++k)
      for (const auto& rho : distinct_permutations(twelve_type(k))) {
        const auto w = initial_weights(n, rho);
        ASSERT_EQ(mu(n, rho), w[0] + w[1] + w[2]);
      }
  }
}

TEST(Mu, LinearAndBasisInvariant) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 20; ++t) {
    const Net n = random_net(SampleKind::sparse, rng);
    const Net m = recombined(n, rng);
    for (int k = 1; k <= 12; ++k) {
      const auto& rho = twelve_type(k);
      EXPECT_EQ(mu(n, rho.scaled(3)), 3 * mu(n, rho));
      EXPECT_EQ(mu(m, rho), mu(n, rho));
    }
  }
}

TEST(Mu, PermutationEquivariant) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 20; ++t) {
    const Net n = random_net(SampleKind::strata, rng);
    std::array<int, kVariables> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    // The change sends variable i to perm[i]; weights follow the variables.
    const auto g = CoordinateChange::permutation(perm);
    const Net moved = apply_coordinate_change(n, g);
    for (int k = 1; k <= 12; ++k) {
      const auto& rho = twelve_type(k);
      Weights w{};
      for (int i = 0; i < kVariables; ++i) w[perm[i]] = rho[i];
      Weights w2{};
      for (int i = 0; i < kVariables; ++i) w2[i] = rho[perm[i]];
      const long long original = mu(n, rho);
      EXPECT_TRUE(mu(moved, OneParamSubgroup(w)) == original || mu(moved, OneParamSubgroup(w2)) == original);
    }
  }
}

TEST(TwelveTypeCheck, KempfIdealsStrictlySemistable) {
  for (const char* s : {kRibbon, kDoubleTwisted, kTripleConic, kDoubleLine}) {
    const auto v = twelve_type_check(parse_net(s));
    EXPECT_EQ(v.status, StabilityStatus::strictly_semistable) << s;
    EXPECT_EQ(v.worst_mu, 0) << s;
    ASSERT_TRUE(v.certificate.has_value());
    EXPECT_EQ(mu(parse_net(s), *v.certificate), 0);
  }
}

TEST(TwelveTypeCheck, SmoothScrollUnstableByRhoThree) {
  const auto v = twelve_type_check(parse_net(kScroll));
  EXPECT_EQ(v.status, StabilityStatus::unstable);
  EXPECT_EQ(v.worst_mu, -2);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_EQ(v.certificate_type, 3);
  EXPECT_EQ(*v.certificate, OneParamSubgroup(3, 3, -2, -2, -2));
}

TEST(TwelveTypeCheck, NetInsideDEV) {
  const Net n = parse_net("ad, ae, be");
  const auto v = twelve_type_check(n);
  EXPECT_EQ(v.status, StabilityStatus::unstable);
  EXPECT_LT(mu(n, twelve_type(2)), 0);
  EXPECT_LE(mu(n, twelve_type(2)), -3);
  EXPECT_EQ(state_polytope_check(n).status, StabilityStatus::unstable);
}

TEST(TwelveTypeCheck, IdentityPermutationOnly) {
  // Destabilized only by a rearrangement of ρ_3 (c,d,e roles moved to a,b,c).
  const Net n = parse_net("ed-cb, ea-cd, ab-d^2");
  EXPECT_EQ(twelve_type_check(n).status, StabilityStatus::unstable);
  EXPECT_EQ(twelve_type_check(n, PermutationMode::identity).status != StabilityStatus::unstable ||
                twelve_type_check(n, PermutationMode::identity).certificate_type != 3,
            true);
}

TEST(TwelveTypeCheck, GenericNetStable) {
  std::mt19937_64 rng(3);
  const auto v = twelve_type_check(random_dense_net(rng));
  EXPECT_EQ(v.status, StabilityStatus::stable);
  EXPECT_GT(v.worst_mu, 0);
  EXPECT_FALSE(v.certificate.has_value());
}

TEST(StatePolytope, OnePointHull) {
  const auto v = state_polytope_check(parse_net("a^2, b^2, c^2"));
  EXPECT_EQ(v.status, StabilityStatus::unstable);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_LT(mu(parse_net("a^2, b^2, c^2"), *v.certificate), 0);
}

TEST(StatePolytope, KempfIdealsFeasible) {
  for (const char* s : {kRibbon, kDoubleTwisted, kTripleConic, kDoubleLine}) {
    const auto v = state_polytope_check(parse_net(s));
    EXPECT_EQ(v.status, StabilityStatus::strictly_semistable) << s;
    EXPECT_EQ(v.method, Method::polytope);
  }
}

TEST(StatePolytope, ScrollKempfDirection) {
  const Net n = parse_net(kScroll);
  const auto v = state_polytope_check(n);
  EXPECT_EQ(v.status, StabilityStatus::unstable);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_EQ(*v.certificate, OneParamSubgroup(3, 3, -2, -2, -2));
  EXPECT_EQ(v.worst_mu, -2);
}

TEST(StatePolytope, FarkasRayDestabilizes) {
  std::mt19937_64 rng(41);
  int seen = 0;
  for (int t = 0; t < 60; ++t) {
    const Net n = random_net(SampleKind::strata, rng);
    const WeightProfile profile(n);
    const auto pa = analyze_polytope(profile);
    if (pa.feasible) continue;
    ++seen;
    ASSERT_TRUE(pa.farkas && pa.destabilizer);
    EXPECT_LT(profile.mu(*pa.farkas), 0);
    EXPECT_LT(profile.mu(*pa.destabilizer), 0);
  }
  EXPECT_GT(seen, 0);
}

TEST(StatePolytope, BoundaryWitnessHasZeroMu) {
  for (const char* s : {kRibbon, kDoubleTwisted, kTripleConic, kDoubleLine}) {
    const Net n = parse_net(s);
    const auto v = state_polytope_check(n);
    ASSERT_TRUE(v.certificate.has_value());
    EXPECT_EQ(mu(n, *v.certificate), 0);
  }
}

TEST(Stabilizer, KempfSubgroups) {
  EXPECT_TRUE(stabilizing_subgroup_check(parse_net(kRibbon), kBalanced));
  EXPECT_TRUE(stabilizing_subgroup_check(parse_net(kDoubleTwisted), OneParamSubgroup(3, 1, 0, -1, -3)));
  EXPECT_TRUE(stabilizing_subgroup_check(parse_net(kTripleConic), kBalanced));
  EXPECT_TRUE(stabilizing_subgroup_check(parse_net(kDoubleLine), kBalanced));
  EXPECT_FALSE(stabilizing_subgroup_check(parse_net(kRibbon), OneParamSubgroup(3, 1, 0, -1, -3)));
}

TEST(Stabilizer, GenericNetNotFixed) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const Net n = random_dense_net(rng);
    for (int k = 1; k <= 12; ++k) EXPECT_FALSE(stabilizing_subgroup_check(n, twelve_type(k)));
    EXPECT_FALSE(stabilizing_subgroup_check(n, kBalanced));
  }
}

TEST(Stabilizer, FixedNetMuAntisymmetric) {
  for (const char* s : {kRibbon, kTripleConic, kDoubleLine}) {
    const Net n = parse_net(s);
    EXPECT_EQ(mu(n, kBalanced), -mu(n, kBalanced.inverse()));
  }
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const Net n = random_net(SampleKind::sparse, rng);
    const auto& rho = twelve_type(1 + t % 12);
    const Net lim = one_param_limit(n, rho, LimitDirection::to_infinity);
    EXPECT_EQ(mu(lim, rho), -mu(lim, rho.inverse()));
  }
}

TEST(Limit, TrigonalContraction) {
  const Net n = parse_net("ad-bc, ae-c^2+bd+d^2, be-cd");
  EXPECT_EQ(one_param_limit(n, kBalanced, LimitDirection::to_infinity), parse_net(kTripleConic));
}

TEST(Limit, FixedNetIsItsOwnLimit) {
  const Net n = parse_net(kRibbon);
  EXPECT_EQ(one_param_limit(n, kBalanced, LimitDirection::to_infinity), n);
  EXPECT_EQ(one_param_limit(n, kBalanced, LimitDirection::to_zero), n);
}

TEST(Limit, FixedByRhoAndIdempotent) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const Net n = random_net(t % 2 ? SampleKind::dense : SampleKind::sparse, rng);
    const auto& rho = twelve_type(1 + t % 12);
    for (auto dir : {LimitDirection::to_zero, LimitDirection::to_infinity}) {
      const Net lim = one_param_limit(n, rho, dir);
      EXPECT_TRUE(stabilizing_subgroup_check(lim, rho));
      EXPECT_EQ(one_param_limit(lim, rho, dir), lim);
    }
    // Toward infinity the limit keeps the initial weights.
    EXPECT_EQ(initial_weights(one_param_limit(n, rho, LimitDirection::to_infinity), rho), initial_weights(n, rho));
  }
}

TEST(Triples, RhoTwelveCandidates) {
  const auto t = enumerate_candidate_triples(twelve_type(12));
  const std::set<WeightTriple> got(t.begin(), t.end());
  const std::set<WeightTriple> expected{{16, -4, -14}, {16, 6, -24}, {11, -4, -9}, {6, -4, -4}, {6, 1, -9}};
  for (const auto& e : expected) EXPECT_TRUE(got.count(e)) << e[0] << "," << e[1] << "," << e[2];
}

TEST(Triples, RhoFiveContainsPublishedTriple) {
  const auto t = enumerate_candidate_triples(twelve_type(5));
  EXPECT_NE(std::find(t.begin(), t.end(), WeightTriple{6, -4, -4}), t.end());
}

TEST(Triples, FiltersAreClosed) {
  for (int k = 1; k <= 12; ++k) {
    const auto& rho = twelve_type(k);
    for (const auto& t : enumerate_candidate_triples(rho)) {
      EXPECT_TRUE(passes_initial_weight_conditions(rho, t));
      EXPECT_LT(t[0] + t[1] + t[2], 0);
      EXPECT_TRUE(achievable(rho, t));
    }
  }
}

TEST(Triples, RhoOneCandidates) {
  const auto t = enumerate_candidate_triples(twelve_type(1));
  EXPECT_EQ(t, (std::vector<WeightTriple>{{2, -3, -3}}));
}

TEST(Triples, BruteForceAgreement) {
  const OneParamSubgroup rho(1, 0, 0, 0, -1);
  const auto got = enumerate_candidate_triples(rho);
  std::vector<WeightTriple> brute;
  std::set<long long> ws;
  for (const auto& m : all_monomials()) ws.insert(monomial_weight(m, rho));
  for (auto x = ws.rbegin(); x != ws.rend(); ++x)
    for (auto y = x; y != ws.rend(); ++y)
      for (auto z = y; z != ws.rend(); ++z) {
        WeightTriple t{*x, *y, *z};
        if (t[0] + t[1] + t[2] < 0 && achievable(rho, t) && passes_initial_weight_conditions(rho, t))
          brute.push_back(t);
      }
  EXPECT_EQ(got, brute);
  EXPECT_THROW(enumerate_candidate_triples(OneParamSubgroup(-1, 0, 0, 0, 1)), InvalidArgument);
}

TEST(StratumNet, DeterministicAndVerified) {
  const auto& r12 = twelve_type(12);
  const WeightTriple t{16, -4, -14};
  EXPECT_EQ(generic_stratum_net(r12, t, 42), generic_stratum_net(r12, t, 42));
  for (std::uint64_t s = 0; s < 100; ++s) ASSERT_EQ(initial_weights(generic_stratum_net(r12, t, s), r12), t);
  const Net n = normalized_basis(generic_stratum_net(r12, t, 1));
  // Initial monomials under ρ_12 have weights 16, -4, -14: ac or b^2, ae or cd, ce or d^2.
  EXPECT_THROW(generic_stratum_net(r12, WeightTriple{26, 26, 0}, 0), InvalidArgument);
}

TEST(Refine, SmallTypes) {
  const auto seeds = default_seeds();
  auto r5 = refine_triples_by_cross_elimination(5, enumerate_candidate_triples(twelve_type(5)), seeds);
  EXPECT_TRUE(r5.probabilistic);
  EXPECT_NE(std::find(r5.triples.begin(), r5.triples.end(), WeightTriple{6, -4, -4}), r5.triples.end());
  auto r6 = refine_triples_by_cross_elimination(6, enumerate_candidate_triples(twelve_type(6)), seeds);
  EXPECT_EQ(r6.triples, (std::vector<WeightTriple>{{8, -2, -7}, {3, -2, -2}}));
}

TEST(Refine, RhoTwelve) {
  auto r = refine_triples_by_cross_elimination(12, enumerate_candidate_triples(twelve_type(12)), default_seeds());
  EXPECT_EQ(r.triples, (std::vector<WeightTriple>{{16, -4, -14}}));
}

TEST(CriterionEquivalence, MixedSample) {
  const auto report = fuzz_criteria(150, 99, {SampleKind::dense, SampleKind::sparse, SampleKind::strata});
  EXPECT_EQ(report.agreement, 150u);
  EXPECT_EQ(report.disagreement, 0u);
  EXPECT_GT(report.unstable, 0u);
  EXPECT_GT(report.semistable, 0u);
}

TEST(Refine, RhoTenNeedsLeviCoordinates) {
  // c and d share the weight -1 under rho10; the (8,3,-12) stratum is only seen
  // as unstable after a change of coordinates inside {c, d}.
  auto r = refine_triples_by_cross_elimination(10, enumerate_candidate_triples(twelve_type(10)), default_seeds());
  EXPECT_EQ(r.triples, (std::vector<WeightTriple>{{8, -2, -7}}));
}

TEST(LeviAdapted, SameStratumAndRowRank) {
  const auto& r10 = twelve_type(10);
  const WeightTriple t{8, 3, -12};
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Net n = generic_stratum_net(r10, t, s);
    const auto copies = levi_adapted_nets(n, r10);
    EXPECT_FALSE(copies.empty());
    for (const auto& m : copies) EXPECT_EQ(initial_weights(m, r10), t);
  }
  // Distinct weights leave nothing to adapt.
  EXPECT_TRUE(levi_adapted_nets(generic_stratum_net(twelve_type(12), {16, -4, -14}, 0), twelve_type(12)).empty());
}
