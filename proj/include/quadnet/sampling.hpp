#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "quadnet/net.hpp"
#include "quadnet/stability.hpp"

namespace quadnet {

enum class SampleKind { dense, sparse, strata };

inline std::string to_string(SampleKind k) {
  switch (k) {
    case SampleKind::dense: return "dense";
    case SampleKind::sparse: return "sparse";
    case SampleKind::strata: return "strata";
  }
  return "?";
}

inline SampleKind parse_sample_kind(const std::string& s) {
  if (s == "dense") return SampleKind::dense;
  if (s == "sparse") return SampleKind::sparse;
  if (s == "strata") return SampleKind::strata;
  throw InvalidArgument("unknown sample kind '" + s + "' (expected dense, sparse or strata)");
}

/// All 15 coefficients uniform in [-9, 9].
inline Net random_dense_net(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  while (true) {
    std::vector<QuadraticForm> rows;
    for (int i = 0; i < 3; ++i) {
      RationalVector c(kQuadraticMonomials);
      for (auto& x : c) x = coeff(rng);
      rows.emplace_back(std::move(c));
    }
    if (rank(detail::coefficient_rows(rows)) == 3) return Net(std::move(rows));
  }
}

/// Each quadric has 5 to 8 nonzero coefficients in [-9, 9].
inline Net random_sparse_net(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(5, 8), mag(1, 9), sign(0, 1);
  while (true) {
    std::vector<QuadraticForm> rows;
    for (int i = 0; i < 3; ++i) {
      std::vector<int> idx(kQuadraticMonomials);
      for (int j = 0; j < kQuadraticMonomials; ++j) idx[j] = j;
      std::shuffle(idx.begin(), idx.end(), rng);
      RationalVector c(kQuadraticMonomials, 0);
      const int k = count(rng);
      for (int j = 0; j < k; ++j) c[idx[j]] = mag(rng) * (sign(rng) ? 1 : -1);
      rows.emplace_back(std::move(c));
    }
    if (rank(detail::coefficient_rows(rows)) == 3) return Net(std::move(rows));
  }
}

/// A generic stratum net for a random type ρ_k and a random achievable
/// triple (half the time one of the candidate unstable triples), in a
/// randomly permuted coordinate system.
inline Net random_strata_net(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> type(1, 12);
  const auto& rho = twelve_type(type(rng));
  std::vector<WeightTriple> pool;
  if (rng() % 2 == 0 && rho.is_normalized()) pool = enumerate_candidate_triples(rho);
  if (pool.empty()) {
    const auto mult = weight_multiplicities(rho);
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (std::size_t j = i; j < mult.size(); ++j)
        for (std::size_t k = j; k < mult.size(); ++k) {
          WeightTriple t{mult[i].first, mult[j].first, mult[k].first};
          if (achievable(rho, t)) pool.push_back(t);
        }
  }
  const auto& triple = pool[rng() % pool.size()];
  Net n = generic_stratum_net(rho, triple, rng());
  std::array<int, kVariables> perm{0, 1, 2, 3, 4};
  std::shuffle(perm.begin(), perm.end(), rng);
  return apply_coordinate_change(n, CoordinateChange::permutation(perm));
}

inline Net random_net(SampleKind kind, std::mt19937_64& rng) {
  switch (kind) {
    case SampleKind::dense: return random_dense_net(rng);
    case SampleKind::sparse: return random_sparse_net(rng);
    case SampleKind::strata: return random_strata_net(rng);
  }
  return random_dense_net(rng);
}

/// The generator for sample `index` of a run with master seed `seed`.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

struct FuzzDisagreement {
  std::uint64_t index;
  SampleKind kind;
  std::string net;
  StabilityStatus twelve_type;
  StabilityStatus polytope;
};

struct FuzzReport {
  std::size_t count = 0;
  std::size_t agreement = 0;
  std::size_t disagreement = 0;
  std::size_t unstable = 0;
  std::size_t semistable = 0;
  std::size_t strict_mismatch = 0;  ///< same dichotomy, different stable/strict verdict
  std::vector<FuzzDisagreement> disagreements;
};

/// Compares the 12-type and polytope verdicts on `count` seeded nets; sample
/// i has kind mix[i % mix.size()] and its own generator, so the result does
/// not depend on the number of worker threads.
inline FuzzReport fuzz_criteria(std::size_t count, std::uint64_t seed, const std::vector<SampleKind>& mix,
                                unsigned threads = 0) {
  if (mix.empty()) throw InvalidArgument("fuzz mix must not be empty");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  FuzzReport report;
  report.count = count;
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= count) return;
      auto rng = sample_rng(seed, i);
      const auto kind = mix[i % mix.size()];
      const Net n = random_net(kind, rng);
      const auto a = twelve_type_check(n);
      const auto b = state_polytope_check(n);
      std::lock_guard<std::mutex> guard(lock);
      if (a.semistable() == b.semistable()) {
        ++report.agreement;
        if (a.status != b.status) ++report.strict_mismatch;
      } else {
        ++report.disagreement;
        report.disagreements.push_back({i, kind, n.to_string(), a.status, b.status});
      }
      ++(b.semistable() ? report.semistable : report.unstable);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::sort(report.disagreements.begin(), report.disagreements.end(),
            [](const auto& x, const auto& y) { return x.index < y.index; });
  return report;
}

}  // namespace quadnet

namespace quadnet {

/// A random rank-4 quadric Q1 (a transformed ad - bc) and a random quadric
/// Q2 through the vertex of Q1.
inline Pencil random_vertex_pencil(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  while (true) {
    RationalMatrix g(kVariables, RationalVector(kVariables));
    for (auto& row : g)
      for (auto& x : row) x = coeff(rng);
    if (sgn(determinant(g)) == 0) continue;
    QuadraticForm q1 = CoordinateChange(g).apply(QuadraticForm::from_poly(
        MultiPoly::variable(variable_names(), 0) * MultiPoly::variable(variable_names(), 3) -
        MultiPoly::variable(variable_names(), 1) * MultiPoly::variable(variable_names(), 2)));
    const ProjectivePoint v = vertex(q1);
    RationalVector c(kQuadraticMonomials);
    for (auto& x : c) x = coeff(rng);
    QuadraticForm q2(c);
    const std::vector<Rational> pt(v.begin(), v.end());
    const Rational value = evaluate(q2, pt);
    if (sgn(value) != 0) {
      for (const auto& m : all_monomials()) {
        const Rational mv = pt[m.first()] * pt[m.second()];
        if (sgn(mv) == 0) continue;
        QuadraticForm fix = QuadraticForm::monomial(m, -value / mv);
        q2 += fix;
        break;
      }
    }
    if (rank(detail::coefficient_rows({q1, q2})) == 2) return Pencil({q1, q2});
  }
}

}  // namespace quadnet
