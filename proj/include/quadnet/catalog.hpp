#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadnet/discriminant.hpp"
#include "quadnet/error.hpp"
#include "quadnet/net.hpp"
#include "quadnet/parse.hpp"
#include "quadnet/stability.hpp"

namespace quadnet {

enum class EntryKind { net, pencil };

inline std::string to_string(EntryKind k) { return k == EntryKind::net ? "net" : "pencil"; }

struct ExpectedLimit {
  OneParamSubgroup subgroup;
  LimitDirection direction;
  std::string target;  ///< name of the catalog entry the limit must equal
};

/// A named net or pencil with the verdicts it is expected to produce. Unset
/// optionals are not checked.
struct CatalogEntry {
  std::string name;
  std::string description;
  EntryKind kind = EntryKind::net;
  std::vector<QuadraticForm> quadrics;

  std::optional<StabilityStatus> status;
  std::optional<long long> worst_mu;
  std::optional<int> certificate_type;
  std::optional<OneParamSubgroup> stabilizer;
  std::optional<QuinticClass> discriminant;
  /// Discriminant up to a nonzero scalar, in x,y,z (nets) or s,t (pencils).
  std::optional<std::string> discriminant_form;
  bool wholly_singular = false;
  /// Pencils only: equations vanishing at the vertex of every rank-4 member.
  std::vector<std::string> vertex_locus;
  std::optional<ExpectedLimit> limit;
  std::vector<std::string> annotations;

  Net net() const {
    if (kind != EntryKind::net) throw InvalidArgument("catalog entry '" + name + "' is a pencil");
    return Net(quadrics);
  }
  Pencil pencil() const {
    if (kind != EntryKind::pencil) throw InvalidArgument("catalog entry '" + name + "' is a net");
    return Pencil(quadrics);
  }
  std::string expression() const {
    std::string s;
    for (std::size_t i = 0; i < quadrics.size(); ++i) {
      if (i) s += ", ";
      s += quadrics[i].to_string();
    }
    return s;
  }
};

// ---------------------------------------------------------------------------
// Families with free linear forms and parameters.

namespace detail {

inline long small_coefficient(std::mt19937_64& rng) { return static_cast<long>(rng() % 7) - 3; }

inline MultiPoly var(std::size_t i) { return MultiPoly::variable(variable_names(), i); }

inline MultiPoly poly(std::string_view text) { return parse_polynomial(text, variable_names()); }

inline std::vector<QuadraticForm> forms(const std::vector<MultiPoly>& polys) {
  std::vector<QuadraticForm> out;
  for (const auto& p : polys) out.push_back(QuadraticForm::from_poly(p));
  return out;
}

}  // namespace detail

/// A linear form with small seeded coefficients that involves d or e, so it
/// is not contained in the span of a, b, c.
inline MultiPoly seeded_linear_form(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::array<long, kVariables> c{};
    for (auto& x : c) x = detail::small_coefficient(rng);
    if (c[3] == 0 && c[4] == 0) continue;
    MultiPoly L(variable_names());
    for (int i = 0; i < kVariables; ++i) L += Rational(c[i]) * detail::var(i);
    return L;
  }
}

inline MultiPoly seeded_quadric(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    RationalVector c(kQuadraticMonomials);
    for (auto& x : c) x = Rational(detail::small_coefficient(rng));
    QuadraticForm q(c);
    if (!q.is_zero()) return q.to_poly();
  }
}

inline Rational seeded_nonzero(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true)
    if (long v = detail::small_coefficient(rng)) return Rational(v);
}

/// (ad−bc, ae−c²+L², be−cd): a double twisted cubic meeting the residual conic twice.
inline Net dtc_family(const MultiPoly& L) {
  using detail::poly;
  return net_from_polys({poly("ad-bc"), poly("ae-c^2") + L * L, poly("be-cd")});
}

/// (ad−bc, ae−c²+bL₁+dL₂, be−cd): a double conic meeting a rational normal quartic.
inline Net double_conic_family(const MultiPoly& L1, const MultiPoly& L2) {
  using detail::poly;
  return net_from_polys({poly("ad-bc"), poly("ae-c^2") + detail::var(1) * L1 + detail::var(3) * L2, poly("be-cd")});
}

/// (ad−bc, ae−c²+bd+ηd², be−cd), the flat limit reached in the trigonal contraction.
inline Net trigonal_limit_net(const Rational& eta) {
  using detail::poly;
  return net_from_polys({poly("ad-bc"), poly("ae-c^2+bd") + eta * poly("d^2"), poly("be-cd")});
}

/// (be−cd+R₁, ae−c²+R₂, ad−bc+R₃): the t = 1 member of the deformation of the cubic scroll.
inline Net trigonal_deformation(const MultiPoly& R1, const MultiPoly& R2, const MultiPoly& R3) {
  using detail::poly;
  return net_from_polys({poly("be-cd") + R1, poly("ae-c^2") + R2, poly("ad-bc") + R3});
}

/// (ad−μb², be−cd).
inline Pencil rank_degenerate_pencil(const Rational& mu) {
  using detail::poly;
  return Pencil(detail::forms({poly("ad") - mu * poly("b^2"), poly("be-cd")}));
}

// ---------------------------------------------------------------------------
// The shipped catalog.

namespace detail {

inline CatalogEntry net_entry(std::string name, std::string description, const Net& n) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.kind = EntryKind::net;
  e.quadrics = n.basis();
  return e;
}

inline CatalogEntry net_entry(std::string name, std::string description, std::string_view text) {
  return net_entry(std::move(name), std::move(description), parse_net(text));
}

inline CatalogEntry pencil_entry(std::string name, std::string description, const Pencil& p) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.kind = EntryKind::pencil;
  e.quadrics = p.basis();
  return e;
}

inline CatalogEntry kempf_entry(std::string name, std::string description, std::string_view text,
                                const OneParamSubgroup& stabilizer) {
  auto e = net_entry(std::move(name), std::move(description), text);
  e.status = StabilityStatus::strictly_semistable;
  e.worst_mu = 0;
  e.stabilizer = stabilizer;
  e.discriminant = QuinticClass::non_reduced;
  e.annotations.push_back("fixed by a diagonal subgroup, so torus semi-stability certifies full semi-stability");
  return e;
}

inline CatalogEntry unstable_entry(std::string name, std::string description, std::string_view text, int type,
                                   long long mu, QuinticClass disc) {
  auto e = net_entry(std::move(name), std::move(description), text);
  e.status = StabilityStatus::unstable;
  e.worst_mu = mu;
  e.certificate_type = type;
  e.discriminant = disc;
  e.annotations.push_back("generic member of the rho" + std::to_string(type) + "-unstable stratum");
  return e;
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  const OneParamSubgroup balanced(Weights{2, 1, 0, -1, -2});

  c.push_back(kempf_entry("balanced-ribbon", "the balanced genus 5 ribbon I_R", "ac-b^2, ae-2bd+c^2, ce-d^2",
                          balanced));
  c.push_back(kempf_entry("double-twisted-cubic",
                          "I_DT, a double twisted cubic meeting the residual conic in two points",
                          "ad-b^2, ae-bd+c^2, be-d^2", OneParamSubgroup(Weights{3, 1, 0, -1, -3})));
  {
    auto e = kempf_entry("triple-conic", "I_T, a triple conic with two lines", "ad-bc, ae+bd-c^2, be-cd", balanced);
    e.discriminant_form = "xy^3z-y^5";
    e.annotations.push_back("discriminant y^3(xz-y^2) is an SL(3)-unstable plane quintic");
    e.annotations.push_back("image of the trigonal divisor");
    c.push_back(std::move(e));
  }
  c.push_back(kempf_entry("double-line", "I_DL, two double lines joined by two conics", "ad, ae+bd-c^2, be",
                          balanced));

  {
    const auto L = seeded_linear_form(1);
    auto e = net_entry("dtc-family", "double twisted cubic family (ad-bc, ae-c^2+L^2, be-cd), seeded L = " +
                                         L.to_string(),
                       dtc_family(L));
    e.status = StabilityStatus::stable;
    e.discriminant = QuinticClass::non_reduced;
    e.annotations.push_back("torus-level verdict in the given coordinates");
    e.annotations.push_back("L inside span(a,b,c) makes the net rho6-unstable");
    c.push_back(std::move(e));
  }
  {
    auto e = net_entry("cubic-scroll", "the cubic scroll (ad-bc, ae-c^2, be-cd), L = 0 in the dtc family",
                       "ad-bc, ae-c^2, be-cd");
    e.status = StabilityStatus::unstable;
    e.worst_mu = -2;
    e.certificate_type = 3;
    e.discriminant = QuinticClass::identically_zero;
    e.annotations.push_back("central fiber of the trigonal deformation");
    c.push_back(std::move(e));
  }
  {
    const auto L1 = seeded_linear_form(2), L2 = seeded_linear_form(3);
    auto e = net_entry("double-conic-family",
                       "double conic family (ad-bc, ae-c^2+bL1+dL2, be-cd), seeded L1 = " + L1.to_string() +
                           ", L2 = " + L2.to_string(),
                       double_conic_family(L1, L2));
    e.status = StabilityStatus::stable;
    e.discriminant = QuinticClass::non_reduced;
    e.annotations.push_back("torus-level verdict in the given coordinates");
    e.annotations.push_back("L1 = d, L2 = 0 specializes to triple-conic");
    c.push_back(std::move(e));
  }
  {
    auto e = net_entry("smooth-scroll", "(ad-bc, ae-bd, ce-d^2)", "ad-bc, ae-bd, ce-d^2");
    e.status = StabilityStatus::unstable;
    e.worst_mu = -2;
    e.certificate_type = 3;
    e.discriminant = QuinticClass::identically_zero;
    c.push_back(std::move(e));
  }
  {
    const auto eta = seeded_nonzero(4);
    auto e = net_entry("trigonal-limit",
                       "(ad-bc, ae-c^2+bd+eta d^2, be-cd) with seeded eta = " + to_string(eta),
                       trigonal_limit_net(eta));
    e.status = StabilityStatus::strictly_semistable;
    e.worst_mu = 0;
    e.discriminant = QuinticClass::non_reduced;
    e.limit = ExpectedLimit{balanced, LimitDirection::to_infinity, "triple-conic"};
    c.push_back(std::move(e));
  }
  {
    const auto R1 = seeded_quadric(5), R2 = seeded_quadric(6), R3 = seeded_quadric(7);
    auto e = net_entry("trigonal-deformation", "(be-cd+R1, ae-c^2+R2, ad-bc+R3) with seeded quadrics R1, R2, R3",
                       trigonal_deformation(R1, R2, R3));
    e.status = StabilityStatus::stable;
    e.discriminant = QuinticClass::reduced;
    e.annotations.push_back("smooth non-trigonal genus 5 curve for general R");
    c.push_back(std::move(e));
  }

  // Generic members of the twelve unstable strata.
  c.push_back(unstable_entry("unstable-double-hyperplane", "a net containing a double hyperplane",
                             "ab+c^2-de+2bd, ac-b^2+ce-d^2+ae, e^2", 1, -4, QuinticClass::reduced));
  c.push_back(unstable_entry("unstable-double-conic-two-conics",
                             "a pencil through a plane with a member singular along it",
                             "ab+c^2+ad-e^2+bc, ad+2be-ce+bd, d^2-de+3e^2", 2, -3, QuinticClass::reduced));
  c.push_back(unstable_entry("unstable-multiple-line", "the net contains a line and a member singular along it",
                             "ac+bd-be+ce, ad+bc+ae-d^2, c^2+2de-e^2+cd", 3, -2, QuinticClass::reduced));
  c.push_back(unstable_entry("unstable-non-planar-point", "a base point where a pencil is singular",
                             "ab+ac-ad+ae+b^2-cd, b^2+c^2-d^2+be, bc+de-e^2+2bd", 4, -1,
                             QuinticClass::non_reduced));
  c.push_back(unstable_entry("unstable-degenerate-double-conic", "(Q1, d^2+eL, eM)",
                             "ab+c^2-ae+bd, d^2+ae+be, ae+ce", 5, -2, QuinticClass::non_reduced));
  c.push_back(unstable_entry("unstable-double-line-elliptic", "(Q1 in (c,d,e), ae+c^2, be+d^2)",
                             "ac+bd+ce, ae+c^2, be+d^2", 6, -1, QuinticClass::non_reduced));
  c.push_back(unstable_entry("unstable-a5-elliptic-quartics",
                             "two elliptic quartics meeting in an A5 singularity and a node",
                             "ac+b^2+c^2+2ad-be+3cd+ce-de+2e^2, ad+bc+c^2-2cd+3ce+d^2-e^2, de", 7, -1,
                             QuinticClass::reduced));
  c.push_back(unstable_entry("unstable-planar-quadruple-point", "a planar 4-fold point whose two branches are lines",
                             "ad+b^2-3bc+2c^2+bd-ce+2de+e^2, ae+bd, ce+d^2", 8, -3, QuinticClass::reduced));
  c.push_back(unstable_entry("unstable-tangent-double-line",
                             "a double line tangent to the residual genus 2 curve",
                             "ad+c^2+cd-e^2, ae+bd+ce-de, be+cd+2e^2", 9, -3, QuinticClass::non_reduced));
  c.push_back(unstable_entry("unstable-d6-tangent-conics",
                             "two tangent conics and an elliptic quartic meeting in a D6 point and two nodes",
                             "ac+b^2+c^2-cd+de, ae+c^2+2cd-d^2, be", 10, -1, QuinticClass::reduced));
  c.push_back(unstable_entry("unstable-hyperelliptic-d5",
                             "a D5 point whose branches are exchanged by the hyperelliptic involution",
                             "ad-b^2-c^2+2cd-3de+e^2, ae-bc-2c^2+cd+ce-d^2, ce-d^2", 11, -1,
                             QuinticClass::reduced));
  c.push_back(unstable_entry("unstable-weierstrass-a7",
                             "a conic meeting the genus 2 component in an A7 point at a Weierstrass point",
                             "ac+b^2+2ad-ae+c^2-cd+3ce-2d^2+de+e^2, ae+cd, ce+d^2", 12, -2,
                             QuinticClass::reduced));

  // Pencils containing a common plane, and the Veronese pencil.
  {
    auto e = pencil_entry("plane-plus-scroll", "(ad-bc, be-cd), a plane together with a cubic scroll",
                          parse_pencil("ad-bc, be-cd"));
    e.wholly_singular = true;
    e.vertex_locus = {"b", "d", "ae-c^2"};
    e.annotations.push_back("every member contains the plane b = d = 0 and is singular");
    c.push_back(std::move(e));
  }
  {
    const auto mu = seeded_nonzero(8);
    auto e = pencil_entry("rank-degenerate-pencil", "(ad-mu b^2, be-cd) with seeded mu = " + to_string(mu),
                          rank_degenerate_pencil(mu));
    e.wholly_singular = true;
    e.vertex_locus = {"b", "d", "e"};
    c.push_back(std::move(e));
  }
  {
    auto e = pencil_entry("rank-degenerate-pencil-mu0", "(ad, be-cd), the mu = 0 specialization",
                          rank_degenerate_pencil(0));
    e.wholly_singular = true;
    e.vertex_locus = {"b", "d", "e"};
    c.push_back(std::move(e));
  }
  {
    auto e = pencil_entry("veronese-pencil", "(ac-b^2, ce-d^2), cutting out a non-linearly-normal Veronese quartic",
                          parse_pencil("ac-b^2, ce-d^2"));
    e.wholly_singular = true;
    e.annotations.push_back("Segre symbol undefined");
    c.push_back(std::move(e));
  }
  return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline std::vector<std::string> catalog_names(const std::vector<CatalogEntry>& entries = catalog()) {
  std::vector<std::string> names;
  for (const auto& e : entries) names.push_back(e.name);
  return names;
}

inline const CatalogEntry& catalog_get(const std::string& name, const std::vector<CatalogEntry>& entries = catalog()) {
  for (const auto& e : entries)
    if (e.name == name) return e;
  std::string known;
  for (const auto& n : catalog_names(entries)) known += (known.empty() ? "" : ", ") + n;
  throw InvalidArgument("unknown catalog entry '" + name + "'; available: " + known);
}

// ---------------------------------------------------------------------------
// Verification.

struct CheckResult {
  std::string check;
  bool passed = false;
  std::string detail;
};

struct EntryReport {
  std::string name;
  bool passed = true;
  std::vector<CheckResult> checks;
};

struct CatalogReport {
  std::vector<EntryReport> entries;

  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const EntryReport& e) { return !e.passed; }));
  }
};

namespace detail {

inline std::string describe(const StabilityVerdict& v) {
  std::string s = to_string(v.status) + ", worst_mu " + std::to_string(v.worst_mu);
  if (v.certificate_type) s += ", type " + std::to_string(*v.certificate_type);
  return s;
}

inline void verify_net(const CatalogEntry& e, const std::vector<CatalogEntry>& all, EntryReport& r) {
  auto add = [&](std::string check, bool ok, std::string detail) {
    r.checks.push_back({std::move(check), ok, std::move(detail)});
  };
  const Net n = e.net();
  if (e.status || e.worst_mu || e.certificate_type) {
    const auto v = twelve_type_check(n);
    bool ok = (!e.status || v.status == *e.status) && (!e.worst_mu || v.worst_mu == *e.worst_mu) &&
              (!e.certificate_type || v.certificate_type == e.certificate_type);
    add("twelve-type", ok, describe(v));
  }
  if (e.status) {
    const auto v = state_polytope_check(n);
    add("polytope", v.status == *e.status, describe(v));
  }
  if (e.stabilizer) {
    const bool ok = stabilizing_subgroup_check(n, *e.stabilizer);
    add("stabilizer", ok, e.stabilizer->to_string() + (ok ? " fixes the net" : " does not fix the net"));
  }
  if (e.discriminant || e.discriminant_form) {
    const auto f = discriminant_net(n);
    if (e.discriminant) {
      const auto cls = classify_quintic(f);
      add("discriminant-class", cls == *e.discriminant, to_string(cls));
    }
    if (e.discriminant_form) {
      const auto expected = parse_polynomial(*e.discriminant_form, net_plane_variables());
      add("discriminant-form", proportional(f, expected), f.to_string());
    }
  }
  if (e.limit) {
    const auto lim = one_param_limit(n, e.limit->subgroup, e.limit->direction);
    bool ok = false;
    std::string detail = lim.to_string();
    try {
      ok = lim == catalog_get(e.limit->target, all).net();
    } catch (const Error& err) {
      detail = err.what();
    }
    add("limit", ok, detail);
  }
}

inline void verify_pencil(const CatalogEntry& e, EntryReport& r) {
  const Pencil p = e.pencil();
  const auto f = discriminant_pencil(p);
  r.checks.push_back({"wholly-singular", f.is_zero() == e.wholly_singular,
                      f.is_zero() ? "discriminant identically zero" : f.to_string()});
  if (e.discriminant_form) {
    const auto expected = parse_polynomial(*e.discriminant_form, pencil_line_variables());
    r.checks.push_back({"discriminant-form", proportional(f, expected), f.to_string()});
  }
  if (!e.vertex_locus.empty()) {
    std::vector<MultiPoly> equations;
    for (const auto& s : e.vertex_locus) equations.push_back(parse_polynomial(s, variable_names()));
    int sampled = 0;
    bool ok = true;
    const std::vector<std::pair<long, long>> params{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, -1}, {1, -3}, {3, 5}};
    for (const auto& [s, t] : params) {
      RationalVector coeffs(kQuadraticMonomials);
      for (int i = 0; i < kQuadraticMonomials; ++i)
        coeffs[i] = s * p[0].coefficients()[i] + t * p[1].coefficients()[i];
      const QuadraticForm member(coeffs);
      if (rank(member) != 4) continue;
      ++sampled;
      const auto v = to_rationals(vertex(member));
      for (const auto& eq : equations) ok = ok && sgn(eq.evaluate(v)) == 0;
    }
    r.checks.push_back({"vertex-locus", ok && sampled > 0,
                        std::to_string(sampled) + " rank-4 members sampled"});
  }
}

}  // namespace detail

inline EntryReport verify_entry(const CatalogEntry& e, const std::vector<CatalogEntry>& all = catalog()) {
  EntryReport r;
  r.name = e.name;
  try {
    if (e.kind == EntryKind::net)
      detail::verify_net(e, all, r);
    else
      detail::verify_pencil(e, r);
  } catch (const Error& err) {
    r.checks.push_back({"exception", false, err.what()});
  }
  for (const auto& c : r.checks) r.passed = r.passed && c.passed;
  return r;
}

/// Runs every entry (one task per entry) and reports in catalog order.
inline CatalogReport catalog_verify_all(const std::vector<CatalogEntry>& entries = catalog()) {
  std::vector<std::future<EntryReport>> tasks;
  for (const auto& e : entries)
    tasks.push_back(std::async(std::launch::async, [&e, &entries] { return verify_entry(e, entries); }));
  CatalogReport report;
  for (auto& t : tasks) report.entries.push_back(t.get());
  return report;
}

}  // namespace quadnet
