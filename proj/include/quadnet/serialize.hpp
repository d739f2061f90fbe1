#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "quadnet/catalog.hpp"
#include "quadnet/discriminant.hpp"
#include "quadnet/divisor.hpp"
#include "quadnet/error.hpp"
#include "quadnet/flags.hpp"
#include "quadnet/net.hpp"
#include "quadnet/rational.hpp"
#include "quadnet/sampling.hpp"
#include "quadnet/stability.hpp"

namespace quadnet {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.get_str(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw InvalidArgument("expected a rational as a string or an integer, got " + j.dump());
}

inline Json to_json(const QuadraticForm& q) {
  Json row = Json::array();
  for (const auto& c : q.coefficients()) row.push_back(to_json(c));
  return row;
}

/// {"quadrics": [[15 rationals], ...]} in the fixed monomial order.
template <int Dim>
Json to_json(const QuadricSystem<Dim>& n) {
  Json rows = Json::array();
  for (const auto& q : n.basis()) rows.push_back(to_json(q));
  return Json{{"quadrics", rows}};
}

namespace detail {

inline std::vector<QuadraticForm> quadrics_from_json(const Json& j, std::size_t expected) {
  if (!j.is_object() || !j.contains("quadrics") || !j["quadrics"].is_array())
    throw InvalidArgument("net document must be an object with a \"quadrics\" array");
  const auto& rows = j["quadrics"];
  if (rows.size() != expected)
    throw DimensionError("expected " + std::to_string(expected) + " quadrics, got " + std::to_string(rows.size()));
  std::vector<QuadraticForm> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != kQuadraticMonomials)
      throw DimensionError("each quadric needs " + std::to_string(kQuadraticMonomials) + " coefficients");
    RationalVector c;
    for (const auto& x : row) c.push_back(rational_from_json(x));
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace detail

inline Net net_from_json(const Json& j) { return Net(detail::quadrics_from_json(j, 3)); }
inline Pencil pencil_from_json(const Json& j) { return Pencil(detail::quadrics_from_json(j, 2)); }

inline Json to_json(const OneParamSubgroup& rho) { return Json(rho.weights()); }

inline Json to_json(const StabilityVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["worst_mu"] = v.worst_mu;
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  j["certificate_type"] = v.certificate_type ? Json(*v.certificate_type) : Json(nullptr);
  j["method"] = to_string(v.method);
  j["probabilistic"] = v.probabilistic;
  return j;
}

inline Json coefficients_json(const MultiPoly& f, int degree) {
  Json out = Json::array();
  for (const auto& c : form_coefficients(f, degree)) out.push_back(c.get_str());
  return out;
}

inline Json to_json(const SegreSymbol& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries)
    entries.push_back(Json{{"factor", e.factor.to_string()}, {"degree", e.degree}, {"blocks", e.blocks}});
  return Json{{"symbol", s.to_string()}, {"entries", entries}};
}

inline Json to_json(const FlagReport& r) {
  Json j;
  j["c1a"] = r.c1a;
  j["c1b"] = r.c1b;
  j["c2a"] = r.c2a;
  j["c2b"] = r.c2b;
  j["c3a"] = r.c3a;
  j["c3b"] = r.c3b;
  j["c4"] = r.c4;
  j["obs_i"] = r.obs_i;
  j["obs_ii"] = r.obs_ii;
  j["obs_iii"] = r.obs_iii;
  j["obs_iv"] = r.obs_iv;
  const auto t = r.destabilizer_type();
  j["destabilizer_type"] = t ? Json(*t) : Json(nullptr);
  return j;
}

inline Json to_json(const DivisorClass& d) {
  Json j = Json::array();
  for (const auto& c : d.coefficients()) j.push_back(to_json(c));
  return j;
}

inline Json to_json(const WeightTriple& t) { return Json(t); }

inline Json to_json(const FuzzReport& r) {
  Json j;
  j["count"] = r.count;
  j["agreement"] = r.agreement;
  j["disagreement"] = r.disagreement;
  j["unstable"] = r.unstable;
  j["semistable"] = r.semistable;
  j["strict_mismatch"] = r.strict_mismatch;
  Json d = Json::array();
  for (const auto& x : r.disagreements)
    d.push_back(Json{{"index", x.index},
                     {"kind", to_string(x.kind)},
                     {"net", x.net},
                     {"twelve_type", to_string(x.twelve_type)},
                     {"polytope", to_string(x.polytope)}});
  j["disagreements"] = d;
  return j;
}

inline Json to_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["kind"] = to_string(e.kind);
  j["description"] = e.description;
  j["expression"] = e.expression();
  Json rows = Json::array();
  for (const auto& q : e.quadrics) rows.push_back(to_json(q));
  j["quadrics"] = rows;
  Json expected;
  if (e.status) expected["status"] = to_string(*e.status);
  if (e.worst_mu) expected["worst_mu"] = *e.worst_mu;
  if (e.certificate_type) expected["certificate_type"] = *e.certificate_type;
  if (e.stabilizer) expected["stabilizer"] = to_json(*e.stabilizer);
  if (e.discriminant) expected["discriminant"] = to_string(*e.discriminant);
  if (e.discriminant_form) expected["discriminant_form"] = *e.discriminant_form;
  if (e.kind == EntryKind::pencil) expected["wholly_singular"] = e.wholly_singular;
  if (!e.vertex_locus.empty()) expected["vertex_locus"] = e.vertex_locus;
  if (e.limit)
    expected["limit"] = Json{{"subgroup", to_json(e.limit->subgroup)},
                             {"direction", e.limit->direction == LimitDirection::to_zero ? "to-zero" : "to-infinity"},
                             {"target", e.limit->target}};
  j["expected"] = expected.is_null() ? Json::object() : expected;
  j["annotations"] = e.annotations;
  return j;
}

/// The whole catalog as one document; every entry carries its quadrics in
/// the net file format.
inline Json catalog_to_json(const std::vector<CatalogEntry>& entries = catalog()) {
  Json list = Json::array();
  for (const auto& e : entries) list.push_back(to_json(e));
  return Json{{"entries", list}};
}

inline Json to_json(const CatalogReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json checks = Json::array();
    for (const auto& c : e.checks) checks.push_back(Json{{"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
    entries.push_back(Json{{"name", e.name}, {"passed", e.passed}, {"checks", checks}});
  }
  return Json{{"passed", r.passed()}, {"failures", r.failures()}, {"entries", entries}};
}

inline Json to_json(const LogCanonicalReport& r) {
  Json ids = Json::array();
  for (const auto& i : r.identities)
    ids.push_back(Json{{"name", i.name}, {"lhs", to_json(i.lhs)}, {"rhs", to_json(i.rhs)}, {"holds", i.holds}});
  return Json{{"convention", r.convention}, {"identities", ids}, {"passed", r.passed()}};
}

}  // namespace quadnet
