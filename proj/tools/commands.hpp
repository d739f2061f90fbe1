#pragma once

// Command implementations behind the quadnet executable. Each command returns
// a JSON document and an exit code so it can be tested without a process.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "quadnet/quadnet.hpp"

namespace quadnet::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 1;
inline constexpr int invalid_net = 2;
inline constexpr int undefined_object = 3;
inline constexpr int verification_failed = 4;
inline constexpr int usage = 64;
}  // namespace exit_code

/// Bad option value (unknown method, malformed weights, out-of-range type).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input that parses but does not describe a net or pencil.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

struct CommandResult {
  int exit_code = exit_code::ok;
  Json output;
};

// ---------------------------------------------------------------------------
// Input helpers.

namespace detail {

inline bool names_file(const std::string& arg) {
  std::error_code ec;
  return arg.find(',') == std::string::npos && std::filesystem::is_regular_file(arg, ec);
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON in '") + path + "': " + e.what(), e.byte);
  }
}

template <class F>
auto as_input(F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const RankError&) {
    throw;
  } catch (const Error& e) {
    throw InvalidInput(e.what());
  }
}

}  // namespace detail

/// An expression like "ad-bc, ae+bd-c^2, be-cd" or a path to a net file.
inline Net load_net(const std::string& arg) {
  if (detail::names_file(arg)) {
    const Json j = detail::read_json_file(arg);
    return detail::as_input([&] { return net_from_json(j); });
  }
  return parse_net(arg);
}

inline Pencil load_pencil(const std::string& arg) {
  if (detail::names_file(arg)) {
    const Json j = detail::read_json_file(arg);
    return detail::as_input([&] { return pencil_from_json(j); });
  }
  return parse_pencil(arg);
}

inline OneParamSubgroup parse_weights(const std::string& text) {
  std::vector<long long> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw UsageError("bad weight '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad weight '" + item + "'");
    }
  }
  if (w.size() != kVariables) throw UsageError("expected 5 comma-separated weights, got " + std::to_string(w.size()));
  try {
    return OneParamSubgroup(Weights{w[0], w[1], w[2], w[3], w[4]});
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

inline LimitDirection parse_direction(const std::string& s) {
  if (s == "to-zero") return LimitDirection::to_zero;
  if (s == "to-infinity") return LimitDirection::to_infinity;
  throw UsageError("direction must be to-zero or to-infinity, got '" + s + "'");
}

inline std::vector<SampleKind> parse_mix(const std::string& s) {
  std::vector<SampleKind> mix;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      mix.push_back(parse_sample_kind(item));
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }
  if (mix.empty()) throw UsageError("empty sampling mix");
  return mix;
}

// ---------------------------------------------------------------------------
// Commands.

inline Json analyze(const std::string& net, const std::string& method = "twelve-type",
                    const std::string& permutations = "all") {
  PermutationMode mode;
  if (permutations == "all")
    mode = PermutationMode::all;
  else if (permutations == "identity")
    mode = PermutationMode::identity;
  else
    throw UsageError("permutations must be all or identity, got '" + permutations + "'");
  if (method != "twelve-type" && method != "polytope" && method != "both")
    throw UsageError("method must be twelve-type, polytope or both, got '" + method + "'");

  const Net n = load_net(net);
  if (method == "twelve-type") return to_json(twelve_type_check(n, mode));
  if (method == "polytope") return to_json(state_polytope_check(n));
  const auto a = twelve_type_check(n, mode);
  const auto b = state_polytope_check(n);
  Json out;
  out["twelve_type"] = to_json(a);
  out["polytope"] = to_json(b);
  out["agreement"] = a.semistable() == b.semistable();
  out["same_status"] = a.status == b.status;
  return out;
}

inline Json discriminant(const std::string& net) {
  const Net n = load_net(net);
  const auto f = discriminant_net(n);
  Json out;
  out["variables"] = net_plane_variables();
  out["polynomial"] = f.to_string();
  out["coefficients"] = coefficients_json(f, 5);
  out["class"] = to_string(classify_quintic(f));
  return out;
}

inline Json segre(const std::string& pencil) {
  const Pencil p = load_pencil(pencil);
  Json out = to_json(segre_symbol(p));
  out["discriminant"] = discriminant_pencil(p).to_string();
  return out;
}

inline Json limit(const std::string& net, const std::string& ops, const std::string& direction) {
  const auto rho = parse_weights(ops);
  const auto dir = parse_direction(direction);
  const Net lim = one_param_limit(load_net(net), rho, dir);
  Json out = to_json(lim);
  out["expression"] = lim.to_string();
  out["subgroup"] = to_json(rho);
  out["direction"] = direction;
  return out;
}

inline Json flags(const std::string& net, bool scan_permutations) {
  const Net n = load_net(net);
  if (!scan_permutations) return to_json(flag_predicates(n));
  Json list = Json::array();
  for (const auto& r : scan_permutation_flags(n)) {
    Json j = to_json(r.report);
    j["permutation"] = r.permutation;
    list.push_back(j);
  }
  return Json{{"flags", list}};
}

inline Json triples(int type, bool refine, std::size_t seeds) {
  if (type < 1 || type > 12) throw UsageError("type must be in 1..12");
  const auto& rho = twelve_type(type);
  const auto candidates = enumerate_candidate_triples(rho);
  Json out;
  out["type"] = type;
  out["subgroup"] = to_json(rho);
  out["candidates"] = candidates;
  if (refine) {
    if (type < 5) throw UsageError("--refine applies to types 5..12");
    if (seeds == 0) throw UsageError("--seeds must be positive");
    const auto r = refine_triples_by_cross_elimination(type, candidates, default_seeds(seeds));
    out["refined"] = r.triples;
    out["probabilistic"] = r.probabilistic;
    out["seeds"] = seeds;
  }
  return out;
}

inline CommandResult catalog_command(bool verify, const std::string& name) {
  if (verify) {
    if (!name.empty()) {
      const auto r = verify_entry(catalog_get(name));
      CatalogReport report;
      report.entries.push_back(r);
      return {r.passed ? exit_code::ok : exit_code::verification_failed, to_json(report)};
    }
    const auto report = catalog_verify_all();
    return {report.passed() ? exit_code::ok : exit_code::verification_failed, to_json(report)};
  }
  if (!name.empty()) return {exit_code::ok, to_json(catalog_get(name))};
  return {exit_code::ok, catalog_to_json()};
}

inline Json divisor_check() {
  Json out;
  Json families = Json::array();
  for (const auto& f : contraction_test_families())
    families.push_back(Json{{"name", f.name}, {"intersections", f.intersections}});
  out["families"] = families;
  const auto d = solve_contracted_class(contraction_test_families());
  out["contracted_class"] = to_json(d);
  out["contracted_class_text"] = signed_class(d).to_string();
  out["log_canonical"] = to_json(check_log_canonical_identities());
  out["passed"] = out["log_canonical"]["passed"].get<bool>();
  return out;
}

inline Json fuzz(std::size_t count, std::uint64_t seed, const std::string& mix, unsigned threads = 0) {
  Json out = to_json(fuzz_criteria(count, seed, parse_mix(mix), threads));
  out["seed"] = seed;
  out["mix"] = mix;
  return out;
}

/// Runs `body` and maps library exceptions to exit codes and an error document.
template <class F>
CommandResult run(F&& body) {
  auto failure = [](int code, const std::string& kind, const std::string& message) {
    return CommandResult{code, Json{{"error", kind}, {"message", message}}};
  };
  try {
    if constexpr (std::is_same_v<decltype(body()), CommandResult>)
      return body();
    else
      return CommandResult{exit_code::ok, body()};
  } catch (const ParseError& e) {
    auto r = failure(exit_code::parse_error, "parse", e.what());
    r.output["position"] = e.position();
    return r;
  } catch (const RankError& e) {
    auto r = failure(exit_code::invalid_net, "invalid-net", e.what());
    r.output["rank"] = e.rank();
    return r;
  } catch (const InvalidInput& e) {
    return failure(exit_code::invalid_net, "invalid-net", e.what());
  } catch (const UndefinedObject& e) {
    return failure(exit_code::undefined_object, "undefined", e.what());
  } catch (const UsageError& e) {
    return failure(exit_code::usage, "usage", e.what());
  } catch (const InvalidArgument& e) {
    return failure(exit_code::usage, "usage", e.what());
  }
}

// ---------------------------------------------------------------------------
// Human-readable rendering for --pretty.

namespace detail {

inline std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline bool flat_array(const Json& j) {
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !std::all_of(x.begin(), x.end(), [](const Json& y) {
                            return y.is_primitive();
                          })))
      return false;
  return true;
}

inline void render(const Json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || (v.is_array() && flat_array(v))) {
        os << pad << k << ": " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
      } else {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || (v.is_array() && flat_array(v))) {
        os << pad << "- " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
      } else {
        os << pad << "-\n";
        render(v, indent + 2, os);
      }
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

}  // namespace detail

inline std::string render_pretty(const Json& j) {
  std::ostringstream os;
  detail::render(j, 0, os);
  return os.str();
}

}  // namespace quadnet::cli
