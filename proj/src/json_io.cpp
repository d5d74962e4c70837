#include "disperse/json_io.hpp"

#include "disperse/instance.hpp"

#include <json.hpp>

#include <utility>

namespace disperse {
namespace {

using json = nlohmann::ordered_json;

json certificate_json(const Certificate& cert) {
  json c;
  std::visit(
      [&c](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UnboundedCert>) {
          c["type"] = "unbounded";
        } else if constexpr (std::is_same_v<T, LinePairCert>) {
          c["type"] = "line_pair";
          c["i_star"] = v.i_star;
          c["j_star"] = v.j_star;
          c["value"] = v.value.fraction_str();
        } else if constexpr (std::is_same_v<T, CycleWindowCert>) {
          c["type"] = "cycle_window";
          c["i"] = v.i;
          c["j"] = v.j;
          c["m"] = v.m;
          c["value"] = v.value.fraction_str();
        } else if constexpr (std::is_same_v<T, CycleUniformCert>) {
          c["type"] = "cycle_uniform";
          c["value"] = v.value.fraction_str();
        } else {
          c["type"] = "initial_bound";
          c["value"] = v.value.fraction_str();
        }
      },
      cert);
  return c;
}

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ValidationError(std::string("solution JSON: missing rational field '") + key + "'");
  auto r = Rational::from_string(j[key].get<std::string>());
  if (!r) throw ValidationError(std::string("solution JSON: bad rational in '") + key + "'");
  return *std::move(r);
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ValidationError(std::string("solution JSON: missing integer field '") + key + "'");
  return j[key].get<int>();
}

Certificate certificate_from_json(const json& c) {
  if (!c.is_object() || !c.contains("type") || !c["type"].is_string())
    throw ValidationError("solution JSON: certificate must be an object with a 'type'");
  const std::string type = c["type"].get<std::string>();
  if (type == "unbounded") return UnboundedCert{};
  if (type == "line_pair")
    return LinePairCert{int_field(c, "i_star"), int_field(c, "j_star"), rational_field(c, "value")};
  if (type == "cycle_window")
    return CycleWindowCert{int_field(c, "i"), int_field(c, "j"), int_field(c, "m"),
                           rational_field(c, "value")};
  if (type == "cycle_uniform") return CycleUniformCert{rational_field(c, "value")};
  if (type == "initial_bound") return InitialBoundCert{rational_field(c, "value")};
  throw ValidationError("solution JSON: unknown certificate type '" + type + "'");
}

}  // namespace

std::string solution_to_json(const Solution& solution) {
  json j;
  j["kind"] = solution.kind == ProblemKind::line ? "line" : "cycle";
  if (solution.d_min.is_unbounded()) {
    j["d_min"] = "unbounded";
    j["d_min_approx"] = nullptr;
  } else {
    j["d_min"] = solution.d_min.finite().fraction_str();
    j["d_min_approx"] = solution.d_min.finite().approx();
  }
  json pts = json::array();
  for (const Rational& p : solution.points) pts.push_back(p.fraction_str());
  j["points"] = std::move(pts);
  j["certificate"] = certificate_json(solution.certificate);
  j["stats"] = {{"intervals", solution.stats.intervals},
                {"pushes", solution.stats.pushes},
                {"pops", solution.stats.pops},
                {"finalizations", solution.stats.finalizations}};
  return j.dump(2) + "\n";
}

Solution solution_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, 0, std::string("solution JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("solution JSON: top level must be an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("solution JSON: missing 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind != "line" && kind != "cycle")
    throw ValidationError("solution JSON: kind must be 'line' or 'cycle'");

  Solution sol;
  sol.kind = kind == "line" ? ProblemKind::line : ProblemKind::cycle;

  if (!j.contains("d_min")) throw ValidationError("solution JSON: missing 'd_min'");
  if (j["d_min"].is_string() && j["d_min"].get<std::string>() == "unbounded") {
    sol.d_min = ExtendedValue::unbounded();
  } else {
    sol.d_min = rational_field(j, "d_min");
  }

  if (!j.contains("points") || !j["points"].is_array())
    throw ValidationError("solution JSON: missing 'points' array");
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw ValidationError("solution JSON: points must be \"p/q\" strings");
    auto r = Rational::from_string(p.get<std::string>());
    if (!r) throw ValidationError("solution JSON: bad rational in 'points'");
    sol.points.push_back(*std::move(r));
  }

  if (!j.contains("certificate")) throw ValidationError("solution JSON: missing 'certificate'");
  sol.certificate = certificate_from_json(j["certificate"]);

  if (j.contains("stats") && j["stats"].is_object()) {
    const auto& s = j["stats"];
    auto read = [&s](const char* key) -> std::uint64_t {
      return s.contains(key) && s[key].is_number_unsigned() ? s[key].get<std::uint64_t>() : 0;
    };
    sol.stats.intervals = read("intervals");
    sol.stats.pushes = read("pushes");
    sol.stats.pops = read("pops");
    sol.stats.finalizations = read("finalizations");
  }
  return sol;
}

}  // namespace disperse
