#pragma once

#include <string>

#include <json.hpp>

#include "pfactor/audit.hpp"
#include "pfactor/extremal.hpp"
#include "pfactor/factors.hpp"
#include "pfactor/graph.hpp"

// JSON views of the result types. Certificates are arrays of vertex arrays.

namespace pfactor {

using json = nlohmann::ordered_json;

inline json to_json(const PathFactor& f) {
  json out = json::array();
  for (const auto& p : f.paths) out.push_back(p);
  return out;
}

inline PathFactor path_factor_from_json(const json& j) {
  PathFactor f;
  for (const auto& p : j) f.paths.push_back(p.get<std::vector<Vertex>>());
  return f;
}

inline json to_json(const WitnessReport& w) {
  return {{"set", w.set.members()}, {"s", w.s}, {"isolated", w.isolated}};
}

inline json to_json(const Thresholds& t) {
  return {{"n", t.n},
          {"delta", t.delta},
          {"q", t.q},
          {"p", t.p},
          {"m", t.size_threshold},
          {"size_threshold", t.size_threshold},
          {"rho_threshold", t.rho_threshold},
          {"n_min_size", t.n_min_size},
          {"n_min_spectral", t.n_min_spectral},
          {"size_condition_in_range", t.size_condition_in_range},
          {"spectral_condition_in_range", t.spectral_condition_in_range}};
}

namespace audit {

inline json to_json(const Entry& e) {
  json params = json::object();
  for (const auto& [k, v] : e.params) params[k] = v;
  json out{{"claim", e.claim}, {"params", params}, {"status", status_name(e.status)}, {"detail", e.detail},
           {"checked", e.checked}};
  if (!e.printed.empty()) out["printed"] = e.printed;
  if (!e.resolved.empty()) out["resolved"] = e.resolved;
  if (e.holds_from_n) out["holds_from_n"] = *e.holds_from_n;
  if (e.margin) out["margin"] = *e.margin;
  if (e.certificate) out["certificate"] = *e.certificate;
  return out;
}

}  // namespace audit

}  // namespace pfactor
