#pragma once

// JSON encodings of the reports. Keys are emitted in a fixed order so that
// outputs can be diffed across runs.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "walkex/constructions.hpp"
#include "walkex/formulas.hpp"
#include "walkex/search.hpp"
#include "walkex/verify.hpp"

#ifndef WALKEX_VERSION
#define WALKEX_VERSION "unknown"
#endif

namespace walkex {

using Json = nlohmann::ordered_json;

inline std::string_view version() { return WALKEX_VERSION; }

inline Json to_json(const ExValue& v)
{
  Json j;
  j["n"] = v.n;
  j["k"] = v.k;
  j["loops"] = v.loops;
  j["value"] = v.value ? Json(*v.value) : Json(nullptr);
  j["status"] = to_string(v.status);
  j["regime"] = to_string(v.regime);
  j["s"] = v.s;
  j["t"] = v.t;
  return j;
}

inline Json to_json(const SearchReport& r, const std::vector<std::string>& witness_files)
{
  Json j;
  j["n"] = r.config.n;
  j["k"] = r.config.k;
  j["loops"] = r.config.loops;
  j["enumerate"] = r.config.enumerate;
  j["max_arcs"] = r.max_arcs;
  j["status"] = to_string(r.status);
  j["upper_bound_active"] = r.upper_bound_active;
  j["classes"] = r.witnesses.size();
  j["witness_files"] = witness_files;
  j["nodes_explored"] = r.nodes_explored;
  j["elapsed_s"] = r.elapsed_seconds;
  j["version"] = version();
  return j;
}

inline Json to_json(const VerifyOutcome& o)
{
  Json j;
  j["n"] = o.n;
  j["k"] = o.k;
  j["loops"] = o.loops;
  j["formula_value"] = to_json(o.formula_value);
  const SearchReport& r = o.search_value;
  j["search_value"] = {{"max_arcs", r.max_arcs},
                       {"status", to_string(r.status)},
                       {"upper_bound_active", r.upper_bound_active},
                       {"classes", r.witnesses.size()},
                       {"nodes_explored", r.nodes_explored},
                       {"elapsed_s", r.elapsed_seconds}};
  j["value_match"] = o.value_match;
  Json expected = Json::array();
  for (const auto& d : o.characterization_expected) expected.push_back(describe(d));
  j["characterization_expected"] = expected;
  j["characterization_match"] = o.characterization_match ? Json(*o.characterization_match) : Json(nullptr);
  j["notes"] = o.notes;
  j["version"] = version();
  return j;
}

}  // namespace walkex
