// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON forms used in reports: vertex sets as sorted name arrays, matchings
// as sorted lists of sorted pairs, families as arrays of sets, chains as
// arrays of full steps.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lmss/graph.hpp"
#include "lmss/greedoid.hpp"
#include "lmss/matching.hpp"
#include "lmss/stability.hpp"

namespace lmss::json {

using Json = nlohmann::ordered_json;

inline Json set_json(const Graph& g, const VertexSet& s) {
  std::vector<std::string> names;
  for (Vertex v : s) names.push_back(g.name(v));
  std::sort(names.begin(), names.end());
  return names;
}

inline Json edge_json(const Graph& g, Edge e) {
  std::string a = g.name(e.u), b = g.name(e.v);
  if (b < a) std::swap(a, b);
  return Json::array({a, b});
}

inline Json matching_json(const Graph& g, const Matching& m) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (Edge e : m) {
    std::string a = g.name(e.u), b = g.name(e.v);
    if (b < a) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  Json out = Json::array();
  for (auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

inline Json family_json(const Graph& g, const SetFamily& f) {
  Json out = Json::array();
  for (const VertexSet& s : f) out.push_back(set_json(g, s));
  return out;
}

inline Json chain_json(const Graph& g, const Chain& c) {
  Json out = Json::array();
  for (const VertexSet& s : c.steps()) out.push_back(set_json(g, s));
  return out;
}

inline Json verdict_json(const Graph& g, const GreedoidVerdict& v) {
  Json out;
  out["is_greedoid"] = v.is_greedoid;
  if (v.violation) {
    Json viol;
    viol["axiom"] = axiom_name(v.violation->axiom);
    viol["x"] = set_json(g, v.violation->x);
    if (v.violation->y) viol["y"] = set_json(g, *v.violation->y);
    out["violation"] = std::move(viol);
  }
  return out;
}

/// Reads a matching from `[["a","b"], ...]`.
inline Matching matching_from_json(const Graph& g, const Json& j) {
  if (!j.is_array()) throw InputError("matching JSON must be an array of pairs");
  std::vector<Edge> edges;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw InputError("matching JSON must be an array of [u, v] string pairs");
    edges.push_back(g.edge(pair[0].get<std::string>(), pair[1].get<std::string>()));
  }
  return Matching(g, std::move(edges));
}

}  // namespace lmss::json
