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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lmss/errors.hpp"
#include "lmss/graph.hpp"
#include "lmss/matching.hpp"

namespace lmss {

namespace detail {

struct FixtureSpec {
  std::string_view name;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Comments give each vertex's drawing position (x, y in cm). Vertex
// order is the declaration order below.
inline const std::vector<FixtureSpec>& fixture_table() {
  static const std::vector<FixtureSpec> table = {
      // Bottom row a(4.5,0) b(5.5,0) c(6.5,0) d(7.5,0) g(8.5,0); top e(6.5,1) f(7.5,1).
      // Path a..g along the bottom, e-f on top, c-e vertical, f-g diagonal.
      {"fig1", {"a", "b", "c", "d", "e", "f", "g"},
       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "g"}, {"c", "e"}, {"e", "f"}, {"f", "g"}}},
      // Bottom a(4.5,0) b(5.5,0) c(6.5,0) d(7.5,0); top e(5.5,1) f(6.5,1); verticals b-e, c-f.
      {"fig2", {"a", "b", "c", "d", "e", "f"},
       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"b", "e"}, {"c", "f"}, {"e", "f"}}},
      // Bottom a(5,0) b(6,0) d(7,0) f(8,0) g(9,0); top c(6,1) e(8,1).
      // Diagonals a-c and c-d, verticals b-c and f-e.
      {"fig3", {"a", "b", "c", "d", "e", "f", "g"},
       {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}, {"d", "f"}, {"e", "f"}, {"f", "g"}}},
      // G1: bottom u1(3.5,0) u2(4.5,0) u3(5.5,0) u4(6.5,0); top v1(4.5,1) v2(5.5,1).
      // The labelled edge e is u2u3.
      {"fig4a", {"u1", "u2", "u3", "u4", "v1", "v2"},
       {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u1", "v1"}, {"u2", "v1"}, {"u3", "v2"}, {"u4", "v2"}}},
      // G2: bottom w1(9,0) w2(10,0) w3(11,0); top w4(9,1) w5(11,1). The labelled edge e is w3w5.
      {"fig4b", {"w1", "w2", "w3", "w4", "w5"},
       {{"w1", "w2"}, {"w2", "w3"}, {"w1", "w4"}, {"w2", "w4"}, {"w3", "w5"}}},
      // Bottom a(5.5,0) b(6.5,0) f(7.5,0); top d(6.5,1) c(7.5,1) e(8.5,1); verticals b-d, f-c.
      {"fig5", {"a", "b", "c", "d", "e", "f"},
       {{"a", "b"}, {"b", "f"}, {"b", "d"}, {"c", "d"}, {"c", "e"}, {"c", "f"}}},
      // Bottom a(4.5,0) b(5.5,0) e(6.5,0) f(7.5,0); top c(5.5,1) d(6.5,1) g(7.5,1) h(8.5,1).
      // Top path d-g-h, verticals b-c, e-d, f-g.
      {"fig6", {"a", "b", "c", "d", "e", "f", "g", "h"},
       {{"a", "b"}, {"b", "c"}, {"b", "e"}, {"d", "e"}, {"d", "g"}, {"e", "f"}, {"f", "g"}, {"g", "h"}}},
      // C5+e: bottom t(2.5,0) w(3.5,0) v(4.5,0) x(5.5,0); top y(3.5,1) u(4.5,1).
      // 5-cycle w-v-x-u-y-w with pendant t on w.
      {"fig7a", {"t", "u", "v", "w", "x", "y"},
       {{"t", "w"}, {"w", "v"}, {"v", "x"}, {"w", "y"}, {"y", "u"}, {"u", "x"}}},
      // C5+3e: bottom b1..b4 at (8.5..11.5, 0); top t1..t4 at (8.5..11.5, 1).
      // Diagonal b1-t2, vertical b3-t3; 5-cycle b1-b2-b3-t3-t2-b1, pendants t1, t4, b4.
      {"fig7b", {"b1", "b2", "b3", "b4", "t1", "t2", "t3", "t4"},
       {{"b1", "b2"}, {"b2", "b3"}, {"b3", "b4"}, {"b1", "t2"}, {"t1", "t2"}, {"t2", "t3"}, {"t3", "t4"}, {"b3", "t3"}}},
      // G1: bottom c1..c4 at (3..6, 0); top d1(3,1) d2(4,1) d3(5,1).
      // Diagonal c2-d1, top edge d2-d3, verticals c2-d2, c3-d3.
      {"fig8a", {"c1", "c2", "c3", "c4", "d1", "d2", "d3"},
       {{"c1", "c2"}, {"c2", "c3"}, {"c3", "c4"}, {"c2", "d1"}, {"c2", "d2"}, {"c3", "d3"}, {"d2", "d3"}}},
      // G2: bottom e1..e4 at (8..11, 0); top f1..f3 at (9..11, 1).
      // Diagonal e2-f2, vertical e3-f2.
      {"fig8b", {"e1", "e2", "e3", "e4", "f1", "f2", "f3"},
       {{"e1", "e2"}, {"e2", "e3"}, {"e3", "e4"}, {"f1", "f2"}, {"f2", "f3"}, {"e2", "f2"}, {"e3", "f2"}}},
  };
  return table;
}

inline std::vector<std::string> numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

}  // namespace detail

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : detail::fixture_table()) out.emplace_back(f.name);
  return out;
}

/// The graph drawn in the named figure (fig1 ... fig8b).
inline Graph fixture(std::string_view name) {
  for (const auto& f : detail::fixture_table())
    if (f.name == name) return Graph(f.vertices, std::span<const std::pair<std::string, std::string>>(f.edges));
  std::string valid;
  for (const auto& n : fixture_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw InputError("unknown fixture '" + std::string(name) + "'; valid names: " + valid);
}

/// C_n on v1..vn.
inline Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(Edge::make(i, (i + 1) % n));
  return Graph(detail::numbered("v", n), edges);
}

/// P_n on v1..vn.
inline Graph path(std::size_t n) {
  if (n < 1) throw InputError("path: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back(Edge::make(i, i + 1));
  return Graph(detail::numbered("v", n), edges);
}

/// K_n on v1..vn.
inline Graph complete(std::size_t n) {
  if (n < 1) throw InputError("complete: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back(Edge::make(i, j));
  return Graph(detail::numbered("v", n), edges);
}

inline Graph k2() { return complete(2); }

/// How the new K2 = xy is joined to the host: at most one endpoint gets
/// edges, all of them into a single class of the host bipartition.
struct AttachSpec {
  enum class Endpoint { kNone, kX, kY };
  enum class Side { kA, kB };

  Endpoint endpoint = Endpoint::kNone;
  Side target_class = Side::kA;
  VertexSet targets;
  std::string x_name;  // empty: choose a fresh "x<k>"
  std::string y_name;  // empty: choose a fresh "y<k>"
};

struct GrownGraph {
  Graph graph;
  Bipartition bipartition;
};

/// G + K2: disjoint union with a new edge xy plus edges from one endpoint to
/// `targets`. The attached endpoint joins the class opposite the targets,
/// the other endpoint stays pendant, so the unique perfect matching of G
/// extends by xy.
inline GrownGraph extend_with_k2(const Graph& g, const Bipartition& bip, const AttachSpec& spec) {
  g.require_subset(bip.class_a);
  g.require_subset(bip.class_b);
  if (bip.class_a.intersects(bip.class_b) || bip.class_a.size() + bip.class_b.size() != g.order())
    throw InputError("extend_with_k2: classes do not partition the vertex set");
  for (Edge e : g.edges())
    if (bip.class_a.contains(e.u) == bip.class_a.contains(e.v))
      throw InputError("extend_with_k2: edge " + g.format_edge(e) + " does not cross the bipartition");
  const VertexSet& target_class = spec.target_class == AttachSpec::Side::kA ? bip.class_a : bip.class_b;
  if (!spec.targets.is_subset_of(target_class))
    throw InputError("extend_with_k2: targets are not all in the chosen class");
  if (spec.endpoint == AttachSpec::Endpoint::kNone && !spec.targets.empty())
    throw InputError("extend_with_k2: targets given but no endpoint attached");
  if (g.order() <= kExactSearchCap && !has_unique_perfect_matching(g).unique)
    throw PreconditionError("extend_with_k2: host has no unique perfect matching");

  auto fresh = [&](std::string_view prefix, const std::string& wanted, std::string_view avoid) {
    if (!wanted.empty()) {
      if (g.find(wanted)) throw InputError("extend_with_k2: vertex '" + wanted + "' already exists");
      return wanted;
    }
    for (std::size_t k = g.order() / 2 + 1;; ++k) {
      std::string candidate = std::string(prefix) + std::to_string(k);
      if (!g.find(candidate) && candidate != avoid) return candidate;
    }
  };
  const std::string x = fresh("x", spec.x_name, spec.y_name);
  const std::string y = fresh("y", spec.y_name, x);
  if (x == y) throw InputError("extend_with_k2: endpoint names coincide");

  std::vector<std::string> names = g.names();
  const Vertex xi = names.size();
  const Vertex yi = xi + 1;
  names.push_back(x);
  names.push_back(y);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(Edge::make(xi, yi));
  const Vertex attached = spec.endpoint == AttachSpec::Endpoint::kY ? yi : xi;
  for (Vertex t : spec.targets) edges.push_back(Edge::make(attached, t));

  // The attached endpoint sits opposite its targets; with no attachment x joins A.
  bool x_in_a = true;
  if (spec.endpoint != AttachSpec::Endpoint::kNone) {
    bool attached_in_a = spec.target_class == AttachSpec::Side::kB;
    x_in_a = (attached == xi) == attached_in_a;
  }
  Bipartition out = bip;
  out.class_a = out.class_a.with(x_in_a ? xi : yi);
  out.class_b = out.class_b.with(x_in_a ? yi : xi);
  return {Graph(std::move(names), edges), std::move(out)};
}

namespace detail {

// Bit-stable Bernoulli draw from raw 64-bit output (the standard
// distributions are not specified bit-for-bit across library vendors).
inline bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace detail

/// Grows a bipartite graph with a unique perfect matching from K2 = x1y1 by
/// `steps - 1` further K2 extensions. At each step a fair coin picks the
/// host class to attach to (A: y_k is joined, B: x_k is joined) and every
/// vertex of that class becomes a target with probability attach_prob.
/// x_k always lands in class A and y_k in class B. Output depends only on
/// the arguments (std::mt19937_64, raw draws).
inline Graph random_unique_pm_bipartite(std::size_t steps, double attach_prob, std::uint64_t seed) {
  if (steps < 1) throw InputError("random_unique_pm_bipartite: steps must be at least 1");
  if (!(attach_prob >= 0.0 && attach_prob <= 1.0))
    throw InputError("random_unique_pm_bipartite: attach_prob must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::string> names{"x1", "y1"};
  std::vector<Edge> edges{Edge{0, 1}};
  std::vector<Vertex> class_a{0}, class_b{1};
  for (std::size_t k = 2; k <= steps; ++k) {
    const Vertex x = names.size();
    const Vertex y = x + 1;
    names.push_back("x" + std::to_string(k));
    names.push_back("y" + std::to_string(k));
    edges.push_back(Edge{x, y});
    const bool into_a = (rng() & 1) != 0;
    for (Vertex t : into_a ? class_a : class_b)
      if (detail::coin(rng, attach_prob)) edges.push_back(Edge::make(into_a ? y : x, t));
    class_a.push_back(x);
    class_b.push_back(y);
  }
  return Graph(std::move(names), edges);
}

}  // namespace lmss
