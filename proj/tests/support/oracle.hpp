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

// Brute-force oracles for tests. They only use the Graph accessors and plain
// subset enumeration, never the library's search code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "lmss/graph.hpp"

namespace oracle {

using lmss::Edge;
using lmss::Graph;
using lmss::Vertex;
using Subset = std::uint32_t;

inline std::vector<Vertex> members(Subset s) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 32; ++v)
    if (s >> v & 1) out.push_back(v);
  return out;
}

inline Subset subset_of(const lmss::VertexSet& s) {
  Subset out = 0;
  for (Vertex v : s) out |= Subset{1} << v;
  return out;
}

inline bool stable(const Graph& g, Subset s) {
  for (Edge e : g.edges())
    if ((s >> e.u & 1) && (s >> e.v & 1)) return false;
  return true;
}

inline Subset closed_nbhd(const Graph& g, Subset s) {
  Subset out = s;
  for (Edge e : g.edges()) {
    if (s >> e.u & 1) out |= Subset{1} << e.v;
    if (s >> e.v & 1) out |= Subset{1} << e.u;
  }
  return out;
}

/// Largest stable subset of `within`, by scanning every subset.
inline int alpha_within(const Graph& g, Subset within) {
  int best = 0;
  for (Subset s = within;; s = (s - 1) & within) {
    if (std::popcount(s) > best && stable(g, s)) best = std::popcount(s);
    if (s == 0) break;
  }
  return best;
}

inline int alpha(const Graph& g) { return alpha_within(g, (Subset{1} << g.order()) - 1); }

/// Every matching (including the empty one) as sorted edge lists.
inline std::vector<std::vector<Edge>> all_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<Edge> cur;
  auto rec = [&](auto& self, std::size_t i, Subset used) -> void {
    if (i == edges.size()) {
      out.push_back(cur);
      return;
    }
    self(self, i + 1, used);
    Edge e = edges[i];
    Subset mask = (Subset{1} << e.u) | (Subset{1} << e.v);
    if (!(used & mask)) {
      cur.push_back(e);
      self(self, i + 1, used | mask);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline int mu(const Graph& g) {
  std::size_t best = 0;
  for (const auto& m : all_matchings(g)) best = std::max(best, m.size());
  return static_cast<int>(best);
}

/// Number of perfect matchings of G[within].
inline long perfect_matchings_within(const Graph& g, Subset within) {
  if (within == 0) return 1;
  Vertex v = static_cast<Vertex>(std::countr_zero(within));
  long total = 0;
  for (Vertex w = v + 1; w < g.order(); ++w)
    if ((within >> w & 1) && g.adjacent(v, w))
      total += perfect_matchings_within(g, within & ~(Subset{1} << v) & ~(Subset{1} << w));
  return total;
}

inline Subset saturated(const std::vector<Edge>& m) {
  Subset out = 0;
  for (Edge e : m) out |= (Subset{1} << e.u) | (Subset{1} << e.v);
  return out;
}

/// UR by definition: G[V(M)] has exactly one perfect matching.
inline bool uniquely_restricted(const Graph& g, const std::vector<Edge>& m) {
  return perfect_matchings_within(g, saturated(m)) == 1;
}

inline bool two_colorable(const Graph& g) {
  for (Subset c = 0; c < (Subset{1} << g.order()); ++c) {
    bool ok = true;
    for (Edge e : g.edges())
      if ((c >> e.u & 1) == (c >> e.v & 1)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

inline bool psi_member(const Graph& g, const lmss::VertexSet& vs) {
  const Subset s = subset_of(vs);
  return stable(g, s) && alpha_within(g, closed_nbhd(g, s)) == std::popcount(s);
}

/// Psi(G) by definition over all subsets, sorted by (size, lexicographic).
inline std::vector<std::vector<Vertex>> psi(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (Subset s = 0; s < (Subset{1} << g.order()); ++s)
    if (stable(g, s) && alpha_within(g, closed_nbhd(g, s)) == std::popcount(s)) out.push_back(members(s));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline std::vector<std::vector<Vertex>> omega(const Graph& g) {
  const int a = alpha(g);
  std::vector<std::vector<Vertex>> out;
  for (Subset s = 0; s < (Subset{1} << g.order()); ++s)
    if (std::popcount(s) == a && stable(g, s)) out.push_back(members(s));
  std::sort(out.begin(), out.end());
  return out;
}

/// Greedoid axioms by a plain double loop over a family of subsets.
inline bool greedoid(const std::vector<Subset>& family) {
  std::set<Subset> f(family.begin(), family.end());
  if (!f.contains(0)) return false;
  for (Subset x : f) {
    if (x == 0) continue;
    bool ok = false;
    for (Subset r = x; r; r &= r - 1)
      if (f.contains(x & ~(r & -r))) ok = true;
    if (!ok) return false;
  }
  for (Subset x : f)
    for (Subset y : f) {
      if (std::popcount(x) != std::popcount(y) + 1) continue;
      bool ok = false;
      for (Subset d = x & ~y; d; d &= d - 1)
        if (f.contains(y | (d & -d))) ok = true;
      if (!ok) return false;
    }
  return true;
}

/// The sequence closes into an even cycle of host edges whose edges
/// alternate between matched and non-matched, with distinct vertices.
inline bool alternating_cycle(const Graph& g, const std::vector<Edge>& m, const std::vector<Vertex>& cyc) {
  if (cyc.size() < 4 || cyc.size() % 2) return false;
  if (std::set<Vertex>(cyc.begin(), cyc.end()).size() != cyc.size()) return false;
  auto matched = [&](Vertex a, Vertex b) {
    return std::find(m.begin(), m.end(), Edge::make(a, b)) != m.end();
  };
  bool first = matched(cyc[0], cyc[1]);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    Vertex a = cyc[i], b = cyc[(i + 1) % cyc.size()];
    if (!g.adjacent(a, b)) return false;
    if (matched(a, b) != ((i % 2 == 0) == first)) return false;
  }
  return true;
}

}  // namespace oracle
