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

// Bitmask helpers for the exponential searches. Only used on graphs with at
// most kExactSearchCap vertices, so a 32-bit mask always suffices.

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "lmss/errors.hpp"
#include "lmss/graph.hpp"

namespace lmss::detail {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }
inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

inline VertexSet from_mask(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return VertexSet(std::move(out));
}

struct BitGraph {
  std::size_t n = 0;
  std::vector<Mask> adj;

  explicit BitGraph(const Graph& g, const char* op) : n(g.order()), adj(g.order(), 0) {
    require_cap(op, g.order());
    for (Edge e : g.edges()) {
      adj[e.u] |= bit(e.v);
      adj[e.v] |= bit(e.u);
    }
  }

  Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (Mask m = s; m; m &= m - 1) out |= adj[lowest(m)];
    return out & ~s;
  }

  bool stable(Mask s) const {
    for (Mask m = s; m; m &= m - 1)
      if (adj[lowest(m)] & s) return false;
    return true;
  }
};

/// Maximum stable set inside `cand`, by branching on a maximum-degree vertex.
class MaxStableSearch {
 public:
  explicit MaxStableSearch(const BitGraph& g) : g_(g) {}

  Mask run(Mask cand) {
    best_ = 0;
    best_size_ = 0;
    recurse(cand, 0);
    return best_;
  }

 private:
  void recurse(Mask cand, Mask chosen) {
    const int have = popcount(chosen);
    if (have + popcount(cand) <= best_size_) return;
    // Isolated candidates are always taken.
    Mask forced = 0;
    for (Mask m = cand; m; m &= m - 1) {
      Vertex v = lowest(m);
      if (!(g_.adj[v] & cand)) forced |= bit(v);
    }
    if (forced) {
      recurse(cand & ~forced, chosen | forced);
      return;
    }
    if (!cand) {
      if (have > best_size_) {
        best_size_ = have;
        best_ = chosen;
      }
      return;
    }
    Vertex pivot = lowest(cand);
    int pivot_deg = -1;
    for (Mask m = cand; m; m &= m - 1) {
      Vertex v = lowest(m);
      int d = popcount(g_.adj[v] & cand);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    recurse(cand & ~bit(pivot) & ~g_.adj[pivot], chosen | bit(pivot));
    recurse(cand & ~bit(pivot), chosen);
  }

  const BitGraph& g_;
  Mask best_ = 0;
  int best_size_ = 0;
};

inline int max_stable_size(const BitGraph& g, Mask cand) {
  return popcount(MaxStableSearch(g).run(cand));
}

/// Exact maximum matching on an arbitrary graph by memoized recursion over
/// vertex subsets: the lowest remaining vertex is either left unmatched or
/// matched to a remaining neighbor.
class GeneralMatchingSearch {
 public:
  explicit GeneralMatchingSearch(const BitGraph& g)
      : g_(g), memo_(std::size_t{1} << g.n, kUnknown) {}

  int size(Mask m) {
    if (!m) return 0;
    auto& slot = memo_[m];
    if (slot != kUnknown) return slot;
    Vertex v = lowest(m);
    Mask rest = m & ~bit(v);
    int best = size(rest);
    for (Mask nb = g_.adj[v] & rest; nb; nb &= nb - 1) {
      Vertex w = lowest(nb);
      best = std::max(best, 1 + size(rest & ~bit(w)));
    }
    slot = static_cast<std::int8_t>(best);
    return best;
  }

  /// One maximum matching of G[m]; the first optimal choice in vertex order
  /// is taken at each step, so the result is deterministic.
  std::vector<std::pair<Vertex, Vertex>> witness(Mask m) {
    std::vector<std::pair<Vertex, Vertex>> out;
    while (m) {
      const int target = size(m);
      Vertex v = lowest(m);
      Mask rest = m & ~bit(v);
      bool matched = false;
      for (Mask nb = g_.adj[v] & rest; nb; nb &= nb - 1) {
        Vertex w = lowest(nb);
        if (1 + size(rest & ~bit(w)) == target) {
          out.emplace_back(v, w);
          m = rest & ~bit(w);
          matched = true;
          break;
        }
      }
      if (!matched) m = rest;
    }
    return out;
  }

  bool has_perfect(Mask m) { return 2 * size(m) == popcount(m); }

 private:
  static constexpr std::int8_t kUnknown = -1;
  const BitGraph& g_;
  std::vector<std::int8_t> memo_;
};

/// Maximum matching size of G[active] for a bipartite graph whose class A
/// is `class_a`, by augmenting paths over masks.
inline int bipartite_matching_size(const BitGraph& g, Mask active, Mask class_a) {
  std::vector<int> mate(g.n, -1);
  int size = 0;
  for (Mask roots = active & class_a; roots; roots &= roots - 1) {
    Vertex root = lowest(roots);
    std::vector<int> parent(g.n, -1);
    std::vector<Vertex> queue{root};
    Mask seen = 0;
    int free_b = -1;
    for (std::size_t qi = 0; qi < queue.size() && free_b < 0; ++qi) {
      Vertex u = queue[qi];
      for (Mask nb = g.adj[u] & active & ~seen; nb; nb &= nb - 1) {
        Vertex b = lowest(nb);
        seen |= bit(b);
        parent[b] = static_cast<int>(u);
        if (mate[b] < 0) {
          free_b = static_cast<int>(b);
          break;
        }
        queue.push_back(static_cast<Vertex>(mate[b]));
      }
    }
    if (free_b < 0) continue;
    ++size;
    for (int b = free_b; b >= 0;) {
      int u = parent[b];
      int prev = mate[u];
      mate[u] = b;
      mate[b] = u;
      b = (u == static_cast<int>(root)) ? -1 : prev;
    }
  }
  return size;
}

}  // namespace lmss::detail
