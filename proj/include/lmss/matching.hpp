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

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lmss/detail/bitmask.hpp"
#include "lmss/errors.hpp"
#include "lmss/graph.hpp"

namespace lmss {

/// Set of pairwise vertex-disjoint edges, kept sorted. Construction through
/// a host graph validates the edges; the value itself does not hold the host.
class Matching {
 public:
  Matching() = default;

  Matching(const Graph& g, std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (Edge& e : edges_) {
      e = Edge::make(e.u, e.v);
      if (!g.has_edge(e)) throw InputError("matching edge is not an edge of the graph");
    }
    std::sort(edges_.begin(), edges_.end());
    std::vector<char> used(g.order(), 0);
    for (Edge e : edges_) {
      if (used[e.u] || used[e.v])
        throw InputError("matching edges share vertex in " + g.format_edge(e));
      used[e.u] = used[e.v] = 1;
    }
  }

  Matching(const Graph& g, std::initializer_list<std::pair<std::string_view, std::string_view>> named)
      : Matching(g, resolve(g, named)) {}

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  bool contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge::make(e.u, e.v));
  }

  /// V(M): the saturated vertices.
  VertexSet saturated() const {
    std::vector<Vertex> vs;
    for (Edge e : edges_) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    return VertexSet(std::move(vs));
  }

  std::optional<Vertex> mate(Vertex v) const {
    for (Edge e : edges_)
      if (e.touches(v)) return e.other(v);
    return std::nullopt;
  }

  /// mates[v] == order for unsaturated v.
  std::vector<Vertex> mate_table(std::size_t order) const {
    std::vector<Vertex> m(order, order);
    for (Edge e : edges_) {
      m.at(e.u) = e.v;
      m.at(e.v) = e.u;
    }
    return m;
  }

  bool is_subset_of(const Matching& other) const {
    return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
  }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.edges_ <=> b.edges_; }

 private:
  static std::vector<Edge> resolve(const Graph& g,
                                   std::initializer_list<std::pair<std::string_view, std::string_view>> named) {
    std::vector<Edge> out;
    for (const auto& [a, b] : named) out.push_back(g.edge(a, b));
    return out;
  }

  std::vector<Edge> edges_;
};

inline std::string format_matching(const Graph& g, const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += g.format_edge(m.edges()[i]);
  }
  return out + "}";
}

namespace detail {

// Augmenting-path search from each free class-A vertex in index order; BFS
// keeps it iterative and the neighbor order makes it deterministic.
inline Matching bipartite_maximum_matching(const Graph& g, const Bipartition& bip) {
  const std::size_t n = g.order();
  std::vector<Vertex> mate(n, n);
  std::vector<Vertex> parent(n, n);
  std::vector<std::size_t> seen(n, 0);
  std::size_t stamp = 0;
  for (Vertex root : bip.class_a) {
    if (g.degree(root) == 0) continue;
    ++stamp;
    std::vector<Vertex> queue{root};
    Vertex free_b = n;
    for (std::size_t qi = 0; qi < queue.size() && free_b == n; ++qi) {
      Vertex u = queue[qi];
      for (Vertex b : g.neighbors(u)) {
        if (seen[b] == stamp) continue;
        seen[b] = stamp;
        parent[b] = u;
        if (mate[b] == n) {
          free_b = b;
          break;
        }
        queue.push_back(mate[b]);
      }
    }
    for (Vertex b = free_b; b != n;) {
      Vertex u = parent[b];
      Vertex prev = mate[u];
      mate[u] = b;
      mate[b] = u;
      b = (u == root) ? n : prev;
    }
  }
  std::vector<Edge> edges;
  for (Vertex a : bip.class_a)
    if (mate[a] != n) edges.push_back(Edge::make(a, mate[a]));
  return Matching(g, std::move(edges));
}

template <class Visit>
bool for_each_matching_rec(const BitGraph& bg, Mask remaining, int need, std::vector<Edge>& cur,
                           Visit& visit) {
  if (need == 0) return visit(cur);
  if (popcount(remaining) < 2 * need) return true;
  Vertex v = lowest(remaining);
  Mask rest = remaining & ~bit(v);
  for (Mask nb = bg.adj[v] & rest; nb; nb &= nb - 1) {
    Vertex w = lowest(nb);
    cur.push_back(Edge::make(v, w));
    if (!for_each_matching_rec(bg, rest & ~bit(w), need - 1, cur, visit)) return false;
    cur.pop_back();
  }
  return for_each_matching_rec(bg, rest, need, cur, visit);
}

}  // namespace detail

/// Calls visit(edges) for every matching with exactly k edges until visit
/// returns false. Exponential; capped.
template <class Visit>
void for_each_matching_of_size(const Graph& g, std::size_t k, Visit visit) {
  detail::BitGraph bg(g, "matching enumeration");
  std::vector<Edge> cur;
  auto adapter = [&](const std::vector<Edge>& edges) { return visit(std::span<const Edge>(edges)); };
  detail::for_each_matching_rec(bg, bg.all(), static_cast<int>(k), cur, adapter);
}

/// One maximum matching; |result| = mu(G). Bipartite graphs use augmenting
/// paths (uncapped); other graphs use exact search (capped).
inline Matching maximum_matching(const Graph& g) {
  if (g.size() == 0) return Matching{};
  auto bip = bipartition(g);
  if (auto* b = std::get_if<Bipartition>(&bip)) return detail::bipartite_maximum_matching(g, *b);
  detail::BitGraph bg(g, "maximum_matching (non-bipartite)");
  detail::GeneralMatchingSearch search(bg);
  std::vector<Edge> edges;
  for (auto [u, v] : search.witness(bg.all())) edges.push_back(Edge::make(u, v));
  return Matching(g, std::move(edges));
}

inline std::size_t matching_number(const Graph& g) { return maximum_matching(g).size(); }

/// All maximum matchings, each once, in lexicographic order of their sorted
/// edge lists.
inline std::vector<Matching> enumerate_maximum_matchings(const Graph& g) {
  require_cap("enumerate_maximum_matchings", g.order());
  const std::size_t mu = matching_number(g);
  std::vector<Matching> out;
  for_each_matching_of_size(g, mu, [&](std::span<const Edge> edges) {
    out.emplace_back(g, std::vector<Edge>(edges.begin(), edges.end()));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

struct URVerdict {
  bool is_ur = true;
  /// Even cycle v0 v1 ... v(2k-1) (closing back to v0) whose edges alternate
  /// between non-matched and matched, starting with v0v1 non-matched.
  std::vector<Vertex> witness;
};

namespace detail {

// Bipartite case: orient every matched edge from class A to class B. An
// alternating cycle is exactly a directed cycle in the digraph whose arcs go
// from matched edge (a,b) to matched edge (a',b') when b a' is a non-matched
// edge of the graph.
inline URVerdict ur_bipartite(const Graph& g, const Matching& m, const Bipartition& bip) {
  const std::size_t n = g.order();
  const std::size_t k = m.size();
  std::vector<Vertex> a_end(k), b_end(k);
  std::vector<std::size_t> edge_of(n, k);
  for (std::size_t i = 0; i < k; ++i) {
    Edge e = m.edges()[i];
    bool u_in_a = bip.class_a.contains(e.u);
    a_end[i] = u_in_a ? e.u : e.v;
    b_end[i] = u_in_a ? e.v : e.u;
    edge_of[e.u] = edge_of[e.v] = i;
  }
  auto successors = [&](std::size_t i) {
    std::vector<std::size_t> out;
    for (Vertex w : g.neighbors(b_end[i]))
      if (edge_of[w] != k && edge_of[w] != i) out.push_back(edge_of[w]);
    return out;
  };

  enum : char { kWhite, kGray, kBlack };
  std::vector<char> state(k, kWhite);
  std::vector<std::size_t> parent(k, k);
  for (std::size_t root = 0; root < k; ++root) {
    if (state[root] != kWhite) continue;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
    state[root] = kGray;
    stack.emplace_back(root, successors(root));
    while (!stack.empty()) {
      auto& [node, succ] = stack.back();
      if (succ.empty()) {
        state[node] = kBlack;
        stack.pop_back();
        continue;
      }
      std::size_t next = succ.front();
      succ.erase(succ.begin());
      if (state[next] == kWhite) {
        state[next] = kGray;
        parent[next] = node;
        stack.emplace_back(next, successors(next));
      } else if (state[next] == kGray) {
        std::vector<std::size_t> cyc{node};
        for (std::size_t c = node; c != next;) cyc.push_back(c = parent[c]);
        std::reverse(cyc.begin(), cyc.end());  // next ... node
        URVerdict v{false, {}};
        // Start at b of the last matched edge so the first edge is non-matched.
        for (std::size_t i = 0; i < cyc.size(); ++i) {
          std::size_t prev = cyc[(i + cyc.size() - 1) % cyc.size()];
          v.witness.push_back(b_end[prev]);
          v.witness.push_back(a_end[cyc[i]]);
        }
        return v;
      }
    }
  }
  return {};
}

// General case: M is unique in H = G[V(M)] iff no perfect matching of H
// avoids some matched edge. The symmetric difference with such a matching
// contains the alternating cycle.
inline URVerdict ur_general(const Graph& g, const Matching& m) {
  auto emb = induced_embedding(g, m.saturated());
  const Graph& h = emb.graph;
  BitGraph bg(h, "is_uniquely_restricted (non-bipartite)");
  GeneralMatchingSearch search(bg);
  std::vector<Vertex> local(g.order(), g.order());
  for (std::size_t i = 0; i < emb.to_host.size(); ++i) local[emb.to_host[i]] = i;
  std::vector<Vertex> mate(h.order(), h.order());
  for (Edge e : m) {
    mate[local[e.u]] = local[e.v];
    mate[local[e.v]] = local[e.u];
  }
  const Mask all = bg.all();
  for (Vertex x = 0; x < h.order(); ++x) {
    for (Vertex w : h.neighbors(x)) {
      if (w == mate[x]) continue;
      Mask rest = all & ~bit(x) & ~bit(w);
      if (!search.has_perfect(rest)) continue;
      std::vector<Vertex> other(h.order(), h.order());
      other[x] = w;
      other[w] = x;
      for (auto [a, b] : search.witness(rest)) {
        other[a] = b;
        other[b] = a;
      }
      URVerdict v{false, {}};
      Vertex cur = x;
      do {
        v.witness.push_back(emb.to_host[cur]);
        Vertex nxt = other[cur];
        v.witness.push_back(emb.to_host[nxt]);
        cur = mate[nxt];
      } while (cur != x);
      return v;
    }
  }
  return {};
}

}  // namespace detail

/// M is uniquely restricted iff it is the only perfect matching of G[V(M)],
/// equivalently iff no even cycle alternates between M and E - M.
inline URVerdict is_uniquely_restricted(const Graph& g, const Matching& m) {
  for (Edge e : m)
    if (!g.has_edge(e)) throw InputError("matching edge is not an edge of the graph");
  if (m.empty()) return {};
  auto bip = bipartition(g);
  if (auto* b = std::get_if<Bipartition>(&bip)) return detail::ur_bipartite(g, m, *b);
  return detail::ur_general(g, m);
}

struct MaximumMatchingsUR {
  bool all_ur = true;
  std::optional<Matching> counterexample;
};

/// Whether every maximum matching is uniquely restricted; otherwise the
/// first non-UR maximum matching in canonical order.
inline MaximumMatchingsUR all_maximum_matchings_ur(const Graph& g) {
  for (const Matching& m : enumerate_maximum_matchings(g))
    if (!is_uniquely_restricted(g, m).is_ur) return {false, m};
  return {};
}

/// Largest uniquely restricted matching size (exact, exponential).
inline std::size_t mu_r(const Graph& g) {
  require_cap("mu_r", g.order());
  for (std::size_t k = matching_number(g); k > 0; --k) {
    bool found = false;
    for_each_matching_of_size(g, k, [&](std::span<const Edge> edges) {
      found = is_uniquely_restricted(g, Matching(g, std::vector<Edge>(edges.begin(), edges.end()))).is_ur;
      return !found;
    });
    if (found) return k;
  }
  return 0;
}

struct UniquePerfectMatching {
  bool unique = false;
  std::optional<Matching> matching;  // set iff unique
};

/// A perfect matching is unique iff it is uniquely restricted, since it
/// saturates every vertex.
inline UniquePerfectMatching has_unique_perfect_matching(const Graph& g) {
  Matching m = maximum_matching(g);
  if (2 * m.size() != g.order()) return {};
  if (!is_uniquely_restricted(g, m).is_ur) return {};
  return {true, std::move(m)};
}

inline bool has_perfect_matching(const Graph& g) { return 2 * matching_number(g) == g.order(); }

}  // namespace lmss
