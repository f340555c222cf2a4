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
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "lmss/errors.hpp"

namespace lmss {

/// Index of a vertex in its host graph's canonical order.
using Vertex = std::size_t;

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge make(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  constexpr bool touches(Vertex x) const noexcept { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex indices. It does not remember its
/// host graph; operations taking a graph validate membership.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet range(std::size_t n) {
    VertexSet s;
    s.members_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.members_[i] = i;
    return s;
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  bool intersects(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
      if (*a == *b) return true;
      *a < *b ? ++a : ++b;
    }
    return false;
  }

  VertexSet with(Vertex v) const {
    VertexSet r = *this;
    auto it = std::lower_bound(r.members_.begin(), r.members_.end(), v);
    if (it == r.members_.end() || *it != v) r.members_.insert(it, v);
    return r;
  }

  VertexSet without(Vertex v) const {
    VertexSet r = *this;
    auto it = std::lower_bound(r.members_.begin(), r.members_.end(), v);
    if (it != r.members_.end() && *it == v) r.members_.erase(it);
    return r;
  }

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.members_));
    return r;
  }
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.members_));
    return r;
  }
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.members_));
    return r;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Lexicographic on the sorted member list. Families use canonical_less.
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

/// Canonical family order: by size, then lexicographically.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Immutable simple undirected graph over named vertices. Vertex indices
/// follow declaration order, which is the iteration order of every
/// deterministic output.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> names, std::span<const Edge> edges) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
      validate_token(names_[i]);
      if (!index_.emplace(names_[i], i).second)
        throw InputError("duplicate vertex '" + names_[i] + "'");
    }
    adj_.resize(names_.size());
    edges_.reserve(edges.size());
    for (Edge e : edges) {
      if (e.u >= order() || e.v >= order()) throw InputError("edge endpoint out of range");
      if (e.u == e.v) throw InputError("loop at vertex '" + names_[e.u] + "'");
      edges_.push_back(Edge::make(e.u, e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
      throw InputError("duplicate edge " + format_edge(*dup));
    for (Edge e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  Graph(std::vector<std::string> names, std::span<const std::pair<std::string, std::string>> edges)
      : Graph(names, resolve(names, edges)) {}

  Graph(std::vector<std::string> names, std::initializer_list<std::pair<std::string, std::string>> edges)
      : Graph(std::move(names), std::span<const std::pair<std::string, std::string>>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return names_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex a, Vertex b) const {
    if (a >= order() || b >= order()) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

  std::optional<Vertex> find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Vertex index_of(std::string_view token) const {
    if (auto v = find(token)) return *v;
    throw InputError("unknown vertex '" + std::string(token) + "'");
  }

  VertexSet vertices() const { return VertexSet::range(order()); }

  VertexSet set(std::initializer_list<std::string_view> tokens) const {
    return set(std::span<const std::string_view>(tokens.begin(), tokens.size()));
  }
  template <class Range>
  VertexSet set(const Range& tokens) const {
    std::vector<Vertex> vs;
    for (const auto& t : tokens) vs.push_back(index_of(t));
    return VertexSet(std::move(vs));
  }

  /// Edge between two named vertices; throws if they are not adjacent.
  Edge edge(std::string_view a, std::string_view b) const {
    Edge e = Edge::make(index_of(a), index_of(b));
    if (!has_edge(e)) throw InputError("'" + std::string(a) + std::string(b) + "' is not an edge");
    return e;
  }

  void require_subset(const VertexSet& s) const {
    if (!s.empty() && s.members().back() >= order())
      throw InputError("vertex index " + std::to_string(s.members().back()) + " is not in the graph");
  }

  std::string format_edge(Edge e) const { return names_.at(e.u) + names_.at(e.v); }

  std::string format_set(const VertexSet& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += names_.at(s[i]);
    }
    return out + "}";
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

  static bool is_valid_token(std::string_view t) {
    if (t.empty()) return false;
    return std::all_of(t.begin(), t.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
             c == '_' || c == '.' || c == '-' || c == '+' || c == ':' || c == '@';
    });
  }

 private:
  static void validate_token(const std::string& t) {
    if (!is_valid_token(t)) throw InputError("invalid vertex token '" + t + "'");
  }

  static std::vector<Edge> resolve(const std::vector<std::string>& names,
                                   std::span<const std::pair<std::string, std::string>> edges) {
    std::unordered_map<std::string_view, Vertex> idx;
    for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
    auto lookup = [&](const std::string& t) {
      auto it = idx.find(t);
      if (it == idx.end()) throw InputError("unknown vertex '" + t + "'");
      return it->second;
    };
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      Vertex u = lookup(a);
      Vertex v = lookup(b);
      if (u == v) throw InputError("loop at vertex '" + a + "'");
      out.push_back(Edge::make(u, v));
    }
    return out;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// N(s): vertices outside s with a neighbor in s.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  g.require_subset(s);
  std::vector<char> mark(g.order(), 0);
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v)) mark[w] = 1;
  for (Vertex v : s) mark[v] = 0;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mark[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

/// N[s] = s ∪ N(s).
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  return s | neighborhood(g, s);
}

/// Induced subgraph together with the host index of each of its vertices.
struct Embedding {
  Graph graph;
  std::vector<Vertex> to_host;
};

inline Embedding induced_embedding(const Graph& g, const VertexSet& s) {
  g.require_subset(s);
  std::vector<std::size_t> local(g.order(), g.order());
  std::vector<std::string> names;
  std::vector<Vertex> to_host;
  for (Vertex v : s) {
    local[v] = names.size();
    names.push_back(g.name(v));
    to_host.push_back(v);
  }
  std::vector<Edge> edges;
  for (Edge e : g.edges())
    if (local[e.u] != g.order() && local[e.v] != g.order()) edges.push_back(Edge::make(local[e.u], local[e.v]));
  return {Graph(std::move(names), edges), std::move(to_host)};
}

/// G[s]; vertex order inherited from g.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) { return induced_embedding(g, s).graph; }

/// G - W.
inline Graph delete_vertices(const Graph& g, const VertexSet& w) {
  g.require_subset(w);
  return induced_subgraph(g, g.vertices() - w);
}

/// G - F; same vertex set.
inline Graph delete_edges(const Graph& g, std::span<const Edge> f) {
  std::vector<Edge> drop(f.begin(), f.end());
  for (Edge& e : drop) {
    e = Edge::make(e.u, e.v);
    if (!g.has_edge(e)) throw InputError("cannot delete missing edge");
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> keep;
  for (Edge e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  return Graph(g.names(), keep);
}

/// (X,Y): edges with one end in x and the other in y. Sides must be
/// disjoint and non-empty.
inline std::vector<Edge> cross_edges(const Graph& g, const VertexSet& x, const VertexSet& y) {
  g.require_subset(x);
  g.require_subset(y);
  if (x.empty() || y.empty()) throw InputError("cross_edges: both sides must be non-empty");
  if (x.intersects(y)) throw InputError("cross_edges: sides overlap");
  std::vector<Edge> out;
  for (Edge e : g.edges())
    if ((x.contains(e.u) && y.contains(e.v)) || (x.contains(e.v) && y.contains(e.u))) out.push_back(e);
  return out;
}

/// pend(G): vertices of degree exactly one.
inline VertexSet pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return VertexSet(std::move(out));
}

inline bool is_stable(const Graph& g, const VertexSet& s) {
  g.require_subset(s);
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (w > v && s.contains(w)) return false;
  return true;
}

struct Bipartition {
  VertexSet class_a;
  VertexSet class_b;
};

/// Certificate of non-bipartiteness: a closed walk v0 v1 ... v(k-1) v0 with
/// k odd and all vi distinct.
struct OddCycle {
  std::vector<Vertex> vertices;
};

/// 2-coloring per connected component, the lexicographically least vertex
/// name of each component going to class A; or an odd cycle.
inline std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> by_name(n);
  for (Vertex v = 0; v < n; ++v) by_name[v] = v;
  std::sort(by_name.begin(), by_name.end(), [&](Vertex a, Vertex b) { return g.name(a) < g.name(b); });

  constexpr int kUncolored = -1;
  std::vector<int> color(n, kUncolored);
  std::vector<Vertex> parent(n, n);
  std::vector<std::size_t> depth(n, 0);
  for (Vertex root : by_name) {
    if (color[root] != kUncolored) continue;
    color[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == kUncolored) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push(w);
        } else if (color[w] == color[v]) {
          // Both tree paths meet at their lowest common ancestor.
          std::vector<Vertex> left{v};
          std::vector<Vertex> right{w};
          Vertex a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::reverse(left.begin(), left.end());
          OddCycle c;
          c.vertices = std::move(left);
          c.vertices.insert(c.vertices.end(), right.begin(), right.end());
          return c;
        }
      }
    }
  }
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
  return Bipartition{VertexSet(std::move(a)), VertexSet(std::move(b))};
}

inline bool is_bipartite(const Graph& g) { return std::holds_alternative<Bipartition>(bipartition(g)); }

/// Vertex sets of the connected components, ordered by least member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    out.emplace_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace lmss
