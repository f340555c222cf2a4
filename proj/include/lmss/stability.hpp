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
#include <span>
#include <variant>
#include <vector>

#include "lmss/detail/bitmask.hpp"
#include "lmss/errors.hpp"
#include "lmss/graph.hpp"
#include "lmss/matching.hpp"

namespace lmss {

/// Finite family of vertex sets in canonical order (size, then
/// lexicographic), without duplicates.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end(), canonical_less);
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }
  const VertexSet& operator[](std::size_t i) const { return sets_[i]; }
  std::span<const VertexSet> sets() const noexcept { return sets_; }

  bool contains(const VertexSet& s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less);
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<VertexSet> sets_;
};

namespace detail {

// Minimum vertex cover from a maximum matching (Koenig): Z = vertices
// reachable from free class-A vertices by alternating paths; the cover is
// (A - Z) ∪ (B ∩ Z) and its complement is a maximum stable set.
inline VertexSet koenig_stable_set(const Graph& g, const Bipartition& bip) {
  const std::size_t n = g.order();
  Matching m = bipartite_maximum_matching(g, bip);
  std::vector<Vertex> mate = m.mate_table(n);
  std::vector<char> in_z(n, 0);
  std::vector<Vertex> queue;
  for (Vertex a : bip.class_a)
    if (mate[a] == n) {
      in_z[a] = 1;
      queue.push_back(a);
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex a = queue[qi];
    for (Vertex b : g.neighbors(a)) {
      if (in_z[b] || mate[a] == b) continue;
      in_z[b] = 1;
      Vertex next = mate[b];
      if (next != n && !in_z[next]) {
        in_z[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<Vertex> stable;
  for (Vertex v : bip.class_a)
    if (in_z[v]) stable.push_back(v);
  for (Vertex v : bip.class_b)
    if (!in_z[v]) stable.push_back(v);
  return VertexSet(std::move(stable));
}

}  // namespace detail

/// One maximum stable set. Bipartite graphs: complement of a Koenig cover
/// (uncapped); otherwise exact branch and bound (capped).
inline VertexSet maximum_stable_set(const Graph& g) {
  auto bip = bipartition(g);
  if (auto* b = std::get_if<Bipartition>(&bip)) return detail::koenig_stable_set(g, *b);
  detail::BitGraph bg(g, "maximum_stable_set (non-bipartite)");
  return detail::from_mask(detail::MaxStableSearch(bg).run(bg.all()));
}

/// alpha(G). Bipartite graphs use alpha = |V| - mu.
inline std::size_t stability_number(const Graph& g) {
  if (is_bipartite(g)) return g.order() - matching_number(g);
  detail::BitGraph bg(g, "stability_number (non-bipartite)");
  return static_cast<std::size_t>(detail::max_stable_size(bg, bg.all()));
}

/// Omega(G): every stable set of size alpha(G).
inline SetFamily enumerate_omega(const Graph& g) {
  require_cap("enumerate_omega", g.order());
  detail::BitGraph bg(g, "enumerate_omega");
  const int alpha = static_cast<int>(stability_number(g));
  std::vector<VertexSet> out;
  auto rec = [&](auto& self, detail::Mask cand, detail::Mask chosen) -> void {
    const int have = detail::popcount(chosen);
    if (have == alpha) {
      out.push_back(detail::from_mask(chosen));
      return;
    }
    if (have + detail::popcount(cand) < alpha) return;
    Vertex v = detail::lowest(cand);
    detail::Mask rest = cand & ~detail::bit(v);
    self(self, rest & ~bg.adj[v], chosen | detail::bit(v));
    self(self, rest, chosen);
  };
  rec(rec, bg.all(), 0);
  return SetFamily(std::move(out));
}

/// S ∈ Psi(G): S is stable and maximum stable in G[N[S]]. Uncapped when
/// G[N[S]] is bipartite.
inline bool is_local_max_stable(const Graph& g, const VertexSet& s) {
  if (!is_stable(g, s)) return false;
  return stability_number(induced_subgraph(g, closed_neighborhood(g, s))) == s.size();
}

/// Psi(G), including the empty set. Branches over stable sets and tests
/// local maximality at each one.
inline SetFamily enumerate_psi(const Graph& g) {
  require_cap("enumerate_psi", g.order());
  detail::BitGraph bg(g, "enumerate_psi");
  auto bip = bipartition(g);
  const auto* parts = std::get_if<Bipartition>(&bip);
  const detail::Mask class_a = parts ? detail::to_mask(parts->class_a) : 0;

  auto local_alpha = [&](detail::Mask closed) {
    if (parts) return detail::popcount(closed) - detail::bipartite_matching_size(bg, closed, class_a);
    return detail::max_stable_size(bg, closed);
  };

  std::vector<VertexSet> out;
  auto rec = [&](auto& self, Vertex next, detail::Mask chosen) -> void {
    if (local_alpha(chosen | bg.neighborhood(chosen)) == detail::popcount(chosen))
      out.push_back(detail::from_mask(chosen));
    for (Vertex v = next; v < bg.n; ++v)
      if (!(bg.adj[v] & chosen)) self(self, v + 1, chosen | detail::bit(v));
  };
  rec(rec, 0, 0);
  return SetFamily(std::move(out));
}

/// alpha(G) + mu(G) == |V(G)|.
inline bool is_koenig_egervary(const Graph& g) {
  return stability_number(g) + matching_number(g) == g.order();
}

/// Some maximum stable set containing s, for s ∈ Psi(G): s together with a
/// maximum stable set of G - N[s].
inline VertexSet max_stable_superset(const Graph& g, const VertexSet& s) {
  g.require_subset(s);
  if (!is_local_max_stable(g, s))
    throw PreconditionError("max_stable_superset: " + g.format_set(s) +
                            " is not a local maximum stable set");
  auto emb = induced_embedding(g, g.vertices() - closed_neighborhood(g, s));
  std::vector<Vertex> out(s.begin(), s.end());
  for (Vertex v : maximum_stable_set(emb.graph)) out.push_back(emb.to_host[v]);
  return VertexSet(std::move(out));
}

}  // namespace lmss
