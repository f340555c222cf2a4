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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lmss/errors.hpp"
#include "lmss/graph.hpp"
#include "lmss/matching.hpp"
#include "lmss/stability.hpp"

namespace lmss {

/// Nested sequence S1 ⊂ S2 ⊂ ... ⊂ Sk with |S1| = 1 and unit growth. The
/// empty chain belongs to the empty set.
class Chain {
 public:
  Chain() = default;

  explicit Chain(std::vector<VertexSet> steps) : steps_(std::move(steps)) {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const VertexSet prev = i ? steps_[i - 1] : VertexSet{};
      if (steps_[i].size() != prev.size() + 1 || !prev.is_subset_of(steps_[i]))
        throw InputError("chain step " + std::to_string(i + 1) +
                         " does not add exactly one vertex to the previous step");
    }
  }

  /// Chain adding the given vertices one at a time.
  static Chain from_order(std::span<const Vertex> added) {
    std::vector<VertexSet> steps;
    VertexSet cur;
    for (Vertex v : added) {
      if (cur.contains(v)) throw InputError("chain adds a vertex twice");
      cur = cur.with(v);
      steps.push_back(cur);
    }
    return Chain(std::move(steps));
  }

  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  std::span<const VertexSet> steps() const noexcept { return steps_; }
  const VertexSet& step(std::size_t i) const { return steps_.at(i); }
  VertexSet final_set() const { return steps_.empty() ? VertexSet{} : steps_.back(); }

  /// x1, ..., xk.
  std::vector<Vertex> added() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const VertexSet prev = i ? steps_[i - 1] : VertexSet{};
      out.push_back((steps_[i] - prev)[0]);
    }
    return out;
  }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<VertexSet> steps_;
};

inline std::string format_chain(const Graph& g, const Chain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i) out += " ⊂ ";
    out += g.format_set(c.step(i));
  }
  return out;
}

/// Every step of the chain is a local maximum stable set.
inline bool is_accessibility_chain(const Graph& g, const Chain& c) {
  for (const VertexSet& s : c.steps()) {
    g.require_subset(s);
    if (!is_local_max_stable(g, s)) return false;
  }
  return true;
}

enum class Axiom { kAccessibility, kExchange };

inline const char* axiom_name(Axiom a) {
  return a == Axiom::kAccessibility ? "accessibility" : "exchange";
}

struct GreedoidViolation {
  Axiom axiom = Axiom::kAccessibility;
  VertexSet x;                  // the set with no removable element / the larger set
  std::optional<VertexSet> y;   // exchange only: the smaller set
};

struct GreedoidVerdict {
  bool is_greedoid = true;
  std::optional<GreedoidViolation> violation;
};

/// Checks accessibility over all members in canonical order, then exchange
/// over pairs (X, Y), |X| = |Y| + 1, in canonical order of X then Y. Returns
/// the first violation found. O(|F|^2 |V|).
inline GreedoidVerdict check_greedoid(const SetFamily& family) {
  if (!family.contains(VertexSet{}))
    throw PreconditionError("check_greedoid: the family must contain the empty set");
  for (const VertexSet& x : family) {
    if (x.empty()) continue;
    bool ok = std::any_of(x.begin(), x.end(), [&](Vertex v) { return family.contains(x.without(v)); });
    if (!ok) return {false, GreedoidViolation{Axiom::kAccessibility, x, std::nullopt}};
  }
  for (const VertexSet& x : family) {
    for (const VertexSet& y : family) {
      if (y.size() + 1 != x.size()) continue;
      const VertexSet diff = x - y;
      bool ok = std::any_of(diff.begin(), diff.end(), [&](Vertex v) { return family.contains(y.with(v)); });
      if (!ok) return {false, GreedoidViolation{Axiom::kExchange, x, y}};
    }
  }
  return {};
}

/// Brute-force side: enumerate Psi(G) and check both axioms.
inline GreedoidVerdict psi_is_greedoid(const Graph& g) { return check_greedoid(enumerate_psi(g)); }

struct MatchingCriterion {
  bool is_greedoid = true;
  std::optional<Matching> witness;  // a maximum matching that is not UR
};

/// Matching side, for bipartite graphs: Psi(G) is a greedoid iff every
/// maximum matching is uniquely restricted.
inline MatchingCriterion psi_is_greedoid_bipartite(const Graph& g) {
  if (!is_bipartite(g))
    throw UnsupportedInput("psi_is_greedoid_bipartite: the matching criterion only holds for bipartite graphs");
  auto r = all_maximum_matchings_ur(g);
  return {r.all_ur, std::move(r.counterexample)};
}

/// Accessibility chain ending at s ∈ Psi(G), or nullopt if none exists.
/// Grows from the empty set trying vertices of s in index order and
/// memoizing dead ends, so the result is the chain whose sequence of added
/// vertices is lexicographically least.
inline std::optional<Chain> find_accessibility_chain(const Graph& g, const VertexSet& s) {
  g.require_subset(s);
  if (!is_local_max_stable(g, s))
    throw PreconditionError("find_accessibility_chain: " + g.format_set(s) + " is not in Psi(G)");
  std::map<VertexSet, bool> in_psi;
  std::set<VertexSet> dead;
  auto psi = [&](const VertexSet& t) {
    auto [it, inserted] = in_psi.try_emplace(t, false);
    if (inserted) it->second = is_local_max_stable(g, t);
    return it->second;
  };
  std::vector<Vertex> order;
  auto grow = [&](auto& self, const VertexSet& cur) -> bool {
    if (cur.size() == s.size()) return true;
    for (Vertex v : s) {
      if (cur.contains(v)) continue;
      VertexSet next = cur.with(v);
      if (dead.contains(next) || !psi(next)) continue;
      order.push_back(v);
      if (self(self, next)) return true;
      order.pop_back();
      dead.insert(next);
    }
    return false;
  };
  if (!grow(grow, VertexSet{})) return std::nullopt;
  return Chain::from_order(order);
}

namespace detail {

inline bool is_maximum_stable(const Graph& g, const VertexSet& s) {
  return is_stable(g, s) && s.size() == stability_number(g);
}

}  // namespace detail

/// UR maximum matching read off an accessibility chain of a maximum stable
/// set of a bipartite graph: step i contributes the edge x_i y whenever
/// N(x_i) - N[S_{i-1}] = {y}, and nothing when that set is empty.
inline Matching urm_from_chain(const Graph& g, const Chain& chain) {
  if (!is_bipartite(g)) throw UnsupportedInput("urm_from_chain: graph is not bipartite");
  if (!is_accessibility_chain(g, chain))
    throw PreconditionError("urm_from_chain: some chain step is not in Psi(G)");
  if (!detail::is_maximum_stable(g, chain.final_set()))
    throw PreconditionError("urm_from_chain: the chain does not end in a maximum stable set");
  std::vector<Edge> edges;
  VertexSet covered;  // N[S_{i-1}]
  const std::vector<Vertex> added = chain.added();
  for (std::size_t i = 0; i < added.size(); ++i) {
    const Vertex x = added[i];
    const VertexSet fresh = neighborhood(g, VertexSet{x}) - covered;
    if (fresh.size() > 1)
      throw InvariantViolation("urm_from_chain: step " + std::to_string(i + 1) + " brings " +
                               std::to_string(fresh.size()) + " new neighbors");
    if (fresh.size() == 1) edges.push_back(Edge::make(x, fresh[0]));
    covered = closed_neighborhood(g, chain.step(i));
  }
  return Matching(g, std::move(edges));
}

/// Accessibility chain of s ∈ Omega(G) built from a UR maximum matching m of
/// a bipartite graph. The m-saturated part S_mu of s comes first, ordered by
/// peeling pendant edges off G[N[S_mu]] (where m is the unique perfect
/// matching): a pendant in s is placed before the rest, otherwise its mate
/// (which is in s) is placed after it. The unsaturated vertices of s follow
/// in index order.
inline Chain chain_from_urm(const Graph& g, const Matching& m, const VertexSet& s) {
  if (!is_bipartite(g)) throw UnsupportedInput("chain_from_urm: graph is not bipartite");
  g.require_subset(s);
  for (Edge e : m)
    if (!g.has_edge(e)) throw PreconditionError("chain_from_urm: matching edge not in graph");
  if (m.size() != matching_number(g)) throw PreconditionError("chain_from_urm: matching is not maximum");
  if (!is_uniquely_restricted(g, m).is_ur)
    throw PreconditionError("chain_from_urm: matching is not uniquely restricted");
  if (!detail::is_maximum_stable(g, s))
    throw PreconditionError("chain_from_urm: " + g.format_set(s) + " is not a maximum stable set");

  const std::vector<Vertex> mate = m.mate_table(g.order());
  for (Edge e : m)
    if (s.contains(e.u) == s.contains(e.v))
      throw InvariantViolation("chain_from_urm: matched edge " + g.format_edge(e) +
                               " does not cross (S, V-S)");
  const VertexSet saturated_part = s & m.saturated();

  VertexSet rest = closed_neighborhood(g, saturated_part);
  std::vector<Vertex> front, back;
  while (!rest.empty()) {
    std::optional<Vertex> pendant;
    Vertex only = 0;
    for (Vertex v : rest) {
      std::size_t deg = 0;
      for (Vertex w : g.neighbors(v))
        if (rest.contains(w)) {
          ++deg;
          only = w;
        }
      if (deg == 1) {
        pendant = v;
        break;
      }
    }
    if (!pendant || mate[*pendant] != only)
      throw InvariantViolation("chain_from_urm: G[N[S_mu]] has no pendant matched edge to peel");
    if (s.contains(*pendant))
      front.push_back(*pendant);
    else
      back.push_back(only);
    rest = rest.without(*pendant).without(only);
  }
  std::vector<Vertex> order = front;
  order.insert(order.end(), back.rbegin(), back.rend());
  for (Vertex v : s - saturated_part) order.push_back(v);
  return Chain::from_order(order);
}

/// For a bipartite graph with a perfect matching: the perfect matching is
/// unique iff some maximum stable set has an accessibility chain. Both sides
/// are computed independently; disagreement raises InvariantViolation.
inline bool unique_pm_has_chain(const Graph& g) {
  if (!is_bipartite(g)) throw PreconditionError("unique_pm_has_chain: graph is not bipartite");
  if (!has_perfect_matching(g)) throw PreconditionError("unique_pm_has_chain: graph has no perfect matching");
  std::size_t pm_count = 0;
  for_each_matching_of_size(g, g.order() / 2, [&](std::span<const Edge>) { return ++pm_count < 2; });
  const bool unique = pm_count == 1;
  bool chained = false;
  for (const VertexSet& s : enumerate_omega(g))
    if (find_accessibility_chain(g, s)) {
      chained = true;
      break;
    }
  if (unique != chained)
    throw InvariantViolation("unique_pm_has_chain: perfect-matching count and chain search disagree");
  return unique;
}

}  // namespace lmss
