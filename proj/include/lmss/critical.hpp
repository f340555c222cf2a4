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

#include <span>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/matching.hpp"
#include "lmss/stability.hpp"

namespace lmss {

/// Edges e with alpha(G - e) > alpha(G).
inline std::vector<Edge> alpha_critical_edges(const Graph& g) {
  const std::size_t alpha = stability_number(g);
  std::vector<Edge> out;
  for (Edge e : g.edges())
    if (stability_number(delete_edges(g, std::span<const Edge>(&e, 1))) > alpha) out.push_back(e);
  return out;
}

/// Edges e with mu(G - e) < mu(G).
inline std::vector<Edge> mu_critical_edges(const Graph& g) {
  const std::size_t mu = matching_number(g);
  std::vector<Edge> out;
  for (Edge e : g.edges())
    if (matching_number(delete_edges(g, std::span<const Edge>(&e, 1))) < mu) out.push_back(e);
  return out;
}

/// Extends a maximum matching of G[N[s_hat]], s_hat ∈ Psi(G), to a maximum
/// matching of a bipartite G.
///
/// With S ⊇ s_hat maximum stable and W = N(s_hat), every maximum matching M
/// of G lies in (S, V - S); the edges of M with an endpoint in V - S - W avoid
/// N[s_hat], so adding them to m_hat gives |m_hat| + |V - S - W| = mu(G)
/// edges.
inline Matching extend_matching(const Graph& g, const VertexSet& s_hat, const Matching& m_hat) {
  if (!is_bipartite(g))
    throw UnsupportedInput(
        "extend_matching: graph is not bipartite; the extension can fail there "
        "(e.g. fixture fig3 with s_hat={a,d}, m_hat={ac,df})");
  g.require_subset(s_hat);
  if (!is_local_max_stable(g, s_hat))
    throw PreconditionError("extend_matching: " + g.format_set(s_hat) + " is not in Psi(G)");
  const VertexSet closed = closed_neighborhood(g, s_hat);
  for (Edge e : m_hat)
    if (!g.has_edge(e) || !closed.contains(e.u) || !closed.contains(e.v))
      throw PreconditionError("extend_matching: m_hat is not a matching of G[N[s_hat]]");
  if (m_hat.size() != matching_number(induced_subgraph(g, closed)))
    throw PreconditionError("extend_matching: m_hat is not maximum in G[N[s_hat]]");

  const VertexSet s = max_stable_superset(g, s_hat);
  const VertexSet outside = g.vertices() - s - neighborhood(g, s_hat);
  std::vector<Edge> edges(m_hat.begin(), m_hat.end());
  for (Edge e : maximum_matching(g))
    if (outside.contains(e.u) || outside.contains(e.v)) edges.push_back(e);
  Matching result(g, std::move(edges));
  if (result.size() != matching_number(g))
    throw InvariantViolation("extend_matching: extension is not maximum");
  return result;
}

}  // namespace lmss
