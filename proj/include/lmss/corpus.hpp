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

// Small-graph corpora for exhaustive and sampled verification.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lmss/errors.hpp"
#include "lmss/generators.hpp"
#include "lmss/graph.hpp"

namespace lmss::corpus {

namespace detail {

// Canonical code of an a x b biadjacency matrix (rows = class A), invariant
// under row and column permutations: minimize, over row orders, the sorted
// vector of column codes. A connected bipartite graph has a unique
// bipartition, so for a == b also the transpose is tried.
inline std::vector<std::uint32_t> canonical_code(const std::vector<std::uint32_t>& rows, std::size_t b) {
  const std::size_t a = rows.size();
  std::vector<std::size_t> perm(a);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::uint32_t> cols(b, 0);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j)
        if (rows[perm[i]] >> j & 1) cols[j] |= std::uint32_t{1} << i;
    std::sort(cols.begin(), cols.end());
    if (best.empty() || cols < best) best = std::move(cols);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<std::uint32_t> transpose(const std::vector<std::uint32_t>& rows, std::size_t b) {
  std::vector<std::uint32_t> out(b, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (rows[i] >> j & 1) out[j] |= std::uint32_t{1} << i;
  return out;
}

inline Graph from_biadjacency(const std::vector<std::uint32_t>& rows, std::size_t b) {
  const std::size_t a = rows.size();
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= a; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t j = 1; j <= b; ++j) names.push_back("b" + std::to_string(j));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (rows[i] >> j & 1) edges.push_back(Edge::make(i, a + j));
  return Graph(std::move(names), edges);
}

}  // namespace detail

/// One representative of every isomorphism class of connected bipartite
/// graphs on exactly n vertices (n <= 10). Class A holds a1.., class B b1..,
/// with |A| <= |B|. Column multisets are enumerated in non-decreasing order
/// (column order never matters), then deduplicated by canonical code.
inline std::vector<Graph> connected_bipartite(std::size_t n) {
  if (n > 10) throw InputError("connected_bipartite: n must be at most 10");
  if (n == 0) return {};
  if (n == 1) return {Graph({"a1"}, std::span<const Edge>{})};
  std::vector<Graph> out;
  for (std::size_t a = 1; 2 * a <= n; ++a) {
    const std::size_t b = n - a;
    const std::uint32_t full = (std::uint32_t{1} << a) - 1;
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> cols(b, 1);
    auto connected = [&] {
      std::uint32_t reached = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::uint32_t c : cols)
          if ((c & reached) && (c | reached) != reached) {
            reached |= c;
            grew = true;
          }
      }
      return reached == full;
    };
    while (true) {
      if (connected()) {
        std::vector<std::uint32_t> rows = detail::transpose(cols, a);
        auto code = detail::canonical_code(rows, b);
        if (a == b) code = std::min(code, detail::canonical_code(cols, a));
        if (seen.insert(code).second) out.push_back(detail::from_biadjacency(rows, b));
      }
      std::size_t j = b;
      while (j > 0 && cols[j - 1] == full) --j;
      if (j == 0) break;
      ++cols[j - 1];
      for (std::size_t k = j; k < b; ++k) cols[k] = cols[j - 1];
    }
  }
  return out;
}

/// Every connected bipartite graph with 1 <= |V| <= max_n, by increasing order.
inline std::vector<Graph> connected_bipartite_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = connected_bipartite(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

/// Every labeled graph on v1..vn (2^(n(n-1)/2) graphs; n <= 7).
inline std::vector<Graph> all_labeled(std::size_t n) {
  if (n > 7) throw InputError("all_labeled: n must be at most 7");
  std::vector<Edge> slots;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) slots.push_back(Edge{i, j});
  std::vector<Graph> out;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (bits >> k & 1) edges.push_back(slots[k]);
    out.emplace_back(names, edges);
  }
  return out;
}

/// G(n, p) on v1..vn.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (lmss::detail::coin(rng, p)) edges.push_back(Edge{i, j});
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return Graph(std::move(names), edges);
}

/// Random forest on v1..vn: vertex i > 1 joins a uniformly chosen earlier
/// vertex with probability 0.85, otherwise starts a new tree.
inline Graph random_forest(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i)
    if (lmss::detail::coin(rng, 0.85)) edges.push_back(Edge::make(static_cast<Vertex>(rng() % i), i));
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return Graph(std::move(names), edges);
}

}  // namespace lmss::corpus
