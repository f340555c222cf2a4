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

// Line-oriented edge-list format:
//
//   # comment
//   vertices a b c      (optional, repeatable; fixes order, declares isolated vertices)
//   edge a b
//
// Vertex order is declaration order: `vertices` lines first, then first
// appearance in `edge` lines.

#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lmss/errors.hpp"
#include "lmss/graph.hpp"

namespace lmss {

inline Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  std::unordered_map<std::string, std::size_t> edge_line;  // "u v" -> line
  std::vector<std::pair<std::vector<std::string>, std::size_t>> pending;
  bool saw_directive = false;

  auto intern = [&](const std::string& tok, std::size_t line) {
    if (!Graph::is_valid_token(tok)) throw ParseError(line, "invalid vertex token '" + tok + "'");
    auto [it, inserted] = index.emplace(tok, names.size());
    if (inserted) names.push_back(tok);
    return it->second;
  };

  // Two passes over the lines so that `vertices` directives anywhere in the
  // file take precedence over first appearance in edges.
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));

  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    const std::size_t lineno = i + 1;
    if (head == "vertices") {
      saw_directive = true;
      for (const auto& t : toks) {
        if (index.contains(t)) throw ParseError(lineno, "vertex '" + t + "' declared twice");
        intern(t, lineno);
      }
    } else if (head == "edge") {
      saw_directive = true;
      if (toks.size() != 2) throw ParseError(lineno, "expected 'edge <u> <v>'");
      pending.emplace_back(std::move(toks), lineno);
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!saw_directive) throw ParseError(0, "no 'vertices' or 'edge' lines found");

  for (auto& [toks, lineno] : pending) {
    if (toks[0] == toks[1]) throw ParseError(lineno, "loop at vertex '" + toks[0] + "'");
    Vertex u = intern(toks[0], lineno);
    Vertex v = intern(toks[1], lineno);
    Edge e = Edge::make(u, v);
    std::string key = std::to_string(e.u) + ' ' + std::to_string(e.v);
    if (auto [it, inserted] = edge_line.emplace(key, lineno); !inserted)
      throw ParseError(lineno, "duplicate edge " + toks[0] + " " + toks[1] + " (first on line " +
                                   std::to_string(it->second) + ")");
    edges.push_back(e);
  }
  return Graph(std::move(names), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

/// Writes a `vertices` line (always, so order and isolated vertices survive
/// a round trip) followed by one `edge` line per edge in canonical order.
inline std::string write_edge_list(const Graph& g) {
  std::string out = "vertices";
  for (const auto& n : g.names()) out += ' ' + n;
  out += '\n';
  for (Edge e : g.edges()) out += "edge " + g.name(e.u) + ' ' + g.name(e.v) + '\n';
  return out;
}

}  // namespace lmss
