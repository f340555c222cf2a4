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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lmss/corpus.hpp"
#include "lmss/edge_list.hpp"
#include "lmss/generators.hpp"

using namespace lmss;

TEST_CASE("parse edge list with comments and declared vertices") {
  Graph g = parse_edge_list(
      "# a path with an isolated vertex\n"
      "vertices c b\n"
      "edge a b\n"
      "\n"
      "   # indented comment\n"
      "edge b c\n"
      "vertices z\n");
  CHECK(g.names() == std::vector<std::string>{"c", "b", "z", "a"});
  CHECK(g.size() == 2);
  CHECK(g.degree(g.index_of("z")) == 0);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("edge a b\nedge b b\n") == 2);
  CHECK(line_of("edge a b\n# x\nedge b a\n") == 3);
  CHECK(line_of("edge a\n") == 1);
  CHECK(line_of("vertex a\n") == 1);
  CHECK(line_of("vertices a a\n") == 1);
  CHECK(line_of("edge a b,c\n") == 1);
  CHECK(line_of("") == 0);
  CHECK(line_of("# only comments\n") == 0);
  CHECK_THROWS_WITH(parse_edge_list("edge a b\nedge b a\n"), Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("empty vertices line is the empty graph") {
  Graph g = parse_edge_list("vertices\n");
  CHECK(g.order() == 0);
}

TEST_CASE("writer output parses back to the same graph") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Graph g = corpus::random_graph(rng() % 9, 0.4, rng);
    CHECK(parse_edge_list(write_edge_list(g)) == g);
  }
  for (const auto& name : fixture_names()) CHECK(parse_edge_list(write_edge_list(fixture(name))) == fixture(name));
}
