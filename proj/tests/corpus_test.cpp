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
#include "support/oracle.hpp"

using namespace lmss;

TEST_CASE("connected bipartite corpus counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 3, 5, 17, 44, 182, 730, 4032};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    auto graphs = corpus::connected_bipartite(n);
    CHECK(graphs.size() == expected[n - 1]);
    for (const Graph& g : graphs) {
      CHECK(g.order() == n);
      CHECK(is_connected(g));
      CHECK(oracle::two_colorable(g));
    }
  }
  CHECK(corpus::connected_bipartite_up_to(5).size() == 11);
  CHECK_THROWS_AS(corpus::connected_bipartite(11), InputError);
}

TEST_CASE("all labeled graphs") {
  CHECK(corpus::all_labeled(0).size() == 1);
  CHECK(corpus::all_labeled(3).size() == 8);
  CHECK(corpus::all_labeled(4).size() == 64);
}

TEST_CASE("random forests are acyclic") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    Graph f = corpus::random_forest(2 + i % 9, rng);
    CHECK(f.size() + connected_components(f).size() == f.order());
  }
}
