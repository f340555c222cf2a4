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
#include <set>

#include "lmss/generators.hpp"
#include "lmss/matching.hpp"
#include "support/oracle.hpp"

using namespace lmss;

namespace {

std::set<std::string> edge_names(const Graph& g) {
  std::set<std::string> out;
  for (Edge e : g.edges()) {
    std::string a = g.name(e.u), b = g.name(e.v);
    out.insert(a < b ? a + "-" + b : b + "-" + a);
  }
  return out;
}

std::set<std::string> pairs(std::initializer_list<std::pair<const char*, const char*>> list) {
  std::set<std::string> out;
  for (auto [a, b] : list) out.insert(std::string(a) < b ? std::string(a) + "-" + b : std::string(b) + "-" + a);
  return out;
}

long pm_count(const Graph& g) { return oracle::perfect_matchings_within(g, (oracle::Subset{1} << g.order()) - 1); }

}  // namespace

TEST_CASE("fixture edge lists") {
  CHECK(edge_names(fixture("fig1")) ==
        pairs({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "g"}, {"c", "e"}, {"e", "f"}, {"f", "g"}}));
  CHECK(edge_names(fixture("fig2")) ==
        pairs({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"b", "e"}, {"c", "f"}, {"e", "f"}}));
  CHECK(edge_names(fixture("fig3")) == pairs({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"},
                                              {"d", "f"}, {"e", "f"}, {"f", "g"}}));
  CHECK(edge_names(fixture("fig4a")) == pairs({{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u1", "v1"},
                                               {"u2", "v1"}, {"u3", "v2"}, {"u4", "v2"}}));
  CHECK(edge_names(fixture("fig4b")) ==
        pairs({{"w1", "w2"}, {"w2", "w3"}, {"w1", "w4"}, {"w2", "w4"}, {"w3", "w5"}}));
  CHECK(edge_names(fixture("fig5")) ==
        pairs({{"a", "b"}, {"b", "f"}, {"b", "d"}, {"c", "d"}, {"c", "e"}, {"c", "f"}}));
  CHECK(edge_names(fixture("fig6")) == pairs({{"a", "b"}, {"b", "c"}, {"b", "e"}, {"d", "e"}, {"d", "g"},
                                              {"e", "f"}, {"f", "g"}, {"g", "h"}}));
  CHECK(edge_names(fixture("fig7a")) ==
        pairs({{"t", "w"}, {"w", "v"}, {"v", "x"}, {"w", "y"}, {"y", "u"}, {"u", "x"}}));
  CHECK(edge_names(fixture("fig7b")) == pairs({{"b1", "b2"}, {"b2", "b3"}, {"b3", "b4"}, {"b1", "t2"},
                                               {"t1", "t2"}, {"t2", "t3"}, {"t3", "t4"}, {"b3", "t3"}}));
  CHECK(edge_names(fixture("fig8a")) == pairs({{"c1", "c2"}, {"c2", "c3"}, {"c3", "c4"}, {"c2", "d1"},
                                               {"c2", "d2"}, {"c3", "d3"}, {"d2", "d3"}}));
  CHECK(edge_names(fixture("fig8b")) == pairs({{"e1", "e2"}, {"e2", "e3"}, {"e3", "e4"}, {"f1", "f2"},
                                               {"f2", "f3"}, {"e2", "f2"}, {"e3", "f2"}}));
}

TEST_CASE("fixture shapes") {
  Graph fig5 = fixture("fig5");
  CHECK(fig5.order() == 6);
  CHECK(fig5.size() == 6);

  Graph fig7a = fixture("fig7a");
  for (auto [a, b] : {std::pair{"w", "v"}, {"v", "x"}, {"x", "u"}, {"u", "y"}, {"y", "w"}})
    CHECK(fig7a.adjacent(fig7a.index_of(a), fig7a.index_of(b)));
  CHECK(fig7a.degree(fig7a.index_of("t")) == 1);
  CHECK(fig7a.adjacent(fig7a.index_of("t"), fig7a.index_of("w")));

  CHECK(fixture_names().size() == 11);
  try {
    fixture("nope");
    FAIL("expected an error");
  } catch (const InputError& e) {
    std::string what = e.what();
    for (const auto& name : fixture_names()) CHECK(what.find(name) != std::string::npos);
  }
}

TEST_CASE("standard families") {
  CHECK(cycle(5).size() == 5);
  CHECK(cycle(5).name(0) == "v1");
  CHECK(complete(3).size() == 3);
  CHECK(complete(1).size() == 0);
  CHECK(path(4).size() == 3);
  CHECK(k2().size() == 1);
  CHECK_THROWS_AS(cycle(2), InputError);
  CHECK_THROWS_AS(complete(0), InputError);
}

TEST_CASE("extending by K2") {
  Graph k = k2();
  Bipartition bip{k.set({"v1"}), k.set({"v2"})};
  GrownGraph twice = extend_with_k2(k, bip, AttachSpec{});
  CHECK(twice.graph.order() == 4);
  CHECK(twice.graph.size() == 2);
  CHECK(pm_count(twice.graph) == 1);
  CHECK(has_unique_perfect_matching(twice.graph).unique);

  Graph ab({"a", "b"}, {{"a", "b"}});
  AttachSpec spec;
  spec.endpoint = AttachSpec::Endpoint::kY;
  spec.target_class = AttachSpec::Side::kA;
  spec.targets = ab.set({"a"});
  spec.x_name = "x";
  spec.y_name = "y";
  GrownGraph p4 = extend_with_k2(ab, Bipartition{ab.set({"a"}), ab.set({"b"})}, spec);
  CHECK(edge_names(p4.graph) == pairs({{"a", "b"}, {"x", "y"}, {"y", "a"}}));
  CHECK(pm_count(p4.graph) == 1);
  CHECK(has_unique_perfect_matching(p4.graph).matching ==
        Matching(p4.graph, {{"a", "b"}, {"x", "y"}}));
  CHECK(p4.bipartition.class_b.contains(p4.graph.index_of("y")));
  CHECK(p4.graph.degree(p4.graph.index_of("x")) == 1);
}

TEST_CASE("extending by K2 rejects bad specs") {
  Graph ab({"a", "b"}, {{"a", "b"}});
  Bipartition bip{ab.set({"a"}), ab.set({"b"})};
  AttachSpec mixed;
  mixed.endpoint = AttachSpec::Endpoint::kX;
  mixed.target_class = AttachSpec::Side::kA;
  mixed.targets = ab.set({"a", "b"});
  CHECK_THROWS_AS(extend_with_k2(ab, bip, mixed), InputError);

  AttachSpec dangling;
  dangling.targets = ab.set({"a"});
  CHECK_THROWS_AS(extend_with_k2(ab, bip, dangling), InputError);

  AttachSpec clash;
  clash.x_name = "a";
  CHECK_THROWS_AS(extend_with_k2(ab, bip, clash), InputError);

  CHECK_THROWS_AS(extend_with_k2(ab, Bipartition{ab.set({"a", "b"}), VertexSet{}}, AttachSpec{}), InputError);
  Graph c4 = cycle(4);
  CHECK_THROWS_AS(extend_with_k2(c4, Bipartition{c4.set({"v1", "v3"}), c4.set({"v2", "v4"})}, AttachSpec{}),
                  PreconditionError);
}

TEST_CASE("iterated seeded extensions keep a unique perfect matching") {
  std::mt19937_64 rng(3);
  Graph g = k2();
  Bipartition bip{g.set({"v1"}), g.set({"v2"})};
  for (int step = 0; step < 3; ++step) {
    AttachSpec spec;
    spec.endpoint = rng() % 2 ? AttachSpec::Endpoint::kX : AttachSpec::Endpoint::kY;
    spec.target_class = rng() % 2 ? AttachSpec::Side::kA : AttachSpec::Side::kB;
    const VertexSet& cls = spec.target_class == AttachSpec::Side::kA ? bip.class_a : bip.class_b;
    std::vector<Vertex> targets;
    for (Vertex v : cls)
      if (rng() % 2) targets.push_back(v);
    spec.targets = VertexSet(targets);
    GrownGraph next = extend_with_k2(g, bip, spec);
    g = next.graph;
    bip = next.bipartition;
    CHECK(pm_count(g) == 1);
    CHECK(has_unique_perfect_matching(g).unique);
    CHECK(oracle::two_colorable(g));
  }
}

TEST_CASE("random unique-perfect-matching bipartite graphs") {
  Graph one = random_unique_pm_bipartite(1, 0.7, 99);
  CHECK(one.order() == 2);
  CHECK(one.size() == 1);

  Graph five = random_unique_pm_bipartite(5, 0.0, 7);
  CHECK(five.order() == 10);
  CHECK(five.size() == 5);
  for (Vertex v = 0; v < five.order(); ++v) CHECK(five.degree(v) == 1);

  Graph six = random_unique_pm_bipartite(6, 0.5, 42);
  CHECK(six.order() == 12);
  CHECK(pm_count(six) == 1);
  CHECK(six == random_unique_pm_bipartite(6, 0.5, 42));
  CHECK(is_bipartite(six));

  CHECK_THROWS_AS(random_unique_pm_bipartite(0, 0.5, 1), InputError);
  CHECK_THROWS_AS(random_unique_pm_bipartite(3, 1.5, 1), InputError);
}
