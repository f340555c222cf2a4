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
#include "lmss/generators.hpp"
#include "lmss/stability.hpp"
#include "support/oracle.hpp"

using namespace lmss;

namespace {

std::vector<std::vector<Vertex>> as_lists(const SetFamily& f) {
  std::vector<std::vector<Vertex>> out;
  for (const VertexSet& s : f) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

TEST_CASE("stability number") {
  CHECK(stability_number(fixture("fig1")) == 3);
  CHECK(stability_number(k2()) == 1);
  CHECK(stability_number(fixture("fig6")) == 5);
  CHECK(oracle::alpha(fixture("fig6")) == 5);
  CHECK(stability_number(Graph{}) == 0);
  CHECK(stability_number(path(5001)) == 2501);
  CHECK_THROWS_AS(stability_number(complete(21)), SizeCapError);
}

TEST_CASE("maximum stable set is stable and maximum") {
  for (const char* name : {"fig1", "fig2", "fig3", "fig4a", "fig4b", "fig6", "fig7a", "fig8b"}) {
    Graph g = fixture(name);
    VertexSet s = maximum_stable_set(g);
    CHECK(is_stable(g, s));
    CHECK(static_cast<int>(s.size()) == oracle::alpha(g));
  }
}

TEST_CASE("maximum stable sets") {
  Graph fig1 = fixture("fig1");
  SetFamily omega = enumerate_omega(fig1);
  CHECK(omega.contains(fig1.set({"a", "d", "f"})));
  CHECK(omega.contains(fig1.set({"b", "e", "g"})));
  CHECK(as_lists(omega) == oracle::omega(fig1));

  Graph k = k2();
  CHECK(enumerate_omega(k) == SetFamily({k.set({"v1"}), k.set({"v2"})}));

  Graph fig2 = fixture("fig2");
  CHECK(enumerate_omega(fig2).contains(fig2.set({"a", "c", "e"})));
}

TEST_CASE("local maximum stable sets") {
  Graph fig1 = fixture("fig1");
  CHECK(is_local_max_stable(fig1, fig1.set({"e", "d"})));
  CHECK(is_local_max_stable(fig1, fig1.set({"a"})));
  Graph fig2 = fixture("fig2");
  CHECK_FALSE(is_local_max_stable(fig2, fig2.set({"a", "f"})));
  CHECK_FALSE(is_local_max_stable(fig2, fig2.set({"a", "b"})));
  for (const char* name : {"fig1", "fig2", "fig7a"}) CHECK(is_local_max_stable(fixture(name), VertexSet{}));
  CHECK(is_local_max_stable(path(4001), VertexSet{0}));
}

TEST_CASE("enumerating local maximum stable sets") {
  Graph fig6 = fixture("fig6");
  SetFamily psi = enumerate_psi(fig6);
  CHECK(psi.contains(fig6.set({"d", "f"})));
  CHECK_FALSE(psi.contains(fig6.set({"d"})));
  CHECK_FALSE(psi.contains(fig6.set({"f"})));
  CHECK(as_lists(psi) == oracle::psi(fig6));

  Graph fig7a = fixture("fig7a");
  SetFamily psi7 = enumerate_psi(fig7a);
  CHECK(psi7.contains(fig7a.set({"u", "v"})));
  CHECK_FALSE(psi7.contains(fig7a.set({"u"})));
  CHECK_FALSE(psi7.contains(fig7a.set({"v"})));
  CHECK(as_lists(psi7) == oracle::psi(fig7a));

  Graph k = k2();
  CHECK(enumerate_psi(k) == SetFamily({VertexSet{}, k.set({"v1"}), k.set({"v2"})}));
  CHECK_THROWS_AS(enumerate_psi(path(21)), SizeCapError);
}

TEST_CASE("enumerations agree with brute force on random graphs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    Graph g = corpus::random_graph(1 + i % 10, 0.3 + 0.05 * (i % 7), rng);
    CHECK(as_lists(enumerate_psi(g)) == oracle::psi(g));
    CHECK(as_lists(enumerate_omega(g)) == oracle::omega(g));
    CHECK(static_cast<int>(stability_number(g)) == oracle::alpha(g));
  }
}

TEST_CASE("Koenig-Egervary property") {
  CHECK_FALSE(is_koenig_egervary(fixture("fig4a")));
  CHECK_FALSE(is_koenig_egervary(fixture("fig4b")));
  for (const char* name : {"fig2", "fig5", "fig6", "fig8a"}) {
    Graph g = fixture(name);
    REQUIRE(is_bipartite(g));
    CHECK(is_koenig_egervary(g));
  }
  Graph fig7a = fixture("fig7a");
  CHECK(oracle::alpha(fig7a) + oracle::mu(fig7a) == 6);
  CHECK(is_koenig_egervary(fig7a));
}

TEST_CASE("maximum stable superset") {
  Graph fig1 = fixture("fig1");
  SetFamily omega = enumerate_omega(fig1);
  VertexSet from_a = max_stable_superset(fig1, fig1.set({"a"}));
  CHECK(omega.contains(from_a));
  CHECK(fig1.set({"a"}).is_subset_of(from_a));

  VertexSet from_ed = max_stable_superset(fig1, fig1.set({"e", "d"}));
  CHECK(omega.contains(from_ed));
  CHECK(fig1.set({"e", "d"}).is_subset_of(from_ed));

  for (const VertexSet& s : omega) CHECK(max_stable_superset(fig1, s) == s);

  Graph fig2 = fixture("fig2");
  CHECK_THROWS_AS(max_stable_superset(fig2, fig2.set({"a", "f"})), PreconditionError);
}
