// Copyright 2026 The Choreo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "choreo/bargaining.hpp"
#include "choreo/error.hpp"
#include "choreo/generator.hpp"
#include "choreo/vcg.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace choreo;

namespace {

bool all_on_path_avoidable(const ChoreographyGraph& g) {
  const PathResult sp = shortest_path(g);
  for (VertexIndex v : *sp.path) {
    PathQuery q;
    q.allowed = [v](VertexIndex w) { return w != v; };
    if (!cheapest_path(g, q).found()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("vcg") {
  TEST_CASE("Reference example payments") {
    const ChoreographyGraph g = fixtures::fig2().graph;
    VcgReport r = vcg_payments(g);
    CHECK(oracle::ids(g, r.chosen_path) == std::vector<std::string>{"alpha", "gamma"});
    CHECK(r.payment_to(*g.find_vertex("alpha")) == 8);
    CHECK(r.payment_to(*g.find_vertex("gamma")) == 18);
    CHECK(r.payment_to(*g.find_vertex("beta")) == 0);
    CHECK(r.payments[0].avoiding_cost == 12);
    CHECK(r.payments[0].zero_cost_path == 4);
    CHECK(r.total_payment == 26);

    EquivalenceReport e = check_equivalence(g);
    CHECK(e.vcg_total == 26);
    CHECK(e.minimal_stable_price == ExtendedRational(26));
    CHECK(e.equal);
  }

  TEST_CASE("two disjoint equal paths pay costs") {
    GameInstance g = fixtures::game(
        {{"a1", 1, "A"}, {"a2", 2, "A"}, {"b1", 2, "B"}, {"b2", 1, "B"}},
        {{"a1", "a2"}, {"b1", "b2"}}, 10);
    VcgReport r = vcg_payments(g.graph);
    for (const auto& p : r.payments) CHECK(p.payment == g.graph.vertex(p.vertex).cost);
    CHECK(r.total_payment == 3);
    EquivalenceReport e = check_equivalence(g.graph);
    CHECK(e.equal);
    CHECK(e.minimal_stable_price == ExtendedRational(3));
  }

  TEST_CASE("unavoidable vertex") {
    GameInstance g = fixtures::game({{"u", 1, "a"}, {"w", 1, "b"}}, {{"u", "w"}}, 10);
    try {
      vcg_payments(g.graph);
      FAIL("expected UnavoidableVertex");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUnavoidableVertex);
    }
    CHECK_THROWS_AS(check_equivalence(g.graph), Error);
  }

  TEST_CASE("payment identity, rationality and truthfulness") {
    std::mt19937_64 rng(8080);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
      GameInstance g = oracle::random_dag(rng, 4 + trial % 7, 3, 20, Rational(100), 0.45);
      const auto& G = g.graph;
      if (!all_on_path_avoidable(G)) continue;
      ++checked;
      VcgReport r = vcg_payments(G);
      const Rational sp = shortest_path(G).cost.value();
      Rational identity = -Rational(static_cast<long>(r.chosen_path.size()) - 1) * sp;
      for (const auto& p : r.payments) {
        identity += p.avoiding_cost;
        CHECK(p.payment >= G.vertex(p.vertex).cost);
      }
      CHECK(r.total_payment == identity);

      // Overstating one's cost never raises utility (payment - true cost).
      for (VertexIndex v : r.chosen_path) {
        const Rational truthful = r.payment_to(v) - G.vertex(v).cost;
        for (long lie : {1L, 3L, 10L}) {
          std::vector<ServiceSpec> specs;
          for (const auto& s : G.vertices())
            specs.push_back({s.id, s.cost, G.player_name(s.owner)});
          specs[v].cost += lie;
          std::vector<std::pair<std::string, std::string>> edges;
          for (auto [a, b] : G.edges()) edges.emplace_back(G.vertex(a).id, G.vertex(b).id);
          ChoreographyGraph lied = ChoreographyGraph::build(specs, edges);
          if (!all_on_path_avoidable(lied)) continue;
          const Rational utility = vcg_payments(lied).payment_to(v) - G.vertex(v).cost;
          CHECK(utility <= truthful);
        }
      }
    }
    CHECK(checked >= 50);
  }

  TEST_CASE("equivalence with the stability threshold on generated graphs") {
    int accepted = 0;
    for (std::uint64_t seed = 1; accepted < 200; ++seed) {
      GeneratorParams params;
      params.seed = seed;
      params.vertices = 4 + seed % 7;  // 4..10
      params.layers = 2 + seed % 3;
      params.per_vertex = true;
      params.max_cost = 20;
      params.edge_probability = 0.4;
      GameInstance g = generate_instance(params);
      if (!all_on_path_avoidable(g.graph)) continue;
      ++accepted;
      EquivalenceReport e = check_equivalence(g.graph);
      CHECK(e.equal);
    }
  }
}
