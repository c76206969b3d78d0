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

#ifndef CHOREO_TESTS_FIXTURES_HPP
#define CHOREO_TESTS_FIXTURES_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "choreo/core.hpp"
#include "choreo/document.hpp"
#include "choreo/graph.hpp"

namespace fixtures {

using choreo::Rational;

inline std::string data_path(const std::string& name) {
  return std::string(CHOREO_DATA_DIR) + "/" + name;
}

inline choreo::GameInstance fig2() { return choreo::load_game_file(data_path("fig2.json")); }

inline choreo::GameInstance fig2(const Rational& budget) { return fig2().with_budget(budget); }

inline choreo::GameInstance fig2_with_prices(const std::map<std::string, long>& d) {
  choreo::GameInstance g = fig2();
  std::vector<Rational> prices;
  for (const auto& v : g.graph.vertices()) prices.push_back(Rational(d.at(v.id)));
  return choreo::GameInstance::create(g.graph, g.budget, prices);
}

// (id, cost, owner) triples.
inline choreo::GameInstance game(
    const std::vector<std::tuple<std::string, long, std::string>>& services,
    const std::vector<std::pair<std::string, std::string>>& edges, long budget) {
  std::vector<choreo::ServiceSpec> specs;
  for (const auto& [id, cost, owner] : services) specs.push_back({id, Rational(cost), owner});
  return choreo::GameInstance::create(choreo::ChoreographyGraph::build(specs, edges),
                                      Rational(budget));
}

inline choreo::PlayerId player(const choreo::GameInstance& g, const std::string& name) {
  return g.player(name);
}

inline choreo::Coalition coalition(const choreo::GameInstance& g,
                                   const std::vector<std::string>& names) {
  choreo::Coalition c;
  for (const auto& n : names) c = c.with(g.player(n));
  return c;
}

inline choreo::Imputation payoffs(const choreo::GameInstance& g,
                                  const std::map<std::string, long>& by_name) {
  choreo::Imputation x;
  x.payoffs.assign(g.num_players(), Rational(0));
  for (const auto& [name, value] : by_name) x[g.player(name)] = value;
  return x;
}

}  // namespace fixtures

#endif  // CHOREO_TESTS_FIXTURES_HPP
