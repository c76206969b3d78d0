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

#include "choreo/values.hpp"

#include "choreo/error.hpp"

namespace choreo {

std::string_view value_reason_name(ValueReason reason) {
  switch (reason) {
    case ValueReason::kNoInternalPath: return "NoInternalPath";
    case ValueReason::kMonopolyPath: return "MonopolyPath";
    case ValueReason::kBeatenOutside: return "BeatenOutside";
    case ValueReason::kOverBudget: return "OverBudget";
    case ValueReason::kWins: return "Wins";
  }
  return "Unknown";
}

CoalitionValue coalition_value(const GameInstance& instance, Coalition coalition) {
  const ChoreographyGraph& g = instance.graph;
  CoalitionValue out;
  out.value = 0;
  if (coalition.empty()) return out;

  PathQuery inside;
  inside.allowed = [&](VertexIndex v) { return g.owned_by(v, coalition); };
  if (!cheapest_path(g, inside).found()) return out;

  inside.min_services = 2;
  PathResult own = cheapest_path(g, inside);
  if (!own.found()) {
    out.reason = ValueReason::kMonopolyPath;
    return out;
  }

  const Rational& cost = own.cost.value();
  const ExtendedRational outside = avoiding_shortest_path(g, coalition).cost;
  if (outside < ExtendedRational(cost)) {
    out.reason = ValueReason::kBeatenOutside;
    return out;
  }
  if (instance.budget < cost) {
    out.reason = ValueReason::kOverBudget;
    return out;
  }
  const Rational cap = min_with(instance.budget, outside);
  out.value = cap - cost;
  if (out.value > 0) {
    out.reason = ValueReason::kWins;
    out.winning_path = std::move(own.path);
  } else {
    out.reason = outside == ExtendedRational(cost) ? ValueReason::kBeatenOutside
                                                   : ValueReason::kOverBudget;
  }
  return out;
}

Rational grand_coalition_value(const GameInstance& instance) {
  return coalition_value(instance, instance.graph.grand_coalition()).value;
}

ValueTable enumerate_values(const GameInstance& instance, std::size_t max_players) {
  const std::size_t n = instance.num_players();
  require_player_cap(n, max_players, "coalition table");
  std::vector<CoalitionValue> entries(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < entries.size(); ++mask) {
    entries[mask] = coalition_value(instance, Coalition(mask));
  }
  return ValueTable(n, std::move(entries));
}

}  // namespace choreo
