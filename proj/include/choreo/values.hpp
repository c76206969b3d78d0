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

#ifndef CHOREO_VALUES_HPP
#define CHOREO_VALUES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "choreo/graph.hpp"
#include "choreo/limits.hpp"
#include "choreo/rational.hpp"

namespace choreo {

enum class ValueReason {
  kNoInternalPath,  // the coalition's vertices span no complete path
  kMonopolyPath,    // only single-service internal paths
  kBeatenOutside,   // an outside path is at least as cheap
  kOverBudget,      // the internal path does not fit the budget
  kWins,
};

std::string_view value_reason_name(ValueReason reason);

struct CoalitionValue {
  Rational value;
  std::optional<std::vector<VertexIndex>> winning_path;
  ValueReason reason = ValueReason::kNoInternalPath;
};

/// v(X) = min(p, Cost^{-X}) - Cost^X when X owns a path of at least two
/// services that is no more expensive than the cheaper of the budget and
/// every path avoiding X; 0 otherwise. Never negative.
CoalitionValue coalition_value(const GameInstance& instance, Coalition coalition);

/// v(S). Equals p - Cost_SP whenever the shortest path fits the budget and
/// has at least two services.
Rational grand_coalition_value(const GameInstance& instance);

/// Characteristic function over every subset of the players.
class ValueTable {
 public:
  explicit ValueTable(std::size_t num_players,
                      std::vector<CoalitionValue> entries)
      : num_players_(num_players), entries_(std::move(entries)) {}

  std::size_t num_players() const { return num_players_; }
  const CoalitionValue& at(Coalition c) const { return entries_[c.mask()]; }
  const Rational& value(Coalition c) const { return entries_[c.mask()].value; }
  Coalition grand_coalition() const { return Coalition::all(num_players_); }

 private:
  std::size_t num_players_;
  std::vector<CoalitionValue> entries_;  // indexed by coalition mask
};

/// Throws TooManyPlayers above `max_players`.
ValueTable enumerate_values(const GameInstance& instance,
                            std::size_t max_players = EnumerationLimits{}.max_players);

}  // namespace choreo

#endif  // CHOREO_VALUES_HPP
