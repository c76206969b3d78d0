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

#ifndef CHOREO_BARGAINING_HPP
#define CHOREO_BARGAINING_HPP

#include <optional>
#include <vector>

#include "choreo/core.hpp"
#include "choreo/graph.hpp"
#include "choreo/limits.hpp"
#include "choreo/rational.hpp"
#include "choreo/values.hpp"

namespace choreo {

/// Players with Cost^j < p, in player order. A player whose every path
/// costs at least p adds nothing to any coalition.
std::vector<PlayerId> active_set(const GameInstance& instance);

/// Avoiding cost used by the stable imputation: Cost^{-j} when some path
/// avoids j, otherwise the budget p.
Rational capped_avoiding_cost(const GameInstance& instance, PlayerId player);

struct ThresholdReport {
  /// Infimum of the budgets p' such that a stable imputation exists for
  /// every budget above p'; +inf when no such p' exists.
  ExtendedRational threshold = ExtendedRational::infinity();
  /// Whether existence also holds at the threshold itself.
  bool attained = true;
  /// B = {j : Cost^j = Cost_SP and Cost^{-j} > Cost_SP}.
  std::vector<PlayerId> critical_set;
  /// sum_B Cost^{-k} - (|B| - 1) Cost_SP, absent when some k in B is
  /// unavoidable.
  std::optional<Rational> closed_form;
  Rational shortest_cost;
};

/// Budget-independent: depends on the graph only.
ThresholdReport stability_threshold(const GameInstance& instance);

struct StableSolution {
  std::vector<PlayerId> active_set;
  Imputation imputation;
  bool exists = false;
  Rational grand_value;
  std::vector<Rational> capped_avoiding;  // per player
  Rational capped_sum;                    // over the active set
  ThresholdReport threshold;
};

/// x_j = v(S)/|A| + c_j - sum_A c / |A| on A, 0 elsewhere, with c the
/// capped avoiding costs; exists iff every x_j >= 0. Throws
/// NoAffordablePath when Cost_SP > p. At p = Cost_SP, A is empty and
/// x = 0.
StableSolution stable_imputation(const GameInstance& instance);

struct ObjectionRecord {
  PlayerId proposer;  // i
  PlayerId target;    // j
  Coalition coalition;
  Imputation payoffs;  // y; only coalition members are meaningful
};

/// First coalition (canonical order) containing i, excluding j, with
/// v(O) > x(O); all of the surplus goes to i.
std::optional<ObjectionRecord> find_objection(const ValueTable& values,
                                              const Imputation& x, PlayerId i,
                                              PlayerId j);

/// Whether coalition q (containing j, excluding i) can pay x outside the
/// objection and y inside it.
bool counters_via(const ValueTable& values, const Imputation& x,
                  const ObjectionRecord& objection, Coalition q);

bool has_counter_objection(const ValueTable& values, const Imputation& x,
                           const ObjectionRecord& objection);

/// First coalition (canonical order) through which i has an objection
/// against j that no counter-objection answers, with a witnessing y.
std::optional<ObjectionRecord> find_justified_objection(const ValueTable& values,
                                                        const Imputation& x,
                                                        PlayerId i, PlayerId j);

/// x is efficient, individually rational and no player has a justified
/// objection against another.
bool verify_bargaining_membership(const ValueTable& values, const Imputation& x);
bool verify_bargaining_membership(
    const GameInstance& instance, const Imputation& x,
    std::size_t max_players = EnumerationLimits{}.oracle_max_players);

/// min(p, Cost^{-j}) - min(p, Cost^{-i}). When
/// pairwise_condition_applies(i, j) this equals v(S\{i}) - v(S\{j}), and
/// x_j - x_i <= bound guarantees that every objection of i against j via
/// S\{j} is countered via S\{i}.
Rational pairwise_counter_bound(const GameInstance& instance, PlayerId i,
                                PlayerId j);

/// Cost^i < p, Cost^j < p, neither player alone spans a path, and the
/// cheapest paths avoiding each of them have at least two services.
bool pairwise_condition_applies(const GameInstance& instance, PlayerId i,
                                PlayerId j);

}  // namespace choreo

#endif  // CHOREO_BARGAINING_HPP
