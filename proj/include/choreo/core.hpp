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

#ifndef CHOREO_CORE_HPP
#define CHOREO_CORE_HPP

#include <optional>
#include <vector>

#include "choreo/graph.hpp"
#include "choreo/limits.hpp"
#include "choreo/rational.hpp"
#include "choreo/values.hpp"

namespace choreo {

/// Per-player payoff vector, indexed by PlayerId::index.
struct Imputation {
  std::vector<Rational> payoffs;

  const Rational& operator[](PlayerId p) const { return payoffs[p.index]; }
  Rational& operator[](PlayerId p) { return payoffs[p.index]; }
  std::size_t size() const { return payoffs.size(); }

  Rational total() const;
  Rational total(Coalition c) const;

  friend bool operator==(const Imputation&, const Imputation&) = default;
};

/// Sum equals v(S) and every payoff is at least the player's solo value.
bool is_efficient(const ValueTable& values, const Imputation& x);
bool is_individually_rational(const ValueTable& values, const Imputation& x);

struct CoreReport {
  bool empty = false;                     // core_empty
  bool member = false;                    // in_core
  bool efficient = true;                  // in_core
  std::optional<Imputation> witness;      // core_empty, when non-empty
  std::optional<Coalition> violated_constraint;  // in_core, first failure
};

/// Membership of `x`. On failure reports the first coalition X (canonical
/// order) with x(X) < v(X); an inefficient x reports the grand coalition.
CoreReport in_core(const ValueTable& values, const Imputation& x);
CoreReport in_core(const GameInstance& instance, const Imputation& x,
                   std::size_t max_players = EnumerationLimits{}.max_players);

/// Exact emptiness decision. A non-empty core comes with its
/// lexicographically smallest point as witness.
CoreReport core_empty(const ValueTable& values);
CoreReport core_empty(const GameInstance& instance,
                      std::size_t max_players = EnumerationLimits{}.max_players);

}  // namespace choreo

#endif  // CHOREO_CORE_HPP
