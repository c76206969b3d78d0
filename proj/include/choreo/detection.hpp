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

#ifndef CHOREO_DETECTION_HPP
#define CHOREO_DETECTION_HPP

#include <vector>

#include "choreo/bargaining.hpp"
#include "choreo/graph.hpp"
#include "choreo/rational.hpp"

namespace choreo {

struct PlayerDetection {
  PlayerId player;
  bool active = false;
  Rational margin;    // sum of (announced price - cost) over owned services
  Rational expected;  // stable payoff
  bool matches = false;
};

struct DetectionReport {
  bool alliance = false;
  Rational tolerance;
  std::vector<PlayerDetection> per_player;
  StableSolution solution;
};

/// Throws MissingAnnouncedPrices when the instance has none.
Rational player_margin(const GameInstance& instance, PlayerId player);

/// Alliance iff every margin is within `tolerance` of the stable payoff
/// (0 for inactive players). Throws MissingAnnouncedPrices, NoAffordablePath,
/// or NoStableImputation when the stable imputation does not exist.
DetectionReport detect(const GameInstance& instance, const Rational& tolerance = 0);

}  // namespace choreo

#endif  // CHOREO_DETECTION_HPP
