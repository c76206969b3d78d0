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

#include "choreo/detection.hpp"

#include "choreo/error.hpp"

namespace choreo {
namespace {

void require_prices(const GameInstance& instance) {
  if (!instance.announced_prices) {
    throw Error(ErrorCode::kMissingAnnouncedPrices,
                "detection needs an announced price for every service");
  }
}

}  // namespace

Rational player_margin(const GameInstance& instance, PlayerId player) {
  require_prices(instance);
  Rational margin;
  for (VertexIndex v : instance.graph.vertices_of(player)) {
    margin += (*instance.announced_prices)[v] - instance.graph.vertex(v).cost;
  }
  return margin;
}

DetectionReport detect(const GameInstance& instance, const Rational& tolerance) {
  require_prices(instance);
  if (tolerance < 0) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be non-negative");
  }
  DetectionReport report;
  report.tolerance = tolerance;
  report.solution = stable_imputation(instance);
  if (!report.solution.exists) {
    throw Error(ErrorCode::kNoStableImputation,
                "no stable imputation at budget " + to_exact_string(instance.budget));
  }
  std::vector<bool> active(instance.num_players(), false);
  for (PlayerId p : report.solution.active_set) active[p.index] = true;

  report.alliance = true;
  for (std::uint32_t j = 0; j < instance.num_players(); ++j) {
    PlayerDetection d;
    d.player = PlayerId{j};
    d.active = active[j];
    d.margin = player_margin(instance, d.player);
    d.expected = report.solution.imputation[d.player];
    d.matches = Rational(abs(d.margin - d.expected)) <= tolerance;
    report.alliance = report.alliance && d.matches;
    report.per_player.push_back(std::move(d));
  }
  return report;
}

}  // namespace choreo
