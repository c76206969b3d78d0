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
#include "doctest.h"
#include "fixtures.hpp"

using namespace choreo;

namespace {

const std::map<std::string, long> kAlliance{
    {"alpha", 10}, {"lambda", 5}, {"delta", 10}, {"beta", 17}, {"gamma", 20}};
const std::map<std::string, long> kTruthful{
    {"alpha", 2}, {"lambda", 5}, {"delta", 8}, {"beta", 15}, {"gamma", 4}};

ErrorCode error_of(const GameInstance& g) {
  try {
    detect(g, 0);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_SUITE("detection") {
  TEST_CASE("margins are announced price minus cost per player") {
    GameInstance g = fixtures::fig2_with_prices(kAlliance);
    CHECK(player_margin(g, g.player("Lambda")) == 8);
    CHECK(player_margin(g, g.player("delta")) == 2);
    CHECK(player_margin(g, g.player("beta")) == 2);
    CHECK(player_margin(g, g.player("gamma")) == 16);
    GameInstance t = fixtures::fig2_with_prices(kTruthful);
    for (std::uint32_t j = 0; j < 4; ++j) CHECK(player_margin(t, PlayerId{j}) == 0);
  }

  TEST_CASE("Reference example alliance") {
    DetectionReport r = detect(fixtures::fig2_with_prices(kAlliance), 0);
    CHECK(r.alliance);
    for (const auto& p : r.per_player) CHECK(p.matches);
  }

  TEST_CASE("truthful prices are not an alliance") {
    DetectionReport r = detect(fixtures::fig2_with_prices(kTruthful), 0);
    CHECK_FALSE(r.alliance);
  }

  TEST_CASE("one markup off") {
    auto prices = kAlliance;
    prices["alpha"] = 11;
    GameInstance g = fixtures::fig2_with_prices(prices);
    DetectionReport r = detect(g, 0);
    CHECK_FALSE(r.alliance);
    for (const auto& p : r.per_player) {
      if (p.player == g.player("Lambda")) {
        CHECK(p.margin == 9);
        CHECK(p.expected == 8);
        CHECK_FALSE(p.matches);
      } else {
        CHECK(p.matches);
      }
    }
    CHECK(detect(g, 1).alliance);
    CHECK_FALSE(detect(g, Rational(1, 2)).alliance);
  }

  TEST_CASE("only per-player margins matter") {
    auto moved = kAlliance;
    moved["alpha"] = 5;    // margin 3
    moved["lambda"] = 10;  // margin 5
    CHECK(detect(fixtures::fig2_with_prices(moved), 0).alliance);
  }

  TEST_CASE("preconditions") {
    CHECK(error_of(fixtures::fig2()) == ErrorCode::kMissingAnnouncedPrices);
    CHECK_THROWS_AS(player_margin(fixtures::fig2(), PlayerId{0}), Error);
    GameInstance low = fixtures::fig2_with_prices(kAlliance).with_budget(25);
    CHECK(error_of(low) == ErrorCode::kNoStableImputation);
  }
}
