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

#include "choreo/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "choreo/error.hpp"
#include "choreo/graph.hpp"

namespace choreo {
namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return fallback;
  std::string_view s(raw);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return fallback;
  return value;
}

}  // namespace

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  limits.max_players = env_or("CHOREO_MAX_PLAYERS", limits.max_players);
  limits.oracle_max_players =
      env_or("CHOREO_ORACLE_MAX_PLAYERS", limits.oracle_max_players);
  return limits;
}

void require_player_cap(std::size_t players, std::size_t cap, const char* what) {
  if (players > cap || players > kMaxPlayers) {
    throw Error(ErrorCode::kTooManyPlayers,
                std::string(what) + ": " + std::to_string(players) +
                    " players exceed the cap of " + std::to_string(cap));
  }
}

}  // namespace choreo
