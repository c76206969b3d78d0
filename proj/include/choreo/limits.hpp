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

#ifndef CHOREO_LIMITS_HPP
#define CHOREO_LIMITS_HPP

#include <cstddef>

namespace choreo {

/// Player-count caps for the exponential analyses.
struct EnumerationLimits {
  /// Coalition tables and the exact core LP.
  std::size_t max_players = 16;
  /// Objection / counter-objection double enumeration.
  std::size_t oracle_max_players = 8;

  /// Reads CHOREO_MAX_PLAYERS and CHOREO_ORACLE_MAX_PLAYERS, falling back
  /// to the defaults when unset or unparsable.
  static EnumerationLimits from_environment();
};

/// Throws TooManyPlayers when `players` exceeds `cap`.
void require_player_cap(std::size_t players, std::size_t cap, const char* what);

}  // namespace choreo

#endif  // CHOREO_LIMITS_HPP
