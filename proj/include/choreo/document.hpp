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

#ifndef CHOREO_DOCUMENT_HPP
#define CHOREO_DOCUMENT_HPP

#include <string>
#include <string_view>

#include "choreo/graph.hpp"

namespace choreo {

/// Parses a JSON game document:
///
///   {"budget": "34",
///    "services": [{"id": "alpha", "cost": "2", "owner": "Lambda",
///                  "price": "10"}, ...],
///    "edges": [["alpha", "gamma"], ...]}
///
/// Numbers are strings ("12", "0.25", "7/3") or JSON integers. "price" is
/// optional but must be given for all services or none. Throws Error with
/// every diagnostic found.
GameInstance load_game(std::string_view json_text);

/// Reads and parses a file; unreadable files throw std::runtime_error.
GameInstance load_game_file(const std::string& path);

/// Canonical JSON form; load_game(emit_game(g)) == g.
std::string emit_game(const GameInstance& instance);

}  // namespace choreo

#endif  // CHOREO_DOCUMENT_HPP
