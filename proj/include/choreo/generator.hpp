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

#ifndef CHOREO_GENERATOR_HPP
#define CHOREO_GENERATOR_HPP

#include <cstdint>
#include <optional>

#include "choreo/graph.hpp"
#include "choreo/rational.hpp"

namespace choreo {

inline constexpr std::size_t kMaxGeneratedVertices = 64;
inline constexpr long kMaxGeneratedCost = 1000000;

struct GeneratorParams {
  std::uint64_t seed = 1;
  std::size_t vertices = 6;
  std::size_t layers = 3;
  /// Number of owners to draw from; overrides `ratio` when set.
  std::optional<std::size_t> players;
  /// Owners per vertex, in (0, 1]; used when `players` is unset.
  double ratio = 0.5;
  /// Every service gets its own owner.
  bool per_vertex = false;
  long min_cost = 1;
  long max_cost = 20;
  /// Defaults to the total cost of all services.
  std::optional<Rational> budget;
  /// Probability of each extra edge between adjacent layers.
  double edge_probability = 0.3;
};

/// Seeded layered DAG: every service sits on some start-to-end path and
/// every path crosses each layer exactly once. Throws InvalidParameters.
GameInstance generate_instance(const GeneratorParams& params);

}  // namespace choreo

#endif  // CHOREO_GENERATOR_HPP
