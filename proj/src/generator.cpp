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

#include "choreo/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "choreo/error.hpp"

namespace choreo {
namespace {

// Uniform integer in [0, n) by rejection, identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

bool bernoulli(std::mt19937_64& rng, double probability) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < probability;
}

std::string padded(char prefix, std::size_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 2) digits.insert(0, 1, '0');
  return prefix + digits;
}

void check(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidParameters, message);
}

}  // namespace

GameInstance generate_instance(const GeneratorParams& p) {
  check(p.vertices >= 1 && p.vertices <= kMaxGeneratedVertices,
        "vertices must be in 1.." + std::to_string(kMaxGeneratedVertices));
  check(p.layers >= 1 && p.layers <= p.vertices, "layers must be in 1..vertices");
  check(p.min_cost >= 0 && p.min_cost <= p.max_cost && p.max_cost <= kMaxGeneratedCost,
        "costs must satisfy 0 <= min <= max <= " + std::to_string(kMaxGeneratedCost));
  check(p.edge_probability >= 0 && p.edge_probability <= 1,
        "edge probability must be in [0, 1]");
  if (p.budget) check(*p.budget >= 0, "budget must be non-negative");
  std::size_t owners = p.vertices;
  if (!p.per_vertex) {
    if (p.players) {
      owners = *p.players;
    } else {
      check(p.ratio > 0 && p.ratio <= 1, "ratio must be in (0, 1]");
      owners = static_cast<std::size_t>(
          std::max(1.0, std::round(p.ratio * static_cast<double>(p.vertices))));
    }
    check(owners >= 1 && owners <= std::min(p.vertices, kMaxPlayers),
          "players must be in 1..min(vertices, " + std::to_string(kMaxPlayers) + ")");
  }

  std::mt19937_64 rng(p.seed);

  // Layer sizes: one vertex each, the rest spread uniformly.
  std::vector<std::size_t> layer_of(p.vertices);
  for (std::size_t v = 0; v < p.vertices; ++v) {
    layer_of[v] = v < p.layers ? v : uniform_below(rng, p.layers);
  }
  std::sort(layer_of.begin(), layer_of.end());
  std::vector<std::vector<std::size_t>> layers(p.layers);
  for (std::size_t v = 0; v < p.vertices; ++v) layers[layer_of[v]].push_back(v);

  std::vector<ServiceSpec> services;
  Rational total;
  for (std::size_t v = 0; v < p.vertices; ++v) {
    const long span = p.max_cost - p.min_cost + 1;
    Rational cost(p.min_cost + static_cast<long>(uniform_below(rng, span)));
    std::string id = padded('v', v);
    std::string owner = p.per_vertex ? id : padded('p', uniform_below(rng, owners));
    total += cost;
    services.push_back({std::move(id), std::move(cost), std::move(owner)});
  }

  std::vector<std::vector<bool>> adj(p.vertices, std::vector<bool>(p.vertices, false));
  for (std::size_t k = 0; k + 1 < p.layers; ++k) {
    const auto& from = layers[k];
    const auto& to = layers[k + 1];
    for (std::size_t w : to) adj[from[uniform_below(rng, from.size())]][w] = true;
    for (std::size_t u : from) {
      bool has = false;
      for (std::size_t w : to) has = has || adj[u][w];
      if (!has) adj[u][to[uniform_below(rng, to.size())]] = true;
    }
    for (std::size_t u : from)
      for (std::size_t w : to)
        if (!adj[u][w] && bernoulli(rng, p.edge_probability)) adj[u][w] = true;
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t u = 0; u < p.vertices; ++u)
    for (std::size_t w = 0; w < p.vertices; ++w)
      if (adj[u][w]) edges.emplace_back(services[u].id, services[w].id);

  return GameInstance::create(ChoreographyGraph::build(services, edges),
                              p.budget.value_or(total));
}

}  // namespace choreo
