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

#ifndef CHOREO_GRAPH_HPP
#define CHOREO_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "choreo/rational.hpp"

namespace choreo {

/// Index of a service provider in a graph's player list. Players are
/// numbered in order of first appearance as a service owner.
struct PlayerId {
  std::uint32_t index = 0;
  friend auto operator<=>(const PlayerId&, const PlayerId&) = default;
};

using VertexIndex = std::uint32_t;

/// Coalitions are bit sets over player indices.
inline constexpr std::size_t kMaxPlayers = 64;

/// Ids reserved for the synthetic start and end vertices.
inline constexpr std::string_view kSourceId = "source";
inline constexpr std::string_view kSinkId = "sink";

class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}
  Coalition(std::initializer_list<PlayerId> players) {
    for (PlayerId p : players) mask_ |= bit(p);
  }

  static constexpr Coalition all(std::size_t num_players) {
    return Coalition(num_players >= 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << num_players) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return std::popcount(mask_); }
  constexpr bool contains(PlayerId p) const { return (mask_ & bit(p)) != 0; }
  constexpr bool contains(Coalition other) const {
    return (other.mask_ & ~mask_) == 0;
  }
  constexpr Coalition with(PlayerId p) const { return Coalition(mask_ | bit(p)); }
  constexpr Coalition without(PlayerId p) const {
    return Coalition(mask_ & ~bit(p));
  }
  constexpr Coalition operator|(Coalition o) const { return Coalition(mask_ | o.mask_); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(mask_ & o.mask_); }
  constexpr Coalition minus(Coalition o) const { return Coalition(mask_ & ~o.mask_); }

  std::vector<PlayerId> members() const;

  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  static constexpr std::uint64_t bit(PlayerId p) {
    return std::uint64_t{1} << p.index;
  }
  std::uint64_t mask_ = 0;
};

/// Canonical coalition order: smaller cardinality first, then lexicographic
/// on the ascending player-index sequence.
bool canonical_less(Coalition a, Coalition b);

/// All subsets of `universe` in canonical order.
std::vector<Coalition> coalitions_in_canonical_order(Coalition universe);

struct ServiceVertex {
  std::string id;
  Rational cost;
  PlayerId owner;
};

/// Input form of one service, before validation.
struct ServiceSpec {
  std::string id;
  Rational cost;
  std::string owner;
};

/// Directed acyclic graph of priced services. The start and end vertices
/// are implicit: every service without predecessors is reachable from the
/// start and every service without successors leads to the end. Immutable
/// once built.
class ChoreographyGraph {
 public:
  /// Validates and builds. Throws Error carrying every diagnostic found:
  /// DuplicateVertexId, NegativeCost, MalformedDocument (missing owner,
  /// reserved or unknown id), CycleDetected, NoPathExists (no services),
  /// TooManyPlayers (more than kMaxPlayers owners).
  static ChoreographyGraph build(
      const std::vector<ServiceSpec>& services,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t num_services() const { return vertices_.size(); }
  std::size_t num_players() const { return players_.size(); }

  std::span<const ServiceVertex> vertices() const { return vertices_; }
  const ServiceVertex& vertex(VertexIndex v) const { return vertices_[v]; }
  std::span<const std::string> players() const { return players_; }
  const std::string& player_name(PlayerId p) const { return players_[p.index]; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<PlayerId> find_player(std::string_view name) const;

  std::span<const VertexIndex> successors(VertexIndex v) const { return succ_[v]; }
  std::span<const VertexIndex> predecessors(VertexIndex v) const { return pred_[v]; }
  /// Service edges in input order (duplicates removed).
  std::span<const std::pair<VertexIndex, VertexIndex>> edges() const { return edges_; }

  /// True when the augmentation adds an edge start -> v.
  bool is_entry(VertexIndex v) const { return pred_[v].empty(); }
  /// True when the augmentation adds an edge v -> end.
  bool is_exit(VertexIndex v) const { return succ_[v].empty(); }

  std::span<const VertexIndex> topological_order() const { return topo_; }
  /// Rank of the vertex id in sorted id order; drives lexicographic ties.
  std::uint32_t id_rank(VertexIndex v) const { return id_rank_[v]; }

  std::vector<VertexIndex> vertices_of(PlayerId p) const;
  bool owned_by(VertexIndex v, Coalition c) const {
    return c.contains(vertices_[v].owner);
  }
  Coalition grand_coalition() const { return Coalition::all(players_.size()); }

  /// Same vertices and edges, with every service owned by a player named
  /// after the service itself.
  ChoreographyGraph with_per_vertex_owners() const;

  friend bool operator==(const ChoreographyGraph& a, const ChoreographyGraph& b);

 private:
  ChoreographyGraph() = default;

  std::vector<ServiceVertex> vertices_;
  std::vector<std::string> players_;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges_;
  std::vector<std::vector<VertexIndex>> succ_;
  std::vector<std::vector<VertexIndex>> pred_;
  std::vector<VertexIndex> topo_;
  std::vector<std::uint32_t> id_rank_;
};

/// Graph plus the user's budget and, optionally, the announced prices.
struct GameInstance {
  ChoreographyGraph graph;
  Rational budget;
  std::optional<std::vector<Rational>> announced_prices;  // per vertex index

  /// Throws NegativeCost for a negative budget or price and
  /// MalformedDocument when the price vector does not cover every service.
  static GameInstance create(ChoreographyGraph graph, Rational budget,
                             std::optional<std::vector<Rational>> prices = {});

  GameInstance with_budget(const Rational& budget) const;

  std::size_t num_players() const { return graph.num_players(); }
  PlayerId player(std::string_view name) const;  // throws InvalidArgument

  friend bool operator==(const GameInstance&, const GameInstance&) = default;
};

struct PathResult {
  ExtendedRational cost = ExtendedRational::infinity();
  std::optional<std::vector<VertexIndex>> path;

  bool found() const { return path.has_value(); }
};

std::vector<std::string> path_ids(const ChoreographyGraph& g,
                                  const PathResult& result);

/// Generic cheapest start->end path query. Ties on cost are broken by the
/// lexicographically smallest vertex-id sequence.
struct PathQuery {
  /// Vertices the path may use; empty means all.
  std::function<bool(VertexIndex)> allowed;
  /// When set, the path must contain at least one such vertex.
  std::function<bool(VertexIndex)> must_touch;
  /// Minimum number of service vertices on the path.
  std::size_t min_services = 1;
  /// Replacement per-vertex costs; empty means the graph's costs.
  std::span<const Rational> costs;
};

PathResult cheapest_path(const ChoreographyGraph& g, const PathQuery& query);

/// Cost_SP: the cheapest path overall.
PathResult shortest_path(const ChoreographyGraph& g);
/// Cost^X: cheapest path using only vertices owned by `coalition`.
PathResult restricted_shortest_path(const ChoreographyGraph& g,
                                    Coalition coalition);
/// Cost^{-X}: cheapest path touching no vertex owned by `excluded`.
PathResult avoiding_shortest_path(const ChoreographyGraph& g,
                                  Coalition excluded);
/// Cost^j: cheapest path through at least one vertex owned by `player`.
PathResult player_path(const ChoreographyGraph& g, PlayerId player);
ExtendedRational player_path_cost(const ChoreographyGraph& g, PlayerId player);

}  // namespace choreo

#endif  // CHOREO_GRAPH_HPP
