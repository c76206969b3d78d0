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

#include "choreo/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "choreo/error.hpp"

namespace choreo {

std::vector<PlayerId> Coalition::members() const {
  std::vector<PlayerId> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(PlayerId{static_cast<std::uint32_t>(std::countr_zero(m))});
  }
  return out;
}

bool canonical_less(Coalition a, Coalition b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Same cardinality: compare ascending index sequences lexicographically.
  std::uint64_t x = a.mask(), y = b.mask();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

std::vector<Coalition> coalitions_in_canonical_order(Coalition universe) {
  std::vector<Coalition> out;
  const std::uint64_t u = universe.mask();
  // Enumerate submasks of u.
  std::uint64_t s = u;
  while (true) {
    out.emplace_back(s);
    if (s == 0) break;
    s = (s - 1) & u;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

ChoreographyGraph ChoreographyGraph::build(
    const std::vector<ServiceSpec>& services,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<Diagnostic> diags;
  ChoreographyGraph g;

  if (services.empty()) {
    diags.push_back({ErrorCode::kNoPathExists, "graph has no services"});
  }

  std::map<std::string, VertexIndex, std::less<>> index;
  std::map<std::string, std::uint32_t, std::less<>> player_index;
  for (const ServiceSpec& s : services) {
    if (s.id.empty()) {
      diags.push_back({ErrorCode::kMalformedDocument, "service with empty id"});
      continue;
    }
    if (s.id == kSourceId || s.id == kSinkId) {
      diags.push_back({ErrorCode::kMalformedDocument,
                       "service id '" + s.id + "' is reserved"});
      continue;
    }
    if (index.count(s.id) != 0) {
      diags.push_back({ErrorCode::kDuplicateVertexId,
                       "duplicate service id '" + s.id + "'"});
      continue;
    }
    if (s.cost < 0) {
      diags.push_back({ErrorCode::kNegativeCost,
                       "service '" + s.id + "' has negative cost " +
                           to_exact_string(s.cost)});
    }
    if (s.owner.empty()) {
      diags.push_back({ErrorCode::kMalformedDocument,
                       "service '" + s.id + "' has no owner"});
      continue;
    }
    auto [it, inserted] = player_index.try_emplace(
        s.owner, static_cast<std::uint32_t>(g.players_.size()));
    if (inserted) g.players_.push_back(s.owner);
    index.emplace(s.id, static_cast<VertexIndex>(g.vertices_.size()));
    g.vertices_.push_back({s.id, s.cost, PlayerId{it->second}});
  }
  if (g.players_.size() > kMaxPlayers) {
    diags.push_back({ErrorCode::kTooManyPlayers,
                     std::to_string(g.players_.size()) +
                         " players exceed the limit of " +
                         std::to_string(kMaxPlayers)});
  }

  const std::size_t n = g.vertices_.size();
  g.succ_.assign(n, {});
  g.pred_.assign(n, {});
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (const auto& [from, to] : edges) {
    auto f = index.find(from);
    auto t = index.find(to);
    bool ok = true;
    for (const auto* end : {&from, &to}) {
      if (*end == kSourceId || *end == kSinkId) {
        diags.push_back({ErrorCode::kMalformedDocument,
                         "edge endpoint '" + *end +
                             "' is implicit and must not be listed"});
        ok = false;
      } else if (index.find(*end) == index.end()) {
        diags.push_back({ErrorCode::kMalformedDocument,
                         "edge references unknown service '" + *end + "'"});
        ok = false;
      }
    }
    if (!ok) continue;
    if (f->second == t->second) {
      diags.push_back({ErrorCode::kCycleDetected,
                       "self-loop on service '" + from + "'"});
      continue;
    }
    if (!seen.insert({f->second, t->second}).second) continue;
    g.edges_.emplace_back(f->second, t->second);
    g.succ_[f->second].push_back(t->second);
    g.pred_[t->second].push_back(f->second);
  }

  // Kahn's algorithm; ties resolved by vertex index for determinism.
  std::vector<std::size_t> indeg(n);
  for (std::size_t v = 0; v < n; ++v) indeg[v] = g.pred_[v].size();
  std::priority_queue<VertexIndex, std::vector<VertexIndex>, std::greater<>> ready;
  for (VertexIndex v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    VertexIndex v = ready.top();
    ready.pop();
    g.topo_.push_back(v);
    for (VertexIndex w : g.succ_[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (g.topo_.size() != n) {
    std::string on_cycle;
    for (std::size_t v = 0; v < n; ++v) {
      if (indeg[v] != 0) {
        if (!on_cycle.empty()) on_cycle += ", ";
        on_cycle += g.vertices_[v].id;
      }
    }
    diags.push_back({ErrorCode::kCycleDetected,
                     "cycle among services: " + on_cycle});
  }

  if (!diags.empty()) throw Error(std::move(diags));

  std::vector<VertexIndex> by_id(n);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](VertexIndex a, VertexIndex b) {
    return g.vertices_[a].id < g.vertices_[b].id;
  });
  g.id_rank_.assign(n, 0);
  for (std::uint32_t r = 0; r < n; ++r) g.id_rank_[by_id[r]] = r;
  return g;
}

std::optional<VertexIndex> ChoreographyGraph::find_vertex(std::string_view id) const {
  for (VertexIndex v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].id == id) return v;
  return std::nullopt;
}

std::optional<PlayerId> ChoreographyGraph::find_player(std::string_view name) const {
  for (std::uint32_t i = 0; i < players_.size(); ++i)
    if (players_[i] == name) return PlayerId{i};
  return std::nullopt;
}

std::vector<VertexIndex> ChoreographyGraph::vertices_of(PlayerId p) const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].owner == p) out.push_back(v);
  return out;
}

ChoreographyGraph ChoreographyGraph::with_per_vertex_owners() const {
  std::vector<ServiceSpec> services;
  for (const ServiceVertex& v : vertices_) services.push_back({v.id, v.cost, v.id});
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : edges_) edges.emplace_back(vertices_[a].id, vertices_[b].id);
  return build(services, edges);
}

bool operator==(const ChoreographyGraph& a, const ChoreographyGraph& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.edges_ != b.edges_ ||
      a.players_ != b.players_)
    return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const auto& x = a.vertices_[i];
    const auto& y = b.vertices_[i];
    if (x.id != y.id || x.cost != y.cost || x.owner != y.owner) return false;
  }
  return true;
}

GameInstance GameInstance::create(ChoreographyGraph graph, Rational budget,
                                  std::optional<std::vector<Rational>> prices) {
  std::vector<Diagnostic> diags;
  if (budget < 0) {
    diags.push_back({ErrorCode::kNegativeCost,
                     "budget " + to_exact_string(budget) + " is negative"});
  }
  if (prices) {
    if (prices->size() != graph.num_services()) {
      diags.push_back({ErrorCode::kMalformedDocument,
                       "announced prices must cover every service"});
    } else {
      for (std::size_t v = 0; v < prices->size(); ++v) {
        if ((*prices)[v] < 0) {
          diags.push_back({ErrorCode::kNegativeCost,
                           "announced price of '" + graph.vertex(v).id +
                               "' is negative"});
        }
      }
    }
  }
  if (!diags.empty()) throw Error(std::move(diags));
  return GameInstance{std::move(graph), std::move(budget), std::move(prices)};
}

GameInstance GameInstance::with_budget(const Rational& p) const {
  GameInstance copy = *this;
  copy.budget = p;
  return copy;
}

PlayerId GameInstance::player(std::string_view name) const {
  if (auto p = graph.find_player(name)) return *p;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown player '" + std::string(name) + "'");
}

std::vector<std::string> path_ids(const ChoreographyGraph& g,
                                  const PathResult& result) {
  std::vector<std::string> out;
  if (result.path)
    for (VertexIndex v : *result.path) out.push_back(g.vertex(v).id);
  return out;
}

PathResult cheapest_path(const ChoreographyGraph& g, const PathQuery& q) {
  // Backward DP over (vertex, services still required, touch still owed).
  // From a fixed state every successor leads to a fixed next state, so
  // comparing two suffixes lexicographically reduces to comparing the
  // first vertex after the current one.
  const std::size_t n = g.num_services();
  const std::size_t need_max = std::max<std::size_t>(q.min_services, 1);
  const std::size_t states = need_max * 2;
  auto slot = [&](VertexIndex v, std::size_t need, bool owe) {
    return (static_cast<std::size_t>(v) * states) + (need - 1) * 2 + (owe ? 1 : 0);
  };
  auto cost_of = [&](VertexIndex v) -> const Rational& {
    return q.costs.empty() ? g.vertex(v).cost : q.costs[v];
  };
  auto allowed = [&](VertexIndex v) { return !q.allowed || q.allowed(v); };

  struct Entry {
    bool reachable = false;
    Rational cost;
    VertexIndex next = 0;  // meaningful when the vertex is not an exit
  };
  std::vector<Entry> best(n * states);

  auto topo = g.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const VertexIndex v = *it;
    if (!allowed(v)) continue;
    const bool touches = q.must_touch && q.must_touch(v);
    for (std::size_t need = 1; need <= need_max; ++need) {
      for (bool owe : {false, true}) {
        if (owe && !q.must_touch) continue;
        const std::size_t next_need = need > 1 ? need - 1 : 1;
        const bool next_owe = owe && !touches;
        Entry& e = best[slot(v, need, owe)];
        if (g.is_exit(v)) {
          if (need == 1 && !next_owe) {
            e.reachable = true;
            e.cost = cost_of(v);
          }
          continue;
        }
        for (VertexIndex w : g.successors(v)) {
          const Entry& f = best[slot(w, next_need, next_owe)];
          if (!f.reachable) continue;
          Rational c = cost_of(v) + f.cost;
          if (!e.reachable || c < e.cost ||
              (c == e.cost && g.id_rank(w) < g.id_rank(e.next))) {
            e.reachable = true;
            e.cost = std::move(c);
            e.next = w;
          }
        }
      }
    }
  }

  const bool owe0 = static_cast<bool>(q.must_touch);
  std::optional<VertexIndex> start;
  for (VertexIndex v = 0; v < n; ++v) {
    if (!g.is_entry(v) || !allowed(v)) continue;
    const Entry& e = best[slot(v, need_max, owe0)];
    if (!e.reachable) continue;
    if (!start) {
      start = v;
      continue;
    }
    const Entry& b = best[slot(*start, need_max, owe0)];
    if (e.cost < b.cost || (e.cost == b.cost && g.id_rank(v) < g.id_rank(*start)))
      start = v;
  }

  PathResult result;
  if (!start) return result;
  result.cost = best[slot(*start, need_max, owe0)].cost;
  std::vector<VertexIndex> path;
  VertexIndex v = *start;
  std::size_t need = need_max;
  bool owe = owe0;
  while (true) {
    path.push_back(v);
    if (g.is_exit(v)) break;
    const Entry& e = best[slot(v, need, owe)];
    owe = owe && !(q.must_touch && q.must_touch(v));
    need = need > 1 ? need - 1 : 1;
    v = e.next;
  }
  result.path = std::move(path);
  return result;
}

PathResult shortest_path(const ChoreographyGraph& g) {
  return cheapest_path(g, PathQuery{});
}

PathResult restricted_shortest_path(const ChoreographyGraph& g,
                                    Coalition coalition) {
  PathQuery q;
  q.allowed = [&](VertexIndex v) { return g.owned_by(v, coalition); };
  return cheapest_path(g, q);
}

PathResult avoiding_shortest_path(const ChoreographyGraph& g,
                                  Coalition excluded) {
  PathQuery q;
  q.allowed = [&](VertexIndex v) { return !g.owned_by(v, excluded); };
  return cheapest_path(g, q);
}

PathResult player_path(const ChoreographyGraph& g, PlayerId player) {
  PathQuery q;
  q.must_touch = [&](VertexIndex v) { return g.vertex(v).owner == player; };
  return cheapest_path(g, q);
}

ExtendedRational player_path_cost(const ChoreographyGraph& g, PlayerId player) {
  return player_path(g, player).cost;
}

}  // namespace choreo
