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

#include "choreo/bargaining.hpp"

#include <algorithm>
#include <set>

#include "choreo/error.hpp"
#include "choreo/lp.hpp"

namespace choreo {

std::vector<PlayerId> active_set(const GameInstance& instance) {
  std::vector<PlayerId> out;
  for (std::uint32_t j = 0; j < instance.num_players(); ++j) {
    if (player_path_cost(instance.graph, PlayerId{j}) < ExtendedRational(instance.budget))
      out.push_back(PlayerId{j});
  }
  return out;
}

Rational capped_avoiding_cost(const GameInstance& instance, PlayerId player) {
  ExtendedRational c = avoiding_shortest_path(instance.graph, Coalition{player}).cost;
  return c.is_finite() ? c.value() : instance.budget;
}

namespace {

// a * p + b
struct Affine {
  Rational slope;
  Rational intercept;
  Rational at(const Rational& p) const { return slope * p + intercept; }
};

struct PlayerCosts {
  std::vector<ExtendedRational> through;   // Cost^j
  std::vector<ExtendedRational> avoiding;  // Cost^{-j}
  ExtendedRational grand_internal;         // cheapest path of >= 2 services
  Rational shortest;
};

PlayerCosts player_costs(const ChoreographyGraph& g) {
  PlayerCosts pc;
  for (std::uint32_t j = 0; j < g.num_players(); ++j) {
    pc.through.push_back(player_path_cost(g, PlayerId{j}));
    pc.avoiding.push_back(avoiding_shortest_path(g, Coalition{PlayerId{j}}).cost);
  }
  PathQuery q;
  q.min_services = 2;
  pc.grand_internal = cheapest_path(g, q).cost;
  pc.shortest = shortest_path(g).cost.value();
  return pc;
}

// Feasible budgets of the affine system {f(p) >= 0} inside [lo, hi]
// (hi absent means unbounded). Returns nullopt when empty.
struct Interval {
  Rational lo;
  std::optional<Rational> hi;
};

std::optional<Interval> feasible_part(const std::vector<Affine>& fs, Interval range) {
  for (const Affine& f : fs) {
    if (f.slope == 0) {
      if (f.intercept < 0) return std::nullopt;
      continue;
    }
    Rational root = -f.intercept / f.slope;
    if (f.slope > 0) {
      range.lo = std::max(range.lo, root);
    } else if (!range.hi || root < *range.hi) {
      range.hi = root;
    }
  }
  if (range.hi && *range.hi < range.lo) return std::nullopt;
  return range;
}

}  // namespace

ThresholdReport stability_threshold(const GameInstance& instance) {
  const ChoreographyGraph& g = instance.graph;
  const PlayerCosts pc = player_costs(g);
  const std::size_t n = g.num_players();
  ThresholdReport report;
  report.shortest_cost = pc.shortest;

  const ExtendedRational sp(pc.shortest);
  bool all_finite = true;
  Rational sum;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (pc.through[j] == sp && pc.avoiding[j] > sp) {
      report.critical_set.push_back(PlayerId{j});
      if (pc.avoiding[j].is_finite()) {
        sum += pc.avoiding[j].value();
      } else {
        all_finite = false;
      }
    }
  }
  if (all_finite) {
    report.closed_form =
        sum - Rational(static_cast<long>(report.critical_set.size()) - 1) * pc.shortest;
  }

  // Existence is decided by affine conditions on p inside each segment
  // (b_k, b_k+1] between consecutive breakpoints, where A and the v(S)
  // formula are fixed. At p = Cost_SP the active set is empty and x = 0
  // is stable. Walk the segments from +inf downwards while the whole tail
  // stays feasible.
  std::set<Rational> cuts;
  for (const auto& c : pc.through)
    if (c.is_finite()) cuts.insert(c.value());
  if (pc.grand_internal.is_finite()) cuts.insert(pc.grand_internal.value());
  std::vector<Rational> points(cuts.begin(), cuts.end());  // points[0] = Cost_SP

  for (std::size_t k = points.size(); k-- > 0;) {
    const Rational& lo = points[k];
    std::optional<Rational> hi;
    if (k + 1 < points.size()) hi = points[k + 1];

    std::vector<std::uint32_t> active;
    for (std::uint32_t j = 0; j < n; ++j)
      if (pc.through[j] <= ExtendedRational(lo)) active.push_back(j);
    const Rational size(static_cast<long>(active.size()));

    Affine grand{0, 0};
    if (pc.grand_internal.is_finite() && pc.grand_internal.value() <= lo)
      grand = {1, -pc.grand_internal.value()};
    std::vector<Affine> capped(n);
    Affine mean{0, 0};
    for (std::uint32_t j : active) {
      capped[j] = pc.avoiding[j].is_finite() ? Affine{0, pc.avoiding[j].value()}
                                             : Affine{1, 0};
      mean.slope += capped[j].slope / size;
      mean.intercept += capped[j].intercept / size;
    }
    std::vector<Affine> conditions;
    for (std::uint32_t j : active) {
      conditions.push_back({grand.slope / size + capped[j].slope - mean.slope,
                            grand.intercept / size + capped[j].intercept - mean.intercept});
    }

    auto part = feasible_part(conditions, Interval{lo, hi});
    const bool reaches_top =
        part && (hi ? part->hi && *part->hi == *hi : !part->hi.has_value());
    if (!reaches_top) {
      // Infeasible at the segment's top: the tail is open at hi.
      if (hi) {
        report.threshold = *hi;
        report.attained = false;
      }
      return report;
    }
    report.threshold = part->lo;
    if (part->lo > lo) return report;
  }
  return report;
}

StableSolution stable_imputation(const GameInstance& instance) {
  StableSolution s;
  if (shortest_path(instance.graph).cost > ExtendedRational(instance.budget)) {
    throw Error(ErrorCode::kNoAffordablePath,
                "no path fits the budget " + to_exact_string(instance.budget));
  }
  s.active_set = active_set(instance);
  const std::size_t n = instance.num_players();
  s.grand_value = grand_coalition_value(instance);
  for (std::uint32_t j = 0; j < n; ++j)
    s.capped_avoiding.push_back(capped_avoiding_cost(instance, PlayerId{j}));
  for (PlayerId j : s.active_set) s.capped_sum += s.capped_avoiding[j.index];

  const Rational size(static_cast<long>(s.active_set.size()));
  s.imputation.payoffs.assign(n, Rational(0));
  s.exists = true;
  for (PlayerId j : s.active_set) {
    Rational x = s.grand_value / size + s.capped_avoiding[j.index] - s.capped_sum / size;
    if (x < 0) s.exists = false;
    s.imputation[j] = std::move(x);
  }
  s.threshold = stability_threshold(instance);
  return s;
}

std::optional<ObjectionRecord> find_objection(const ValueTable& values,
                                              const Imputation& x, PlayerId i,
                                              PlayerId j) {
  for (Coalition o : coalitions_in_canonical_order(values.grand_coalition())) {
    if (!o.contains(i) || o.contains(j)) continue;
    const Rational surplus = values.value(o) - x.total(o);
    if (surplus <= 0) continue;
    ObjectionRecord rec{i, j, o, x};
    rec.payoffs[i] += surplus;
    return rec;
  }
  return std::nullopt;
}

bool counters_via(const ValueTable& values, const Imputation& x,
                  const ObjectionRecord& objection, Coalition q) {
  Rational floor;
  for (PlayerId k : q.members()) {
    floor += objection.coalition.contains(k) ? objection.payoffs[k] : x[k];
  }
  return values.value(q) >= floor;
}

bool has_counter_objection(const ValueTable& values, const Imputation& x,
                           const ObjectionRecord& objection) {
  for (Coalition q : coalitions_in_canonical_order(values.grand_coalition())) {
    if (!q.contains(objection.target) || q.contains(objection.proposer)) continue;
    if (counters_via(values, x, objection, q)) return true;
  }
  return false;
}

std::optional<ObjectionRecord> find_justified_objection(const ValueTable& values,
                                                        const Imputation& x,
                                                        PlayerId i, PlayerId j) {
  const auto all = coalitions_in_canonical_order(values.grand_coalition());

  // Coalitions that could counter: contain j, exclude i, weakly profitable.
  std::vector<std::pair<Coalition, Rational>> rivals;
  for (Coalition q : all) {
    if (!q.contains(j) || q.contains(i)) continue;
    Rational excess = values.value(q) - x.total(q);
    if (excess >= 0) rivals.emplace_back(q, std::move(excess));
  }

  for (Coalition o : all) {
    if (!o.contains(i) || o.contains(j)) continue;
    const Rational surplus = values.value(o) - x.total(o);
    if (surplus <= 0) continue;

    // A rival disjoint from O counters whatever y is.
    bool hopeless = false;
    for (const auto& [q, e] : rivals)
      if ((q & o).empty()) hopeless = true;
    if (hopeless) continue;

    // Smallest total raise of O's other members that beats every rival
    // (weakly); i's raise never helps. Strictness comes from spreading
    // the leftover.
    const std::vector<PlayerId> others = o.without(i).members();
    std::vector<Rational> raise(others.size());
    Rational needed;
    if (!others.empty() && !rivals.empty()) {
      LinearProgram lp;
      lp.num_vars = others.size();
      lp.objective.assign(others.size(), Rational(1));
      for (const auto& [q, e] : rivals) {
        LinearConstraint row;
        row.coeffs.assign(others.size(), Rational(0));
        for (std::size_t k = 0; k < others.size(); ++k)
          if (q.contains(others[k])) row.coeffs[k] = 1;
        row.relation = Relation::kGreaterEqual;
        row.rhs = e;
        lp.rows.push_back(std::move(row));
      }
      LpResult r = solve_lp(lp);
      raise = std::move(r.x);
      needed = r.objective;
    }
    if (needed >= surplus) continue;

    const Rational spare = surplus - needed;
    ObjectionRecord rec{i, j, o, x};
    if (others.empty()) {
      rec.payoffs[i] += spare;
    } else {
      const Rational share = spare / (2 * static_cast<long>(others.size()));
      for (std::size_t k = 0; k < others.size(); ++k)
        rec.payoffs[others[k]] += raise[k] + share;
      rec.payoffs[i] += spare / 2;
    }
    return rec;
  }
  return std::nullopt;
}

bool verify_bargaining_membership(const ValueTable& values, const Imputation& x) {
  if (!is_efficient(values, x) || !is_individually_rational(values, x)) return false;
  const std::size_t n = values.num_players();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (find_justified_objection(values, x, PlayerId{i}, PlayerId{j})) return false;
    }
  }
  return true;
}

bool verify_bargaining_membership(const GameInstance& instance, const Imputation& x,
                                  std::size_t max_players) {
  require_player_cap(instance.num_players(), max_players, "bargaining oracle");
  return verify_bargaining_membership(enumerate_values(instance, max_players), x);
}

Rational pairwise_counter_bound(const GameInstance& instance, PlayerId i, PlayerId j) {
  const ChoreographyGraph& g = instance.graph;
  return min_with(instance.budget, avoiding_shortest_path(g, Coalition{j}).cost) -
         min_with(instance.budget, avoiding_shortest_path(g, Coalition{i}).cost);
}

bool pairwise_condition_applies(const GameInstance& instance, PlayerId i, PlayerId j) {
  if (i == j) return false;
  const ChoreographyGraph& g = instance.graph;
  const ExtendedRational p(instance.budget);
  for (PlayerId k : {i, j}) {
    if (!(player_path_cost(g, k) < p)) return false;
    if (restricted_shortest_path(g, Coalition{k}).found()) return false;
    PathQuery q;
    q.allowed = [&](VertexIndex v) { return g.vertex(v).owner != k; };
    q.min_services = 2;
    if (cheapest_path(g, q).cost != avoiding_shortest_path(g, Coalition{k}).cost)
      return false;
  }
  return true;
}

}  // namespace choreo
