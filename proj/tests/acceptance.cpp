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

// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "choreo/bargaining.hpp"
#include "choreo/core.hpp"
#include "choreo/detection.hpp"
#include "choreo/document.hpp"
#include "choreo/error.hpp"
#include "choreo/generator.hpp"
#include "choreo/report.hpp"
#include "choreo/values.hpp"
#include "choreo/vcg.hpp"
#include "json.hpp"

using namespace choreo;
using Json = nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < limit_s, "took " + std::to_string(secs) + " s, limit " +
                               std::to_string(limit_s) + " s");
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " ("
            << std::fixed << std::setprecision(3) << secs << " s)";
  if (o.detail.tellp() > 0) std::cout << ": " << o.detail.str();
  std::cout << std::endl;
}

GameInstance fig2() { return load_game_file(std::string(CHOREO_DATA_DIR) + "/fig2.json"); }

Coalition named(const GameInstance& g, std::initializer_list<const char*> names) {
  Coalition c;
  for (const char* n : names) c = c.with(g.player(n));
  return c;
}

Imputation by_name(const GameInstance& g, const std::map<std::string, long>& x) {
  Imputation out;
  out.payoffs.assign(g.num_players(), Rational(0));
  for (const auto& [n, v] : x) out[g.player(n)] = v;
  return out;
}

std::string coalition_name(const GameInstance& g, Coalition c) {
  std::string s = "{";
  for (PlayerId p : c.members()) s += (s.size() > 1 ? "," : "") + g.graph.player_name(p);
  return s + "}";
}

Json analyze(const GameInstance& g, const std::function<void(AnalyzeOptions&)>& set) {
  AnalyzeOptions opt;
  set(opt);
  return Json::parse(analyze_report(g, opt));
}

bool exists_at(const GameInstance& g, const Rational& p) {
  try {
    return stable_imputation(g.with_budget(p)).exists;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoAffordablePath) return false;
    throw;
  }
}

bool avoidable(const ChoreographyGraph& g) {
  const PathResult sp = shortest_path(g);
  for (VertexIndex v : *sp.path) {
    PathQuery q;
    q.allowed = [v](VertexIndex w) { return w != v; };
    if (!cheapest_path(g, q).found()) return false;
  }
  return true;
}

GameInstance property_instance(std::uint64_t seed, bool per_vertex, std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  GeneratorParams p;
  p.seed = seed;
  p.vertices = 3 + rng() % (max_vertices - 2);
  p.layers = 2 + rng() % std::min<std::size_t>(3, p.vertices - 1);
  p.per_vertex = per_vertex;
  p.players = 2 + rng() % std::min<std::size_t>(4, p.vertices - 1);
  p.max_cost = 10;
  GameInstance g = generate_instance(p);
  // Half the budgets sit exactly on some player's through-path cost.
  Rational budget(static_cast<long>(5 + rng() % 40));
  if (rng() % 2 == 0) {
    auto c = player_path_cost(g.graph, PlayerId{static_cast<std::uint32_t>(
                                           rng() % g.num_players())});
    if (c.is_finite()) budget = c.value();
  }
  return g.with_budget(budget);
}

}  // namespace

int main() {
  criterion(1, "Reference example characteristic function reproduces the seven nonzero values", 1.0,
            [](Outcome& o) {
              GameInstance g = fig2();
              ValueTable t = enumerate_values(g);
              const std::vector<std::pair<Coalition, long>> expected{
                  {g.graph.grand_coalition(), 28},
                  {named(g, {"Lambda", "gamma", "delta"}), 28},
                  {named(g, {"Lambda", "gamma"}), 17},
                  {named(g, {"Lambda", "gamma", "beta"}), 28},
                  {named(g, {"gamma", "delta"}), 8},
                  {named(g, {"delta", "gamma", "beta"}), 28},
                  {named(g, {"Lambda", "beta", "delta"}), 14}};
              std::set<std::uint64_t> listed;
              for (const auto& [c, v] : expected) {
                listed.insert(c.mask());
                o.expect(t.value(c) == v, "v(" + coalition_name(g, c) + ") = " +
                                              to_exact_string(t.value(c)) + ", expected " +
                                              std::to_string(v));
              }
              for (std::uint64_t m = 0; m < 16; ++m) {
                if (listed.count(m)) continue;
                o.expect(t.value(Coalition(m)) == 0,
                         "v(" + coalition_name(g, Coalition(m)) + ") should be 0");
              }
            });

  criterion(2, "--core on reference example reports an empty core", 1.0, [](Outcome& o) {
    Json r = analyze(fig2(), [](AnalyzeOptions& a) { a.core = true; });
    o.expect(r["core"]["empty"] == true, "core reported non-empty");
    o.expect(r["core"]["witness"].is_null(), "witness present");
  });

  criterion(3, "--imputation on reference example returns (8, 2, 2, 16) over A = {Lambda, delta, beta, gamma}",
            1.0, [](Outcome& o) {
              Json r = analyze(fig2(), [](AnalyzeOptions& a) { a.imputation = true; });
              const Json& imp = r["imputation"];
              std::set<std::string> a(imp["A"].begin(), imp["A"].end());
              o.expect(a == std::set<std::string>{"Lambda", "delta", "beta", "gamma"}, "wrong A");
              const std::map<std::string, std::string> want{
                  {"Lambda", "8"}, {"delta", "2"}, {"beta", "2"}, {"gamma", "16"}};
              Rational sum;
              for (const auto& [n, v] : want) {
                const std::string got = imp["x"][n]["exact"];
                o.expect(got == v, "x_" + n + " = " + got);
                sum += *parse_rational(got);
              }
              o.expect(sum == 28, "sum " + to_exact_string(sum));
              o.expect(imp["exists"] == true, "exists = false");
            });

  criterion(4, "bargaining oracle accepts (8,2,2,16) and rejects >= 100 same-sum perturbations",
            10.0, [](Outcome& o) {
              GameInstance g = fig2();
              ValueTable t = enumerate_values(g);
              const Imputation x =
                  by_name(g, {{"Lambda", 8}, {"delta", 2}, {"beta", 2}, {"gamma", 16}});
              o.expect(verify_bargaining_membership(t, x), "(8,2,2,16) rejected");
              std::mt19937_64 rng(4);
              int tried = 0, rejected = 0;
              while (tried < 120) {
                Imputation y = x;
                const std::size_t from = rng() % 4, to = (from + 1 + rng() % 3) % 4;
                Rational shift(static_cast<long>(1 + rng() % 16), static_cast<long>(1 + rng() % 4));
                if (shift > y.payoffs[from]) shift = y.payoffs[from];
                if (shift == 0) continue;
                y.payoffs[from] -= shift;
                y.payoffs[to] += shift;
                ++tried;
                if (!verify_bargaining_membership(t, y)) ++rejected;
              }
              o.expect(rejected == tried, std::to_string(tried - rejected) +
                                              " perturbations accepted");
              o.expect(rejected >= 100, "only " + std::to_string(rejected) + " rejected");
            });

  criterion(5, "--threshold on reference example is 26 and the budget sweep flips to existence exactly at 26",
            5.0, [](Outcome& o) {
              GameInstance g = fig2();
              Json r = analyze(g, [](AnalyzeOptions& a) { a.threshold = true; });
              o.expect(r["threshold"]["threshold"]["exact"] == "26",
                       "threshold " + r["threshold"]["threshold"]["exact"].get<std::string>());
              std::set<std::string> b(r["threshold"]["B"].begin(), r["threshold"]["B"].end());
              o.expect(b == std::set<std::string>{"Lambda", "gamma"}, "wrong B");
              // Unit grid 6..34: the only false -> true transition is at 26
              // and existence holds from there on. (p = 6 = Cost_SP is the
              // zero game, where x = 0 is stable.)
              bool prev = exists_at(g, 6);
              for (long p = 7; p <= 34; ++p) {
                const bool now = exists_at(g, Rational(p));
                if (!prev && now) o.expect(p == 26, "flip at " + std::to_string(p));
                if (p >= 26) o.expect(now, "no stable imputation at " + std::to_string(p));
                prev = now;
              }
              for (Rational p : {Rational(25), Rational(51, 2), Rational(259, 10), Rational(2599, 100)})
                o.expect(!exists_at(g, p), "exists at " + to_exact_string(p));
              for (Rational p : {Rational(26), Rational(2601, 100), Rational(53, 2)})
                o.expect(exists_at(g, p), "missing at " + to_exact_string(p));
            });

  criterion(6, "VCG total equals the minimal stable price (reference example and 200 random DAGs)", 60.0,
            [](Outcome& o) {
              EquivalenceReport f = check_equivalence(fig2().graph);
              o.expect(f.vcg_total == 26, "reference example VCG total " + to_exact_string(f.vcg_total));
              o.expect(f.minimal_stable_price == ExtendedRational(26), "reference example minimal price " +
                                                                       to_exact_string(f.minimal_stable_price));
              int accepted = 0, equal = 0;
              for (std::uint64_t seed = 1; accepted < 200; ++seed) {
                GeneratorParams p;
                p.seed = seed;
                p.vertices = 4 + seed % 7;
                p.layers = 2 + seed % 3;
                p.per_vertex = true;
                p.min_cost = 0;
                p.max_cost = 20;
                p.edge_probability = 0.4;
                GameInstance g = generate_instance(p);
                if (!avoidable(g.graph)) continue;
                ++accepted;
                equal += check_equivalence(g.graph).equal;
              }
              o.expect(equal == accepted, std::to_string(equal) + "/" + std::to_string(accepted));
            });

  criterion(7, "property suites: cut invariance, zero pay when inactive, pairwise relation, counter bound", 120.0,
            [](Outcome& o) {
              // Cut invariance, 50 instances of at most 8 vertices.
              int cut_cases = 0, cut_bad = 0;
              for (std::uint64_t seed = 1; seed <= 50; ++seed) {
                GameInstance g = property_instance(seed, seed % 2 == 0, 8);
                const auto& G = g.graph;
                const Coalition S = G.grand_coalition();
                const ExtendedRational sp = shortest_path(G).cost;
                for (std::uint64_t m = 1; m <= S.mask(); ++m) {
                  const Coalition x(m);
                  // Cut: no path avoids X. Shortest path inside X.
                  if (avoiding_shortest_path(G, x).found()) continue;
                  if (restricted_shortest_path(G, x).cost != sp) continue;
                  const Rational vx = coalition_value(g, x).value;
                  for (PlayerId a : S.minus(x).members()) {
                    ++cut_cases;
                    cut_bad += coalition_value(g, x.with(a)).value != vx;
                  }
                }
              }
              o.expect(cut_cases > 0 && cut_bad == 0,
                       "cut invariance " + std::to_string(cut_bad) + "/" + std::to_string(cut_cases));

              // Zero pay for inactive players and the pairwise relation, 200 instances.
              int inactive_bad = 0, pair_bad = 0, existing = 0, boundary = 0;
              for (std::uint64_t seed = 1; seed <= 200; ++seed) {
                GameInstance g = property_instance(1000 + seed, seed % 3 == 0, 10);
                StableSolution s;
                try {
                  s = stable_imputation(g);
                } catch (const Error&) {
                  continue;
                }
                for (std::uint32_t j = 0; j < g.num_players(); ++j) {
                  const ExtendedRational c = player_path_cost(g.graph, PlayerId{j});
                  if (c >= ExtendedRational(g.budget)) {
                    boundary += c == ExtendedRational(g.budget);
                    inactive_bad += s.imputation.payoffs[j] != 0;
                  }
                }
                if (!s.exists) continue;
                ++existing;
                for (PlayerId i : s.active_set)
                  for (PlayerId j : s.active_set)
                    pair_bad += s.imputation[i] - s.imputation[j] !=
                                s.capped_avoiding[i.index] - s.capped_avoiding[j.index];
              }
              o.expect(inactive_bad == 0, "inactive players paid " + std::to_string(inactive_bad) + " times");
              o.expect(boundary > 0, "no Cost^j = p case exercised");
              o.expect(existing > 0 && pair_bad == 0,
                       "pairwise relation violated " + std::to_string(pair_bad) + " times");

              // Pairwise counter bound, 50 instances: whenever the pairwise condition holds,
              // an objection via S\{j} is countered via S\{i}.
              std::mt19937_64 rng(5);
              int eq5_cases = 0, eq5_bad = 0;
              for (std::uint64_t seed = 1; seed <= 50; ++seed) {
                GameInstance g = property_instance(5000 + seed, true, 8);
                ValueTable t = enumerate_values(g);
                const Coalition S = t.grand_coalition();
                const Rational vs = t.value(S);
                if (vs == 0) continue;
                for (int draw = 0; draw < 8; ++draw) {
                  Imputation x;
                  x.payoffs.assign(g.num_players(), Rational(0));
                  for (int k = 0; k < 8; ++k) x.payoffs[rng() % g.num_players()] += vs / 8;
                  for (std::uint32_t a = 0; a < g.num_players(); ++a) {
                    for (std::uint32_t b = 0; b < g.num_players(); ++b) {
                      const PlayerId i{a}, j{b};
                      if (!pairwise_condition_applies(g, i, j)) continue;
                      if (x[j] - x[i] > pairwise_counter_bound(g, i, j)) continue;
                      const Coalition obj = S.without(j);
                      const Rational surplus = t.value(obj) - x.total(obj);
                      if (surplus <= 0) continue;
                      ObjectionRecord rec{i, j, obj, x};
                      rec.payoffs[i] += surplus;
                      ++eq5_cases;
                      eq5_bad += !counters_via(t, x, rec, S.without(i));
                    }
                  }
                }
              }
              o.expect(eq5_cases > 0 && eq5_bad == 0,
                       "pairwise counter bound " + std::to_string(eq5_bad) + "/" + std::to_string(eq5_cases));
            });

  criterion(8, "alliance detection on reference example (alliance prices vs. truthful prices)", 1.0,
            [](Outcome& o) {
              GameInstance g = fig2();
              auto priced = [&](std::map<std::string, long> d) {
                std::vector<Rational> prices;
                for (const auto& v : g.graph.vertices()) prices.emplace_back(d.at(v.id));
                return GameInstance::create(g.graph, g.budget, prices);
              };
              o.expect(detect(priced({{"alpha", 10}, {"lambda", 5}, {"delta", 10},
                                      {"beta", 17}, {"gamma", 20}}), 0).alliance,
                       "alliance prices not detected");
              o.expect(!detect(priced({{"alpha", 2}, {"lambda", 5}, {"delta", 8},
                                       {"beta", 15}, {"gamma", 4}}), 0).alliance,
                       "truthful prices flagged");
            });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
