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

#include "choreo/report.hpp"

#include "choreo/bargaining.hpp"
#include "choreo/core.hpp"
#include "choreo/detection.hpp"
#include "choreo/values.hpp"
#include "choreo/vcg.hpp"
#include "json.hpp"

namespace choreo {
namespace {

using Json = nlohmann::ordered_json;

Json number(const Rational& r) {
  return Json{{"exact", to_exact_string(r)}, {"decimal", to_decimal_string(r)}};
}

Json number(const ExtendedRational& r) {
  if (r.is_finite()) return number(r.value());
  return Json{{"exact", "inf"}, {"decimal", "inf"}};
}

Json names(const ChoreographyGraph& g, const std::vector<PlayerId>& players) {
  Json out = Json::array();
  for (PlayerId p : players) out.push_back(g.player_name(p));
  return out;
}

Json path_json(const ChoreographyGraph& g, const std::vector<VertexIndex>& path) {
  Json out = Json::array();
  for (VertexIndex v : path) out.push_back(g.vertex(v).id);
  return out;
}

Json payoffs(const ChoreographyGraph& g, const Imputation& x) {
  Json out = Json::object();
  for (std::uint32_t j = 0; j < x.size(); ++j)
    out[g.player_name(PlayerId{j})] = number(x.payoffs[j]);
  return out;
}

Json objection_json(const ChoreographyGraph& g, const ObjectionRecord& o) {
  Json y = Json::object();
  for (PlayerId k : o.coalition.members()) y[g.player_name(k)] = number(o.payoffs[k]);
  return Json{{"proposer", g.player_name(o.proposer)},
              {"target", g.player_name(o.target)},
              {"coalition", names(g, o.coalition.members())},
              {"y", std::move(y)}};
}

}  // namespace

std::string validation_summary(const GameInstance& instance) {
  const ChoreographyGraph& g = instance.graph;
  return std::to_string(g.num_services()) + " services, " +
         std::to_string(g.num_players()) + " players, Cost_SP = " +
         to_exact_string(shortest_path(g).cost);
}

std::string analyze_report(const GameInstance& instance, const AnalyzeOptions& opt) {
  const ChoreographyGraph& g = instance.graph;
  Json report = Json::object();

  std::optional<ValueTable> table;
  auto values = [&]() -> const ValueTable& {
    if (!table) table = enumerate_values(instance, opt.limits.max_players);
    return *table;
  };

  if (opt.values) {
    Json rows = Json::array();
    for (Coalition c : coalitions_in_canonical_order(g.grand_coalition())) {
      const CoalitionValue& cv = values().at(c);
      Json row{{"coalition", names(g, c.members())},
               {"value", number(cv.value)},
               {"reason", value_reason_name(cv.reason)}};
      row["path"] = cv.winning_path ? path_json(g, *cv.winning_path) : Json(nullptr);
      rows.push_back(std::move(row));
    }
    report["values"] = std::move(rows);
  }

  if (opt.core) {
    CoreReport cr = core_empty(values());
    report["core"] = Json{{"empty", cr.empty},
                          {"witness", cr.witness ? payoffs(g, *cr.witness) : Json(nullptr)}};
  }

  std::optional<StableSolution> stable;
  auto solution = [&]() -> const StableSolution& {
    if (!stable) stable = stable_imputation(instance);
    return *stable;
  };

  if (opt.imputation) {
    const StableSolution& s = solution();
    Json capped = Json::object();
    for (std::uint32_t j = 0; j < g.num_players(); ++j)
      capped[g.player_name(PlayerId{j})] = number(s.capped_avoiding[j]);
    report["imputation"] = Json{{"A", names(g, s.active_set)},
                                {"x", payoffs(g, s.imputation)},
                                {"exists", s.exists},
                                {"v_S", number(s.grand_value)},
                                {"capped_avoiding", std::move(capped)},
                                {"capped_sum", number(s.capped_sum)}};
  }

  if (opt.threshold) {
    ThresholdReport t = stability_threshold(instance);
    report["threshold"] =
        Json{{"B", names(g, t.critical_set)},
             {"threshold", number(t.threshold)},
             {"attained", t.attained},
             {"closed_form", t.closed_form ? number(*t.closed_form) : Json(nullptr)},
             {"Cost_SP", number(t.shortest_cost)}};
  }

  if (opt.vcg) {
    VcgReport v = vcg_payments(g);
    EquivalenceReport eq = check_equivalence(g);
    Json pay = Json::object();
    for (const auto& p : v.payments) pay[g.vertex(p.vertex).id] = number(p.payment);
    report["vcg"] = Json{{"path", path_json(g, v.chosen_path)},
                         {"payments", std::move(pay)},
                         {"total", number(v.total_payment)},
                         {"minimal_stable_price", number(eq.minimal_stable_price)},
                         {"equal", eq.equal}};
  }

  if (opt.detect) {
    DetectionReport d = detect(instance, opt.tolerance);
    Json players = Json::object();
    for (const auto& p : d.per_player) {
      players[g.player_name(p.player)] = Json{{"active", p.active},
                                              {"margin", number(p.margin)},
                                              {"expected", number(p.expected)},
                                              {"matches", p.matches}};
    }
    report["detect"] = Json{{"alliance", d.alliance},
                            {"tolerance", number(d.tolerance)},
                            {"players", std::move(players)}};
  }

  if (opt.oracle) {
    require_player_cap(g.num_players(), opt.limits.oracle_max_players, "bargaining oracle");
    const StableSolution& s = solution();
    const ValueTable& vt = values();
    Json justified = Json::array();
    for (std::uint32_t i = 0; i < g.num_players(); ++i) {
      for (std::uint32_t j = 0; j < g.num_players(); ++j) {
        if (i == j) continue;
        if (auto o = find_justified_objection(vt, s.imputation, PlayerId{i}, PlayerId{j}))
          justified.push_back(objection_json(g, *o));
      }
    }
    report["oracle"] = Json{{"x", payoffs(g, s.imputation)},
                            {"efficient", is_efficient(vt, s.imputation)},
                            {"individually_rational", is_individually_rational(vt, s.imputation)},
                            {"bargaining_member", verify_bargaining_membership(vt, s.imputation)},
                            {"justified_objections", std::move(justified)}};
  }

  return report.dump(2) + "\n";
}

}  // namespace choreo
