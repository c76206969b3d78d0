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

#include "choreo/core.hpp"

#include "choreo/lp.hpp"

namespace choreo {

Rational Imputation::total() const {
  Rational sum;
  for (const auto& v : payoffs) sum += v;
  return sum;
}

Rational Imputation::total(Coalition c) const {
  Rational sum;
  for (PlayerId p : c.members()) sum += payoffs[p.index];
  return sum;
}

bool is_efficient(const ValueTable& values, const Imputation& x) {
  return x.size() == values.num_players() &&
         x.total() == values.value(values.grand_coalition());
}

bool is_individually_rational(const ValueTable& values, const Imputation& x) {
  for (std::uint32_t i = 0; i < x.size(); ++i) {
    if (x.payoffs[i] < values.value(Coalition{PlayerId{i}})) return false;
  }
  return true;
}

CoreReport in_core(const ValueTable& values, const Imputation& x) {
  CoreReport report;
  const Coalition grand = values.grand_coalition();
  if (!is_efficient(values, x)) {
    report.efficient = false;
    report.violated_constraint = grand;
    return report;
  }
  for (Coalition c : coalitions_in_canonical_order(grand)) {
    if (x.total(c) < values.value(c)) {
      report.violated_constraint = c;
      return report;
    }
  }
  report.member = true;
  return report;
}

CoreReport in_core(const GameInstance& instance, const Imputation& x,
                   std::size_t max_players) {
  return in_core(enumerate_values(instance, max_players), x);
}

namespace {

LinearConstraint coalition_row(std::size_t n, Coalition c, Relation rel,
                               const Rational& rhs) {
  LinearConstraint row;
  row.coeffs.assign(n, Rational(0));
  for (PlayerId p : c.members()) row.coeffs[p.index] = 1;
  row.relation = rel;
  row.rhs = rhs;
  return row;
}

}  // namespace

CoreReport core_empty(const ValueTable& values) {
  const std::size_t n = values.num_players();
  const Coalition grand = values.grand_coalition();

  std::vector<Coalition> demanding;
  for (Coalition c : coalitions_in_canonical_order(grand)) {
    if (c != grand && values.value(c) > 0) demanding.push_back(c);
  }

  LinearProgram lp;
  lp.num_vars = n;
  lp.rows.push_back(coalition_row(n, grand, Relation::kEqual, values.value(grand)));
  std::vector<bool> added(demanding.size(), false);

  CoreReport report;
  // Lexicographic minimization, one coordinate at a time; coalition
  // constraints are added lazily as they are violated.
  std::vector<Rational> point;
  for (std::size_t k = 0; k < n; ++k) {
    lp.objective.assign(n, Rational(0));
    lp.objective[k] = 1;
    while (true) {
      LpResult r = solve_lp(lp);
      if (r.status != LpStatus::kOptimal) {
        report.empty = true;
        return report;
      }
      bool cut = false;
      for (std::size_t i = 0; i < demanding.size(); ++i) {
        if (added[i]) continue;
        Rational have;
        for (PlayerId p : demanding[i].members()) have += r.x[p.index];
        if (have < values.value(demanding[i])) {
          lp.rows.push_back(coalition_row(n, demanding[i], Relation::kGreaterEqual,
                                          values.value(demanding[i])));
          added[i] = true;
          cut = true;
        }
      }
      if (!cut) {
        point = std::move(r.x);
        break;
      }
    }
    LinearConstraint fix;
    fix.coeffs.assign(n, Rational(0));
    fix.coeffs[k] = 1;
    fix.relation = Relation::kEqual;
    fix.rhs = point[k];
    lp.rows.push_back(std::move(fix));
  }
  if (n == 0) {
    report.empty = values.value(grand) != 0;
    if (!report.empty) report.witness = Imputation{};
    return report;
  }
  report.witness = Imputation{std::move(point)};
  return report;
}

CoreReport core_empty(const GameInstance& instance, std::size_t max_players) {
  return core_empty(enumerate_values(instance, max_players));
}

}  // namespace choreo
