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

#include "choreo/lp.hpp"

#include <optional>
#include <stdexcept>

namespace choreo {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<Rational>(cols)), b_(rows), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return b_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_[0].size(); }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& v : a_[r]) v /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < a_[i].size(); ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  /// Minimizes cost . x over columns with usable[c]. Returns false when
  /// unbounded.
  bool minimize(const std::vector<Rational>& cost, const std::vector<bool>& usable) {
    while (true) {
      // Reduced costs.
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < cols() && !enter; ++c) {
        if (!usable[c]) continue;
        Rational d = cost[c];
        for (std::size_t r = 0; r < rows(); ++r) {
          if (a_[r][c] != 0) d -= cost[basis_[r]] * a_[r][c];
        }
        if (d < 0) enter = c;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (a_[r][*enter] <= 0) continue;
        Rational ratio = b_[r] / a_[r][*enter];
        if (!leave || ratio < best ||
            (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  const std::size_t m = lp.rows.size();
  if (lp.objective.size() != n) throw std::invalid_argument("objective size");

  // Column layout: [structural n | slack/surplus | artificial].
  std::size_t slacks = 0;
  for (const auto& row : lp.rows) {
    if (row.coeffs.size() != n) throw std::invalid_argument("row size");
    if (row.relation != Relation::kEqual) ++slacks;
  }
  const std::size_t art0 = n + slacks;
  const std::size_t cols = art0 + m;
  Tableau t(m, cols);

  std::size_t slack = n;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = lp.rows[r];
    const bool flip = row.rhs < 0;
    Relation rel = row.relation;
    if (flip && rel != Relation::kEqual)
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = flip ? -row.coeffs[c] : row.coeffs[c];
    t.rhs(r) = flip ? -row.rhs : row.rhs;
    if (rel == Relation::kLessEqual) {
      t.at(r, slack++) = 1;
    } else if (rel == Relation::kGreaterEqual) {
      t.at(r, slack++) = -1;
    }
    t.at(r, art0 + r) = 1;
    t.basis(r) = art0 + r;
  }

  // Phase 1.
  std::vector<Rational> phase1(cols);
  for (std::size_t c = art0; c < cols; ++c) phase1[c] = 1;
  std::vector<bool> all(cols, true);
  t.minimize(phase1, all);

  LpResult result;
  Rational infeasibility;
  for (std::size_t r = 0; r < t.rows(); ++r)
    if (t.basis(r) >= art0) infeasibility += t.rhs(r);
  if (infeasibility > 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < t.rows();) {
    if (t.basis(r) < art0) {
      ++r;
      continue;
    }
    std::optional<std::size_t> c;
    for (std::size_t j = 0; j < art0 && !c; ++j)
      if (t.at(r, j) != 0) c = j;
    if (c) {
      t.pivot(r, *c);
      ++r;
    } else {
      t.drop_row(r);
    }
  }

  // Phase 2.
  std::vector<Rational> phase2(cols);
  for (std::size_t c = 0; c < n; ++c) phase2[c] = lp.objective[c];
  std::vector<bool> usable(cols, false);
  for (std::size_t c = 0; c < art0; ++c) usable[c] = true;
  if (!t.minimize(phase2, usable)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r)
    if (t.basis(r) < n) result.x[t.basis(r)] = t.rhs(r);
  for (std::size_t c = 0; c < n; ++c) result.objective += lp.objective[c] * result.x[c];
  return result;
}

}  // namespace choreo
