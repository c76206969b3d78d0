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

#ifndef CHOREO_LP_HPP
#define CHOREO_LP_HPP

#include <cstddef>
#include <vector>

#include "choreo/rational.hpp"

namespace choreo {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coeffs;  // one per variable
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

/// minimize objective . x  subject to rows, x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;  // a basic optimal solution when kOptimal
  Rational objective;
};

/// Exact two-phase primal simplex with Bland's rule (never cycles).
LpResult solve_lp(const LinearProgram& lp);

}  // namespace choreo

#endif  // CHOREO_LP_HPP
