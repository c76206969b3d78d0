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

#ifndef CHOREO_REPORT_HPP
#define CHOREO_REPORT_HPP

#include <string>

#include "choreo/graph.hpp"
#include "choreo/limits.hpp"
#include "choreo/rational.hpp"

namespace choreo {

struct AnalyzeOptions {
  bool values = false;
  bool core = false;
  bool imputation = false;
  bool threshold = false;
  bool vcg = false;
  bool detect = false;
  Rational tolerance;
  bool oracle = false;
  EnumerationLimits limits;
};

/// "5 services, 4 players, Cost_SP = 6".
std::string validation_summary(const GameInstance& instance);

/// JSON report with one section per requested analysis, in a fixed order.
/// Rationals appear as {"exact": "13/2", "decimal": "6.5"}. Errors from the
/// analyses propagate as choreo::Error.
std::string analyze_report(const GameInstance& instance, const AnalyzeOptions& options);

}  // namespace choreo

#endif  // CHOREO_REPORT_HPP
