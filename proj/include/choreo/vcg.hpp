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

#ifndef CHOREO_VCG_HPP
#define CHOREO_VCG_HPP

#include <vector>

#include "choreo/graph.hpp"
#include "choreo/rational.hpp"

namespace choreo {

struct VcgPayment {
  VertexIndex vertex;
  Rational avoiding_cost;    // cheapest path without the vertex
  Rational zero_cost_path;   // cheapest path with the vertex priced at 0
  Rational payment;
};

struct VcgReport {
  std::vector<VertexIndex> chosen_path;
  std::vector<VcgPayment> payments;  // on-path vertices, in path order
  Rational total_payment;

  /// 0 for vertices off the chosen path.
  Rational payment_to(VertexIndex v) const;
};

/// Every vertex is its own agent. Throws UnavoidableVertex when a vertex
/// on the chosen path lies on every path.
VcgReport vcg_payments(const ChoreographyGraph& graph);

struct EquivalenceReport {
  Rational vcg_total;
  ExtendedRational minimal_stable_price;
  bool equal = false;
};

/// Compares the VCG total with the stability threshold of the game where
/// every service is owned by a distinct player.
EquivalenceReport check_equivalence(const ChoreographyGraph& graph);

}  // namespace choreo

#endif  // CHOREO_VCG_HPP
