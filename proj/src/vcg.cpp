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

#include "choreo/vcg.hpp"

#include "choreo/bargaining.hpp"
#include "choreo/error.hpp"

namespace choreo {

Rational VcgReport::payment_to(VertexIndex v) const {
  for (const auto& p : payments)
    if (p.vertex == v) return p.payment;
  return 0;
}

VcgReport vcg_payments(const ChoreographyGraph& graph) {
  VcgReport report;
  report.chosen_path = *shortest_path(graph).path;

  std::vector<Rational> costs;
  for (const auto& v : graph.vertices()) costs.push_back(v.cost);

  for (VertexIndex v : report.chosen_path) {
    PathQuery avoid;
    avoid.allowed = [v](VertexIndex w) { return w != v; };
    PathResult without = cheapest_path(graph, avoid);
    if (!without.found()) {
      throw Error(ErrorCode::kUnavoidableVertex,
                  "service '" + graph.vertex(v).id + "' lies on every path");
    }
    std::vector<Rational> zeroed = costs;
    zeroed[v] = 0;
    PathQuery free_v;
    free_v.costs = zeroed;
    PathResult with = cheapest_path(graph, free_v);

    VcgPayment pay{v, without.cost.value(), with.cost.value(), 0};
    pay.payment = pay.avoiding_cost - pay.zero_cost_path;
    report.total_payment += pay.payment;
    report.payments.push_back(std::move(pay));
  }
  return report;
}

EquivalenceReport check_equivalence(const ChoreographyGraph& graph) {
  EquivalenceReport r;
  r.vcg_total = vcg_payments(graph).total_payment;
  ChoreographyGraph agents = graph.with_per_vertex_owners();
  const Rational budget = shortest_path(agents).cost.value();
  r.minimal_stable_price =
      stability_threshold(GameInstance::create(std::move(agents), budget)).threshold;
  r.equal = r.minimal_stable_price == ExtendedRational(r.vcg_total);
  return r;
}

}  // namespace choreo
