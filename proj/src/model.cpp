// Copyright 2026 The aucdiag Authors
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

#include "aucdiag/model.hpp"

#include <stdexcept>
#include <string>

namespace aucdiag {

double conditional_zero_prob(const QmrDtNoiseModel& model, const BipartiteDiagnosisGraph& graph,
                             std::int32_t query, const StateVector& x) {
  if (query < 0 || query >= graph.num_queries)
    throw std::out_of_range("query id " + std::to_string(query) + " out of range");
  if (x.bits.size() != static_cast<std::size_t>(graph.num_objects))
    throw std::invalid_argument("state vector length does not match num_objects");
  const auto& pa = graph.parents[static_cast<std::size_t>(query)];
  const auto& inh = model.inhibition[static_cast<std::size_t>(query)];
  double p = model.leak_complement[static_cast<std::size_t>(query)];
  for (std::size_t k = 0; k < pa.size(); ++k) {
    if (x.bits[static_cast<std::size_t>(pa[k])]) p *= inh[k];
  }
  return p;
}

StateVector sample_state(const QmrDtNoiseModel& model, Rng& rng) {
  StateVector x;
  x.bits.resize(model.prior.size());
  for (std::size_t i = 0; i < model.prior.size(); ++i)
    x.bits[i] = bernoulli(rng, model.prior[i]) ? 1 : 0;
  return x;
}

std::int32_t sample_response(const QmrDtNoiseModel& model, const BipartiteDiagnosisGraph& graph,
                             std::int32_t query, const StateVector& x, Rng& rng) {
  const double zero_prob = conditional_zero_prob(model, graph, query, x);
  return bernoulli(rng, zero_prob) ? 0 : 1;
}

}  // namespace aucdiag
