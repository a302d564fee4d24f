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

#include "aucdiag/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "argmin.hpp"

namespace aucdiag {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy requires p in [0,1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double entropy_sf_score(const SingleFaultBelief& belief, const QmrDtNoiseModel& model,
                        const BipartiteDiagnosisGraph& graph, std::int32_t query) {
  if (query < 0 || query >= graph.num_queries)
    throw std::out_of_range("query id " + std::to_string(query) + " out of range");
  const auto j = static_cast<std::size_t>(query);
  const double rho0 = model.leak_complement[j];
  const auto& pa = graph.parents[j];
  const auto& inh = model.inhibition[j];
  const auto post = belief.posterior();

  // Non-parent hypotheses all see zero-probability rho0; only parents differ.
  double parent_mass = 0.0;
  double parent_mix = 0.0;  // sum_k post_k * Pr(Z=0 | I_k) over parents
  double parent_entropy = 0.0;
  for (std::size_t k = 0; k < pa.size(); ++k) {
    const double w = post[static_cast<std::size_t>(pa[k])];
    parent_mass += w;
    parent_mix += w * (rho0 * inh[k]);
    parent_entropy += w * binary_entropy(rho0 * inh[k]);
  }
  const double nonparent_mass = std::max(0.0, 1.0 - parent_mass);
  const double conditional_term = nonparent_mass * binary_entropy(rho0) + parent_entropy;
  const double predictive_zero = std::clamp(nonparent_mass * rho0 + parent_mix, 0.0, 1.0);
  return conditional_term - binary_entropy(predictive_zero);
}

std::int32_t select_query_entropy_sf(const SingleFaultBelief& belief,
                                     const QmrDtNoiseModel& model,
                                     const BipartiteDiagnosisGraph& graph,
                                     std::span<const std::int32_t> candidates,
                                     Rng& tiebreak_rng) {
  if (candidates.empty()) throw std::invalid_argument("candidate set is empty");
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (std::int32_t j : candidates)
    scores.push_back(entropy_sf_score(belief, model, graph, j));
  const std::size_t pick =
      detail::argmin_with_ties(scores, detail::kSelectionTieTolerance, tiebreak_rng);
  return candidates[pick];
}

}  // namespace aucdiag
