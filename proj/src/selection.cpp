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

#include "aucdiag/selection.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aucdiag/kernels.hpp"
#include "aucdiag/ranking.hpp"
#include "argmin.hpp"

namespace aucdiag {
namespace {

// Area above the ROC curve for an unnormalized weight vector. Normalizes
// into scratch, sorts descending, and applies the closed form. Degenerate
// marginals (everything certain) rank perfectly, so they contribute zero.
double lookahead_area_above(std::span<const double> weights, double total,
                            std::span<double> scratch) {
  kern::scale(weights, 1.0 / total, scratch);
  std::sort(scratch.begin(), scratch.end(), std::greater<>());
  return detail::area_above_sorted(scratch).value_or(0.0);
}

}  // namespace

std::int32_t select_query_auc(const SingleFaultBelief& belief, const QmrDtNoiseModel& model,
                              const BipartiteDiagnosisGraph& graph,
                              std::span<const std::int32_t> candidates, Rng& tiebreak_rng) {
  if (candidates.empty()) throw std::invalid_argument("candidate set is empty");
  const auto post = belief.posterior();
  const std::size_t m = post.size();

  std::vector<double> zero_weights(m);
  std::vector<double> one_weights(m);
  std::vector<double> scratch(m);
  std::vector<double> scores;
  scores.reserve(candidates.size());

  for (std::int32_t j : candidates) {
    if (j < 0 || j >= graph.num_queries)
      throw std::out_of_range("candidate query id " + std::to_string(j) + " out of range");
    const auto jj = static_cast<std::size_t>(j);
    const double rho0 = model.leak_complement[jj];

    // zero_weights_i = post_i * Pr(Z_j = 0 | I_i): rho0 everywhere, scaled by
    // the edge inhibition on parents. one_weights is the complement slice.
    kern::scale(post, rho0, zero_weights);
    const auto& pa = graph.parents[jj];
    const auto& inh = model.inhibition[jj];
    for (std::size_t k = 0; k < pa.size(); ++k) {
      const auto i = static_cast<std::size_t>(pa[k]);
      zero_weights[i] = post[i] * (rho0 * inh[k]);
    }
    kern::subtract(post, zero_weights, one_weights);

    const double p_zero = kern::sum(zero_weights);
    const double p_one = kern::sum(one_weights);

    double expected = 0.0;
    if (p_zero > 0.0) expected += p_zero * lookahead_area_above(zero_weights, p_zero, scratch);
    if (p_one > 0.0) expected += p_one * lookahead_area_above(one_weights, p_one, scratch);
    scores.push_back(expected);
  }

  const std::size_t pick =
      detail::argmin_with_ties(scores, detail::kSelectionTieTolerance, tiebreak_rng);
  return candidates[pick];
}

std::int32_t select_query_auc_exact(const QmrDtNoiseModel& model,
                                    const BipartiteDiagnosisGraph& graph,
                                    const ObservationLog& observations,
                                    std::span<const std::int32_t> candidates, Rng& tiebreak_rng,
                                    const ExactOracleOptions& options) {
  if (candidates.empty()) throw std::invalid_argument("candidate set is empty");
  const ExactPosterior post = exact_posterior(model, graph, observations, options);
  const std::size_t n_states = post.probs.size();
  const auto m = static_cast<std::size_t>(graph.num_objects);

  std::vector<double> marg_zero(m);
  std::vector<double> marg_one(m);
  std::vector<double> scratch(m);
  std::vector<double> scores;
  scores.reserve(candidates.size());

  for (std::int32_t j : candidates) {
    if (j < 0 || j >= graph.num_queries)
      throw std::out_of_range("candidate query id " + std::to_string(j) + " out of range");
    const auto jj = static_cast<std::size_t>(j);
    const auto& pa = graph.parents[jj];
    const auto& inh = model.inhibition[jj];

    // One pass over the states accumulates the outcome probabilities and the
    // hypothetical posterior marginals for both responses.
    std::fill(marg_zero.begin(), marg_zero.end(), 0.0);
    std::fill(marg_one.begin(), marg_one.end(), 0.0);
    double p_zero = 0.0;
    double p_one = 0.0;
    for (std::size_t s = 0; s < n_states; ++s) {
      const double p = post.probs[s];
      if (p == 0.0) continue;
      double zero_prob = model.leak_complement[jj];
      for (std::size_t k = 0; k < pa.size(); ++k) {
        if (s >> pa[k] & 1u) zero_prob *= inh[k];
      }
      const double w0 = p * zero_prob;
      const double w1 = p - w0;
      p_zero += w0;
      p_one += w1;
      for (std::size_t i = 0; i < m; ++i) {
        if (s >> i & 1u) {
          marg_zero[i] += w0;
          marg_one[i] += w1;
        }
      }
    }

    double expected = 0.0;
    if (p_zero > 0.0) expected += p_zero * lookahead_area_above(marg_zero, p_zero, scratch);
    if (p_one > 0.0) expected += p_one * lookahead_area_above(marg_one, p_one, scratch);
    scores.push_back(expected);
  }

  const std::size_t pick =
      detail::argmin_with_ties(scores, detail::kSelectionTieTolerance, tiebreak_rng);
  return candidates[pick];
}

}  // namespace aucdiag
