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

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "aucdiag/types.hpp"

namespace aucdiag {

struct BeliefUpdateOptions {
  /// When positive, per-hypothesis likelihoods are clamped to at least this
  /// value before taking logs, so contradictory evidence flattens the
  /// posterior instead of raising ContradictoryEvidenceError. Off by default:
  /// silent flooring would mask model misspecification.
  double likelihood_floor = 0.0;
};

/// Posterior over the M single-fault hypotheses (exactly one object faulty),
/// maintained in the log domain with max-shift renormalization so long
/// observation sequences cannot underflow.
///
/// Beliefs are immutable values: update_belief returns a new belief, which
/// keeps one-step lookaheads free of mutation hazards and makes concurrent
/// candidate evaluation safe.
class SingleFaultBelief {
 public:
  /// Unnormalized log posterior per hypothesis; -inf marks zero mass.
  std::span<const double> log_weights() const { return log_weights_; }
  /// Normalized posterior; entries are nonnegative and sum to 1.
  std::span<const double> posterior() const { return posterior_; }
  std::int32_t num_objects() const { return static_cast<std::int32_t>(posterior_.size()); }

 private:
  SingleFaultBelief() = default;
  bool renormalize();  // false when total mass is zero

  std::vector<double> log_weights_;
  std::vector<double> posterior_;

  friend SingleFaultBelief init_belief(const QmrDtNoiseModel&, const BipartiteDiagnosisGraph&);
  friend SingleFaultBelief update_belief(const SingleFaultBelief&, const QmrDtNoiseModel&,
                                         const BipartiteDiagnosisGraph&, std::int32_t,
                                         std::int32_t, const BeliefUpdateOptions&);
};

/// Prior belief: hypothesis i gets the independent-prior mass of the state
/// with exactly fault i, renormalized over the M hypotheses (proportional to
/// alpha_i / (1 - alpha_i) when all priors are below 1).
/// Throws DegeneratePriorError if no hypothesis has mass.
SingleFaultBelief init_belief(const QmrDtNoiseModel& model, const BipartiteDiagnosisGraph& graph);

/// Pr(Z_query = response | X = I_hypothesis): the leak-complement, scaled by
/// the edge inhibition when the hypothesis object is a parent of the query.
double single_fault_likelihood(const QmrDtNoiseModel& model,
                               const BipartiteDiagnosisGraph& graph, std::int32_t query,
                               std::int32_t response, std::int32_t hypothesis);

/// Bayes update by one observation. The caller must not feed the same query
/// twice into one belief chain. Throws ContradictoryEvidenceError when every
/// hypothesis reaches likelihood zero (unless a floor is enabled).
SingleFaultBelief update_belief(const SingleFaultBelief& belief, const QmrDtNoiseModel& model,
                                const BipartiteDiagnosisGraph& graph, std::int32_t query,
                                std::int32_t response, const BeliefUpdateOptions& options = {});

/// Posterior predictive (Pr(Z_query = 0 | observations), Pr(Z_query = 1 | ...)),
/// mixing the per-hypothesis likelihoods by the current posterior.
std::pair<double, double> predictive_response_prob(const SingleFaultBelief& belief,
                                                   const QmrDtNoiseModel& model,
                                                   const BipartiteDiagnosisGraph& graph,
                                                   std::int32_t query);

}  // namespace aucdiag
