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

#include <cstdint>
#include <span>
#include <vector>

#include "aucdiag/rng.hpp"
#include "aucdiag/types.hpp"

namespace aucdiag {

// Brute-force exact inference over all 2^M object states. Desk-scale only:
// every operation enumerates the full state space and refuses instances
// above the configured limit. Summation is fixed-order so results are
// reproducible bit for bit.

struct ExactOracleOptions {
  std::int32_t size_limit = 15;
  /// When set, prior mass outside the M single-fault states is zeroed before
  /// normalization (conditioning the joint on the single-fault event). This
  /// is a validation mode for the single-fault engine, not a model variant.
  bool single_fault_condition = false;
};

/// Posterior over all 2^M states; probs[s] is Pr(x = s | observations) with
/// bit i of s holding the state of object i.
struct ExactPosterior {
  std::int32_t num_objects = 0;
  std::vector<double> probs;
};

/// Throws CapacityError above the size limit and ContradictoryEvidenceError
/// when the evidence has zero total mass.
ExactPosterior exact_posterior(const QmrDtNoiseModel& model,
                               const BipartiteDiagnosisGraph& graph,
                               const ObservationLog& observations,
                               const ExactOracleOptions& options = {});

/// Pr(X_i = 1 | observations) for every object.
std::vector<double> exact_marginals(const QmrDtNoiseModel& model,
                                    const BipartiteDiagnosisGraph& graph,
                                    const ObservationLog& observations,
                                    const ExactOracleOptions& options = {});

/// H(X | observations) in bits; between 0 and M.
double exact_conditional_entropy(const QmrDtNoiseModel& model,
                                 const BipartiteDiagnosisGraph& graph,
                                 const ObservationLog& observations,
                                 const ExactOracleOptions& options = {});

/// Greedy information-gain selection: argmin over candidates of the
/// expected posterior entropy sum_z Pr(Z_j = z | obs) H(X | obs, z).
std::int32_t select_query_exact_entropy(const QmrDtNoiseModel& model,
                                        const BipartiteDiagnosisGraph& graph,
                                        const ObservationLog& observations,
                                        std::span<const std::int32_t> candidates,
                                        Rng& tiebreak_rng,
                                        const ExactOracleOptions& options = {});

/// Most probable joint state; ties resolved to the lexicographically
/// smallest state vector so repeated runs agree.
StateVector map_estimate(const QmrDtNoiseModel& model, const BipartiteDiagnosisGraph& graph,
                         const ObservationLog& observations,
                         const ExactOracleOptions& options = {});

}  // namespace aucdiag
