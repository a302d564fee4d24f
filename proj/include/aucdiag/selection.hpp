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

#include "aucdiag/belief.hpp"
#include "aucdiag/oracle.hpp"
#include "aucdiag/rng.hpp"
#include "aucdiag/types.hpp"

namespace aucdiag {

/// Greedy AUC selection under the single-fault belief: picks the candidate
/// minimizing the expected area above the ROC curve,
///   argmin_j sum_z Pr(Z_j = z | obs) * Abar(posterior updated by (j, z)),
/// with the upper-rectangle area estimate. The lookahead never mutates the
/// input belief. Cost is O(|candidates| * M log M) per call.
/// Ties within 1e-12 are broken by a seeded uniform choice.
std::int32_t select_query_auc(const SingleFaultBelief& belief, const QmrDtNoiseModel& model,
                              const BipartiteDiagnosisGraph& graph,
                              std::span<const std::int32_t> candidates, Rng& tiebreak_rng);

/// Same selection rule driven by exact multi-fault marginals from the
/// brute-force oracle instead of the single-fault posterior. Desk-scale only
/// (CapacityError above options.size_limit).
///
/// A hypothetical outcome whose marginals are all zero or all one pins every
/// object state with certainty; such an outcome contributes area zero rather
/// than a degenerate-denominator error.
std::int32_t select_query_auc_exact(const QmrDtNoiseModel& model,
                                    const BipartiteDiagnosisGraph& graph,
                                    const ObservationLog& observations,
                                    std::span<const std::int32_t> candidates, Rng& tiebreak_rng,
                                    const ExactOracleOptions& options = {});

}  // namespace aucdiag
