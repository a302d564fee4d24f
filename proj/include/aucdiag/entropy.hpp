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
#include "aucdiag/rng.hpp"
#include "aucdiag/types.hpp"

namespace aucdiag {

/// H(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
/// Throws std::domain_error outside [0,1]. Base-2 throughout, so scores are
/// in bits.
double binary_entropy(double p);

/// Single-fault entropy selection score for one query:
///   sum_i Pr(X_i=1|obs) H(Pr(Z_j=0|X=I_i)) - H(Pr(Z_j=0|obs)).
/// Always <= 0 (Jensen on the concave H); equals the negated mutual
/// information between the hypothesis and the query response.
double entropy_sf_score(const SingleFaultBelief& belief, const QmrDtNoiseModel& model,
                        const BipartiteDiagnosisGraph& graph, std::int32_t query);

/// Picks the candidate with minimal entropy_sf_score. Ties within 1e-12 are
/// broken by a seeded uniform choice.
std::int32_t select_query_entropy_sf(const SingleFaultBelief& belief,
                                     const QmrDtNoiseModel& model,
                                     const BipartiteDiagnosisGraph& graph,
                                     std::span<const std::int32_t> candidates,
                                     Rng& tiebreak_rng);

}  // namespace aucdiag
