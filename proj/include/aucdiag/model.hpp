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

#include "aucdiag/rng.hpp"
#include "aucdiag/types.hpp"

namespace aucdiag {

/// Pr(Z_j = 0 | x) = rho_0j * prod over parents k with x_k = 1 of rho_kj.
/// Depends only on coordinates of x inside parents[j].
double conditional_zero_prob(const QmrDtNoiseModel& model, const BipartiteDiagnosisGraph& graph,
                             std::int32_t query, const StateVector& x);

/// Samples object states as independent Bernoulli(prior[i]) draws.
StateVector sample_state(const QmrDtNoiseModel& model, Rng& rng);

/// Draws a response for one query given the true state.
std::int32_t sample_response(const QmrDtNoiseModel& model, const BipartiteDiagnosisGraph& graph,
                             std::int32_t query, const StateVector& x, Rng& rng);

}  // namespace aucdiag
