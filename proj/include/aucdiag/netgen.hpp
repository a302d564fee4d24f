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

#include "aucdiag/rng.hpp"
#include "aucdiag/types.hpp"

namespace aucdiag {

/// Random bipartite diagnosis graph by preferential attachment. Each query
/// draws edges_per_query distinct objects sequentially; every draw picks
/// object i with probability proportional to (current degree of i) + 1,
/// without replacement within the query. The resulting object degrees are
/// heavy-tailed. Parent sets are stored sorted ascending.
BipartiteDiagnosisGraph generate_pa_bdg(std::int32_t num_objects, std::int32_t num_queries,
                                        std::int32_t edges_per_query, Rng& rng);

}  // namespace aucdiag
