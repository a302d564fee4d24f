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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "aucdiag/rng.hpp"
#include "aucdiag/types.hpp"

namespace testutil {

using aucdiag::BipartiteDiagnosisGraph;
using aucdiag::QmrDtNoiseModel;
using aucdiag::Rng;

/// The worked toy graph: five objects, four queries with parent sets
/// {0}, {1,2}, {2,3,4}, {4}.
inline BipartiteDiagnosisGraph toy_graph() {
  return BipartiteDiagnosisGraph::make(5, 4, {{0}, {1, 2}, {2, 3, 4}, {4}});
}

struct Instance {
  BipartiteDiagnosisGraph graph;
  QmrDtNoiseModel model;
};

/// Random well-conditioned instance: all probabilities strictly interior so
/// likelihoods never vanish. Parent degrees are 0..3.
inline Instance random_instance(Rng& rng, std::int32_t max_objects, std::int32_t max_queries) {
  const auto m = static_cast<std::int32_t>(2 + aucdiag::uniform_below(rng, static_cast<std::uint64_t>(max_objects - 1)));
  const auto n = static_cast<std::int32_t>(1 + aucdiag::uniform_below(rng, static_cast<std::uint64_t>(max_queries)));
  std::vector<std::vector<std::int32_t>> parents(static_cast<std::size_t>(n));
  for (auto& pa : parents) {
    const auto degree = aucdiag::uniform_below(rng, static_cast<std::uint64_t>(std::min(m, 3)) + 1);
    std::vector<std::int32_t> all(static_cast<std::size_t>(m));
    for (std::int32_t i = 0; i < m; ++i) all[static_cast<std::size_t>(i)] = i;
    for (std::uint64_t e = 0; e < degree; ++e) {
      const auto pick = aucdiag::uniform_below(rng, all.size() - e);
      std::swap(all[pick], all[all.size() - 1 - e]);
      pa.push_back(all[all.size() - 1 - e]);
    }
    std::sort(pa.begin(), pa.end());
  }
  Instance inst;
  inst.graph = BipartiteDiagnosisGraph::make(m, n, std::move(parents));
  inst.model.prior.resize(static_cast<std::size_t>(m));
  for (auto& a : inst.model.prior) a = 0.05 + 0.55 * aucdiag::uniform_double(rng);
  inst.model.leak_complement.resize(static_cast<std::size_t>(n));
  for (auto& r : inst.model.leak_complement) r = 0.6 + 0.39 * aucdiag::uniform_double(rng);
  inst.model.inhibition.resize(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < inst.model.inhibition.size(); ++j) {
    inst.model.inhibition[j].resize(inst.graph.parents[j].size());
    for (auto& v : inst.model.inhibition[j]) v = 0.02 + 0.5 * aucdiag::uniform_double(rng);
  }
  return inst;
}

}  // namespace testutil
