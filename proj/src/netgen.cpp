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

#include "aucdiag/netgen.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace aucdiag {

BipartiteDiagnosisGraph generate_pa_bdg(std::int32_t num_objects, std::int32_t num_queries,
                                        std::int32_t edges_per_query, Rng& rng) {
  if (num_objects <= 0) throw std::invalid_argument("num_objects must be positive");
  if (num_queries <= 0) throw std::invalid_argument("num_queries must be positive");
  if (edges_per_query <= 0) throw std::invalid_argument("edges_per_query must be positive");
  if (edges_per_query > num_objects)
    throw std::invalid_argument("edges_per_query cannot exceed num_objects");

  const auto m = static_cast<std::size_t>(num_objects);
  // Integer attachment weights (degree + 1) keep the draws exact.
  std::vector<std::uint64_t> weight(m, 1);
  std::uint64_t total_weight = m;
  std::vector<std::uint8_t> taken(m, 0);

  std::vector<std::vector<std::int32_t>> parents;
  parents.reserve(static_cast<std::size_t>(num_queries));
  for (std::int32_t j = 0; j < num_queries; ++j) {
    std::vector<std::int32_t> pa;
    pa.reserve(static_cast<std::size_t>(edges_per_query));
    std::uint64_t remaining = total_weight;
    for (std::int32_t e = 0; e < edges_per_query; ++e) {
      std::uint64_t target = uniform_below(rng, remaining);
      std::size_t chosen = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (taken[i]) continue;
        if (target < weight[i]) {
          chosen = i;
          break;
        }
        target -= weight[i];
      }
      assert(chosen < m);  // target < remaining, so the walk always lands
      taken[chosen] = 1;
      remaining -= weight[chosen];
      pa.push_back(static_cast<std::int32_t>(chosen));
    }
    for (std::int32_t i : pa) {
      taken[static_cast<std::size_t>(i)] = 0;
      weight[static_cast<std::size_t>(i)] += 1;
    }
    total_weight += static_cast<std::uint64_t>(edges_per_query);
    std::sort(pa.begin(), pa.end());
    parents.push_back(std::move(pa));
  }

  return BipartiteDiagnosisGraph::make(num_objects, num_queries, std::move(parents));
}

}  // namespace aucdiag
