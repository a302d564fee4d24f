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

#include <cstddef>
#include <span>
#include <vector>

#include "aucdiag/rng.hpp"

namespace aucdiag::detail {

// Index of the minimum score. Scores within tol of the minimum count as
// tied and one of them is chosen uniformly; the tolerance absorbs
// floating-point noise so selection stays reproducible.
inline std::size_t argmin_with_ties(std::span<const double> scores, double tol, Rng& rng) {
  double best = scores[0];
  for (double s : scores) {
    if (s < best) best = s;
  }
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] <= best + tol) tied.push_back(i);
  }
  if (tied.size() == 1) return tied.front();
  return tied[static_cast<std::size_t>(uniform_below(rng, tied.size()))];
}

inline constexpr double kSelectionTieTolerance = 1e-12;

}  // namespace aucdiag::detail
