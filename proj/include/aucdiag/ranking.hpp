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
#include <optional>
#include <span>
#include <vector>

#include "aucdiag/rng.hpp"

namespace aucdiag {

/// Objects ranked by descending posterior fault probability. The threshold
/// estimator at level t declares order[0..t) faulty and the rest working.
struct RankedEstimate {
  std::vector<double> marginals;      // Pr(X_i = 1 | observations), by object id
  std::vector<std::int32_t> order;    // permutation of [0, M), marginals nonincreasing along it
};

/// Ranks objects by descending marginal. Ties are broken by random keys drawn
/// from tiebreak_rng (one per object, in object order), so the result is
/// deterministic given the seed.
RankedEstimate rank_objects(std::span<const double> marginals, Rng& tiebreak_rng);

/// Estimated miss and false alarm rates of the threshold estimators,
/// indexed by t = 0..M. miss[0] = 1, false_alarm[0] = 0, miss[M] = 0,
/// false_alarm[M] = 1; miss is nonincreasing and false_alarm nondecreasing.
struct RocCurve {
  std::vector<double> miss;
  std::vector<double> false_alarm;
};

/// Throws DegenerateMarginalsError when all marginals are 0 or all are 1
/// (the error-rate denominators vanish).
RocCurve roc_curve(const RankedEstimate& ranked);

enum class AucMethod { upper_rect, lower_rect, linear };

struct AucEstimate {
  double area_under = 0.0;
  double area_above = 0.0;
  AucMethod method = AucMethod::upper_rect;
};

/// Piecewise-rectangle (or trapezoid) area estimate from the ROC points.
/// For every method area_under + area_above = 1 up to rounding; the
/// upper-rectangle area_above matches the double-sum expression below.
AucEstimate auc_estimate(const RankedEstimate& ranked, AucMethod method);

/// Area above the ROC curve as the literal double sum
/// sum_{i<j} (1 - p_r(i)) p_r(j) / (sum_i p_i * sum_i (1 - p_i)).
/// Quadratic in M; kept as an independent reference for the closed form.
double area_above_double_sum(const RankedEstimate& ranked);

/// Same value in O(M) given the ranking:
/// 1/2 + [sum_i (2i - M) p_r(i+1) + sum_i p_i^2] / (2 sum_i p_i sum_i (1 - p_i)).
double area_above_closed_form(const RankedEstimate& ranked);

namespace detail {
/// Core of the closed form for marginals already sorted in nonincreasing
/// order. Returns nullopt on degenerate denominators.
std::optional<double> area_above_sorted(std::span<const double> sorted_desc);
}  // namespace detail

}  // namespace aucdiag
