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

#include "aucdiag/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aucdiag/errors.hpp"
#include "aucdiag/kernels.hpp"

namespace aucdiag {
namespace {

void check_marginals(std::span<const double> marginals) {
  if (marginals.empty()) throw std::invalid_argument("marginals must be non-empty");
  for (double p : marginals) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("marginals must lie in [0,1]");
  }
}

std::vector<double> gather_sorted(const RankedEstimate& ranked) {
  std::vector<double> v(ranked.order.size());
  for (std::size_t i = 0; i < ranked.order.size(); ++i)
    v[i] = ranked.marginals[static_cast<std::size_t>(ranked.order[i])];
  return v;
}

}  // namespace

RankedEstimate rank_objects(std::span<const double> marginals, Rng& tiebreak_rng) {
  check_marginals(marginals);
  const std::size_t m = marginals.size();
  std::vector<std::uint64_t> keys(m);
  for (auto& k : keys) k = tiebreak_rng();

  RankedEstimate ranked;
  ranked.marginals.assign(marginals.begin(), marginals.end());
  ranked.order.resize(m);
  std::iota(ranked.order.begin(), ranked.order.end(), 0);
  std::sort(ranked.order.begin(), ranked.order.end(),
            [&](std::int32_t a, std::int32_t b) {
              const auto ia = static_cast<std::size_t>(a);
              const auto ib = static_cast<std::size_t>(b);
              if (marginals[ia] != marginals[ib]) return marginals[ia] > marginals[ib];
              if (keys[ia] != keys[ib]) return keys[ia] < keys[ib];
              return a < b;
            });
  return ranked;
}

RocCurve roc_curve(const RankedEstimate& ranked) {
  const std::vector<double> v = gather_sorted(ranked);
  const std::size_t m = v.size();

  // Suffix sums of p along the ranking, prefix sums of (1 - p). The totals
  // reuse the endpoint accumulations so miss[0] and false_alarm[M] are
  // exactly 1.
  std::vector<double> miss_num(m + 1, 0.0);
  for (std::size_t t = m; t-- > 0;) miss_num[t] = miss_num[t + 1] + v[t];
  std::vector<double> far_num(m + 1, 0.0);
  for (std::size_t t = 0; t < m; ++t) far_num[t + 1] = far_num[t] + (1.0 - v[t]);

  const double total_pos = miss_num[0];
  const double total_neg = far_num[m];
  if (!(total_pos > 0.0) || !(total_neg > 0.0))
    throw DegenerateMarginalsError("all marginals are zero or all are one");

  RocCurve curve;
  curve.miss.resize(m + 1);
  curve.false_alarm.resize(m + 1);
  for (std::size_t t = 0; t <= m; ++t) {
    curve.miss[t] = miss_num[t] / total_pos;
    curve.false_alarm[t] = far_num[t] / total_neg;
  }
  return curve;
}

AucEstimate auc_estimate(const RankedEstimate& ranked, AucMethod method) {
  const RocCurve curve = roc_curve(ranked);
  const std::size_t m = curve.miss.size() - 1;
  double under = 0.0;
  double above = 0.0;
  for (std::size_t t = 0; t < m; ++t) {
    const double width = curve.false_alarm[t + 1] - curve.false_alarm[t];
    double miss_height = 0.0;
    switch (method) {
      case AucMethod::upper_rect:
        miss_height = curve.miss[t + 1];
        break;
      case AucMethod::lower_rect:
        miss_height = curve.miss[t];
        break;
      case AucMethod::linear:
        miss_height = 0.5 * (curve.miss[t] + curve.miss[t + 1]);
        break;
    }
    under += (1.0 - miss_height) * width;
    above += miss_height * width;
  }
  return {under, above, method};
}

double area_above_double_sum(const RankedEstimate& ranked) {
  // Literal transcription of the nested sum; intentionally independent of
  // the kernel layer and of the closed form.
  const std::vector<double> v = gather_sorted(ranked);
  const std::size_t m = v.size();
  double total_pos = 0.0;
  double total_neg = 0.0;
  for (double p : ranked.marginals) {
    total_pos += p;
    total_neg += 1.0 - p;
  }
  if (!(total_pos > 0.0) || !(total_neg > 0.0))
    throw DegenerateMarginalsError("all marginals are zero or all are one");
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    double inner = 0.0;
    for (std::size_t j = i + 1; j < m; ++j) inner += v[j];
    acc += (1.0 - v[i]) * inner;
  }
  return acc / (total_pos * total_neg);
}

double area_above_closed_form(const RankedEstimate& ranked) {
  const std::vector<double> v = gather_sorted(ranked);
  auto value = detail::area_above_sorted(v);
  if (!value) throw DegenerateMarginalsError("all marginals are zero or all are one");
  return *value;
}

namespace detail {

std::optional<double> area_above_sorted(std::span<const double> sorted_desc) {
  const double total_pos = kern::sum(sorted_desc);
  const double total_neg = static_cast<double>(sorted_desc.size()) - total_pos;
  if (!(total_pos > 0.0) || !(total_neg > 0.0)) return std::nullopt;
  const double moment = kern::rank_moment(sorted_desc);
  const double squares = kern::sum_squares(sorted_desc);
  return 0.5 + (moment + squares) / (2.0 * total_pos * total_neg);
}

}  // namespace detail

}  // namespace aucdiag
