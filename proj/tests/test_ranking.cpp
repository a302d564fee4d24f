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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "aucdiag/errors.hpp"
#include "aucdiag/ranking.hpp"
#include "aucdiag/rng.hpp"

namespace {

using namespace aucdiag;

// Worked five-object example: posteriors (0.3, 0.15, 0.35, 0.15, 0.05).
const std::vector<double> kWorkedMarginals{0.3, 0.15, 0.35, 0.15, 0.05};
// Seed 2 breaks the 0.15 tie in ascending index order.
constexpr std::uint64_t kWorkedSeed = 2;

std::vector<double> random_marginals(Rng& rng, std::size_t m) {
  std::vector<double> v(m);
  for (auto& p : v) p = uniform_double(rng);
  return v;
}

TEST_CASE("rank_objects") {
  SUBCASE("worked example order") {
    Rng rng = make_rng(kWorkedSeed);
    const auto ranked = rank_objects(kWorkedMarginals, rng);
    CHECK(ranked.order == std::vector<std::int32_t>{2, 0, 1, 3, 4});
  }
  SUBCASE("strictly decreasing marginals rank as-is") {
    Rng rng = make_rng(0);
    const auto ranked = rank_objects(std::vector<double>{0.9, 0.5, 0.3, 0.1}, rng);
    CHECK(ranked.order == std::vector<std::int32_t>{0, 1, 2, 3});
  }
  SUBCASE("full tie is a seeded random permutation") {
    const std::vector<double> flat(6, 0.25);
    Rng a = make_rng(11), a2 = make_rng(11), b = make_rng(12);
    const auto ra = rank_objects(flat, a);
    const auto ra2 = rank_objects(flat, a2);
    const auto rb = rank_objects(flat, b);
    CHECK(ra.order == ra2.order);
    CHECK(ra.order != rb.order);  // distinct seeds chosen to differ
    auto sorted = ra.order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::int32_t>{0, 1, 2, 3, 4, 5});
  }
  SUBCASE("marginals along the order are nonincreasing") {
    Rng rng = make_rng(13);
    for (int t = 0; t < 50; ++t) {
      const auto marg = random_marginals(rng, 1 + uniform_below(rng, 40));
      const auto ranked = rank_objects(marg, rng);
      for (std::size_t i = 0; i + 1 < ranked.order.size(); ++i)
        CHECK(marg[static_cast<std::size_t>(ranked.order[i])] >=
              marg[static_cast<std::size_t>(ranked.order[i + 1])]);
    }
  }
  SUBCASE("rejects out-of-range marginals") {
    Rng rng = make_rng(0);
    CHECK_THROWS_AS(rank_objects(std::vector<double>{0.5, 1.5}, rng), std::invalid_argument);
    CHECK_THROWS_AS(rank_objects(std::vector<double>{}, rng), std::invalid_argument);
  }
}

TEST_CASE("roc curve") {
  Rng rng = make_rng(kWorkedSeed);
  const auto ranked = rank_objects(kWorkedMarginals, rng);
  const auto curve = roc_curve(ranked);

  SUBCASE("endpoints are exact") {
    CHECK(curve.miss[0] == 1.0);
    CHECK(curve.false_alarm[0] == 0.0);
    CHECK(curve.miss[5] == 0.0);
    CHECK(curve.false_alarm[5] == 1.0);
  }
  SUBCASE("worked example at t = 2") {
    CHECK(std::abs(curve.miss[2] - 0.35) <= 1e-12);
    CHECK(std::abs(curve.false_alarm[2] - 0.3375) <= 1e-12);
  }
  SUBCASE("monotone in t") {
    Rng r2 = make_rng(14);
    for (int t = 0; t < 30; ++t) {
      const auto marg = random_marginals(r2, 2 + uniform_below(r2, 30));
      const auto c = roc_curve(rank_objects(marg, r2));
      for (std::size_t i = 0; i + 1 < c.miss.size(); ++i) {
        CHECK(c.miss[i] >= c.miss[i + 1]);
        CHECK(c.false_alarm[i] <= c.false_alarm[i + 1]);
      }
    }
  }
  SUBCASE("perfect knee for separable marginals") {
    Rng r2 = make_rng(0);
    const auto c = roc_curve(rank_objects(std::vector<double>{1.0, 0.0}, r2));
    CHECK(c.miss[1] == 0.0);
    CHECK(c.false_alarm[1] == 0.0);
  }
  SUBCASE("degenerate marginals throw") {
    Rng r2 = make_rng(0);
    const auto zeros = rank_objects(std::vector<double>{0.0, 0.0}, r2);
    const auto ones = rank_objects(std::vector<double>{1.0, 1.0}, r2);
    CHECK_THROWS_AS(roc_curve(zeros), DegenerateMarginalsError);
    CHECK_THROWS_AS(roc_curve(ones), DegenerateMarginalsError);
    CHECK_THROWS_AS(area_above_double_sum(zeros), DegenerateMarginalsError);
    CHECK_THROWS_AS(area_above_closed_form(ones), DegenerateMarginalsError);
  }
}

TEST_CASE("area above the curve") {
  Rng rng = make_rng(15);

  SUBCASE("perfect separation") {
    const auto ranked = rank_objects(std::vector<double>{1.0, 0.0, 0.0, 0.0}, rng);
    CHECK(area_above_double_sum(ranked) == 0.0);
    CHECK(std::abs(area_above_closed_form(ranked)) <= 1e-15);
  }
  SUBCASE("uniform marginals give (M-1)/(2M)") {
    for (std::size_t m : {2, 5, 10}) {
      const std::vector<double> uniform(m, 1.0 / static_cast<double>(m));
      const auto ranked = rank_objects(uniform, rng);
      const double want = static_cast<double>(m - 1) / (2.0 * static_cast<double>(m));
      CHECK(std::abs(area_above_double_sum(ranked) - want) <= 1e-12);
      CHECK(std::abs(area_above_closed_form(ranked) - want) <= 1e-12);
    }
  }
  SUBCASE("two-object hand value") {
    const auto ranked = rank_objects(std::vector<double>{0.6, 0.4}, rng);
    CHECK(std::abs(area_above_double_sum(ranked) - 0.16) <= 1e-12);
    CHECK(std::abs(area_above_closed_form(ranked) - 0.16) <= 1e-12);
  }
  SUBCASE("closed form equals the double sum on random inputs") {
    for (int t = 0; t < 200; ++t) {
      const std::size_t m = 2 + uniform_below(rng, 49);
      const auto marg = random_marginals(rng, m);
      const auto ranked = rank_objects(marg, rng);
      CHECK(std::abs(area_above_closed_form(ranked) - area_above_double_sum(ranked)) <= 1e-10);
    }
  }
  SUBCASE("descending ranking keeps the area above in [0, 1/2]") {
    for (int t = 0; t < 100; ++t) {
      const auto marg = random_marginals(rng, 2 + uniform_below(rng, 30));
      const auto ranked = rank_objects(marg, rng);
      const double above = area_above_closed_form(ranked);
      CHECK(above >= -1e-12);
      CHECK(above <= 0.5 + 1e-12);
    }
  }
}

TEST_CASE("auc estimates") {
  Rng rng = make_rng(16);

  SUBCASE("uniform 1/5 upper rectangles") {
    const auto ranked = rank_objects(std::vector<double>(5, 0.2), rng);
    const auto est = auc_estimate(ranked, AucMethod::upper_rect);
    CHECK(std::abs(est.area_under - 0.6) <= 1e-12);
    CHECK(std::abs(est.area_above - 0.4) <= 1e-12);
  }
  SUBCASE("upper-rectangle area above matches the double sum") {
    for (int t = 0; t < 50; ++t) {
      const auto marg = random_marginals(rng, 2 + uniform_below(rng, 20));
      const auto ranked = rank_objects(marg, rng);
      const auto est = auc_estimate(ranked, AucMethod::upper_rect);
      CHECK(std::abs(est.area_above - area_above_double_sum(ranked)) <= 1e-12);
      CHECK(std::abs(est.area_under + est.area_above - 1.0) <= 1e-12);
    }
  }
  SUBCASE("linear is the mean of upper and lower") {
    for (int t = 0; t < 50; ++t) {
      const auto marg = random_marginals(rng, 2 + uniform_below(rng, 20));
      const auto ranked = rank_objects(marg, rng);
      const double upper = auc_estimate(ranked, AucMethod::upper_rect).area_under;
      const double lower = auc_estimate(ranked, AucMethod::lower_rect).area_under;
      const double linear = auc_estimate(ranked, AucMethod::linear).area_under;
      CHECK(std::abs(linear - 0.5 * (upper + lower)) <= 1e-12);
      CHECK(lower <= upper + 1e-12);
    }
  }
  SUBCASE("perfect separation scores 1 under every method") {
    const auto ranked = rank_objects(std::vector<double>{1.0, 0.0, 0.0}, rng);
    for (auto method : {AucMethod::upper_rect, AucMethod::lower_rect, AucMethod::linear})
      CHECK(std::abs(auc_estimate(ranked, method).area_under - 1.0) <= 1e-12);
  }
  SUBCASE("sorted ranking keeps upper-rectangle area under in [1/2, 1]") {
    for (int t = 0; t < 50; ++t) {
      const auto marg = random_marginals(rng, 2 + uniform_below(rng, 30));
      const auto ranked = rank_objects(marg, rng);
      const double under = auc_estimate(ranked, AucMethod::upper_rect).area_under;
      CHECK(under >= 0.5 - 1e-12);
      CHECK(under <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("tie order changes permutations but not estimator values") {
  Rng rng = make_rng(17);
  for (int t = 0; t < 30; ++t) {
    // Draw marginals from a coarse grid so ties are common.
    const std::size_t m = 3 + uniform_below(rng, 12);
    std::vector<double> marg(m);
    for (auto& p : marg) p = 0.1 * static_cast<double>(uniform_below(rng, 5));
    marg[0] = 0.3;  // keep the denominators non-degenerate

    Rng tie_a = make_rng(derive_seed(900, static_cast<std::uint64_t>(t), 0));
    Rng tie_b = make_rng(derive_seed(900, static_cast<std::uint64_t>(t), 1));
    const auto ranked_a = rank_objects(marg, tie_a);
    const auto ranked_b = rank_objects(marg, tie_b);

    const auto curve_a = roc_curve(ranked_a);
    const auto curve_b = roc_curve(ranked_b);
    for (std::size_t i = 0; i < curve_a.miss.size(); ++i) {
      CHECK(std::abs(curve_a.miss[i] - curve_b.miss[i]) <= 1e-12);
      CHECK(std::abs(curve_a.false_alarm[i] - curve_b.false_alarm[i]) <= 1e-12);
    }
    CHECK(std::abs(area_above_closed_form(ranked_a) - area_above_closed_form(ranked_b)) <= 1e-12);
    for (auto method : {AucMethod::upper_rect, AucMethod::lower_rect, AucMethod::linear})
      CHECK(std::abs(auc_estimate(ranked_a, method).area_under -
                     auc_estimate(ranked_b, method).area_under) <= 1e-12);
  }
}

}  // namespace
