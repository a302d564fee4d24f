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

#include <cmath>
#include <vector>

#include "aucdiag/belief.hpp"
#include "aucdiag/errors.hpp"
#include "aucdiag/oracle.hpp"
#include "test_util.hpp"

namespace {

using namespace aucdiag;

// Direct linear-domain posterior for cross-checking the log-domain oracle.
std::vector<double> hand_posterior(const QmrDtNoiseModel& model,
                                   const BipartiteDiagnosisGraph& graph,
                                   const ObservationLog& log) {
  const auto m = static_cast<std::size_t>(graph.num_objects);
  const std::size_t n_states = std::size_t{1} << m;
  std::vector<double> w(n_states, 1.0);
  for (std::size_t s = 0; s < n_states; ++s) {
    for (std::size_t i = 0; i < m; ++i)
      w[s] *= (s >> i & 1u) ? model.prior[i] : 1.0 - model.prior[i];
    for (const auto& obs : log.entries()) {
      const auto j = static_cast<std::size_t>(obs.query);
      double zero = model.leak_complement[j];
      for (std::size_t k = 0; k < graph.parents[j].size(); ++k) {
        if (s >> graph.parents[j][k] & 1u) zero *= model.inhibition[j][k];
      }
      w[s] *= obs.response == 0 ? zero : 1.0 - zero;
    }
  }
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return w;
}

TEST_CASE("exact posterior") {
  SUBCASE("no observations reproduces the independent prior") {
    const auto graph = BipartiteDiagnosisGraph::make(3, 1, {{0}});
    QmrDtNoiseModel model = QmrDtNoiseModel::broadcast(graph, 0.0, 0.95, 0.05);
    model.prior = {0.5, 0.25, 0.1};
    const auto post = exact_posterior(model, graph, ObservationLog{});
    for (std::uint32_t s = 0; s < 8; ++s) {
      double want = 1.0;
      for (int i = 0; i < 3; ++i)
        want *= (s >> i & 1u) ? model.prior[static_cast<std::size_t>(i)]
                              : 1.0 - model.prior[static_cast<std::size_t>(i)];
      CHECK(post.probs[s] == doctest::Approx(want).epsilon(1e-12));
    }
  }
  SUBCASE("noiseless zero response forbids faulty parents") {
    const auto graph = BipartiteDiagnosisGraph::make(2, 1, {{0}});
    const auto model = QmrDtNoiseModel::broadcast(graph, 0.3, 1.0, 0.0);
    ObservationLog log;
    log.append(0, 0);
    const auto post = exact_posterior(model, graph, log);
    CHECK(post.probs[0b01] == 0.0);
    CHECK(post.probs[0b11] == 0.0);
    CHECK(post.probs[0b00] + post.probs[0b10] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("three-object noisy instance matches the hand table") {
    const auto graph = BipartiteDiagnosisGraph::make(3, 2, {{0, 1}, {1, 2}});
    QmrDtNoiseModel model = QmrDtNoiseModel::broadcast(graph, 0.0, 0.9, 0.2);
    model.prior = {0.1, 0.3, 0.2};
    ObservationLog log;
    log.append(0, 1);
    const auto post = exact_posterior(model, graph, log);
    const auto want = hand_posterior(model, graph, log);
    double sum = 0.0;
    for (std::size_t s = 0; s < 8; ++s) {
      CHECK(post.probs[s] == doctest::Approx(want[s]).epsilon(1e-12));
      sum += post.probs[s];
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
  SUBCASE("capacity limit") {
    const auto graph = BipartiteDiagnosisGraph::make(16, 1, {{0}});
    const auto model = QmrDtNoiseModel::broadcast(graph, 0.1, 0.95, 0.05);
    CHECK_THROWS_AS(exact_posterior(model, graph, ObservationLog{}), CapacityError);
    ExactOracleOptions wide;
    wide.size_limit = 16;
    CHECK_NOTHROW(exact_posterior(model, graph, ObservationLog{}, wide));
  }
  SUBCASE("impossible evidence") {
    // The only state with prior mass forces response 1, but 0 is observed.
    const auto graph = BipartiteDiagnosisGraph::make(1, 1, {{0}});
    const auto model = QmrDtNoiseModel::broadcast(graph, 1.0, 1.0, 0.0);
    ObservationLog log;
    log.append(0, 0);
    CHECK_THROWS_AS(exact_posterior(model, graph, log), ContradictoryEvidenceError);
  }
}

TEST_CASE("exact marginals") {
  SUBCASE("no observations returns the priors") {
    const auto graph = BipartiteDiagnosisGraph::make(4, 1, {{0}});
    QmrDtNoiseModel model = QmrDtNoiseModel::broadcast(graph, 0.0, 0.95, 0.05);
    model.prior = {0.5, 0.25, 0.1, 0.9};
    const auto marg = exact_marginals(model, graph, ObservationLog{});
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(marg[i] == doctest::Approx(model.prior[i]).epsilon(1e-12));
  }
  SUBCASE("bounded in [0,1] after observations") {
    Rng rng = make_rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      auto inst = testutil::random_instance(rng, 8, 6);
      ObservationLog log;
      for (std::int32_t j = 0; j < std::min<std::int32_t>(4, inst.graph.num_queries); ++j)
        log.append(j, bernoulli(rng, 0.5) ? 1 : 0);
      for (double p : exact_marginals(inst.model, inst.graph, log)) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
      }
    }
  }
}

TEST_CASE("exact conditional entropy") {
  SUBCASE("uniform joint has M bits") {
    const auto graph = BipartiteDiagnosisGraph::make(4, 1, {{0}});
    const auto model = QmrDtNoiseModel::broadcast(graph, 0.5, 0.95, 0.05);
    CHECK(exact_conditional_entropy(model, graph, ObservationLog{}) ==
          doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("point mass has zero bits") {
    const auto graph = BipartiteDiagnosisGraph::make(3, 1, {{0}});
    const auto model = QmrDtNoiseModel::broadcast(graph, 1.0, 0.95, 0.05);
    CHECK(exact_conditional_entropy(model, graph, ObservationLog{}) == 0.0);
  }
  SUBCASE("independent objects add their entropies") {
    const auto graph = BipartiteDiagnosisGraph::make(2, 1, {{0}});
    QmrDtNoiseModel model = QmrDtNoiseModel::broadcast(graph, 0.0, 0.95, 0.05);
    model.prior = {0.5, 0.25};
    CHECK(exact_conditional_entropy(model, graph, ObservationLog{}) ==
          doctest::Approx(1.8112781244591328).epsilon(1e-12));
  }
}

TEST_CASE("conditioning consistency") {
  // Appending an observation must equal a Bayes update of the old posterior.
  Rng rng = make_rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    auto inst = testutil::random_instance(rng, 8, 6);
    ObservationLog log;
    for (std::int32_t j = 0; j + 1 < std::min<std::int32_t>(4, inst.graph.num_queries); ++j)
      log.append(j, bernoulli(rng, 0.5) ? 1 : 0);
    const auto before = exact_posterior(inst.model, inst.graph, log);

    const std::int32_t query = inst.graph.num_queries - 1;
    const std::int32_t z = bernoulli(rng, 0.5) ? 1 : 0;
    ObservationLog extended = log;
    if (extended.contains(query)) continue;
    extended.append(query, z);
    const auto after = exact_posterior(inst.model, inst.graph, extended);

    std::vector<double> updated(before.probs.size());
    double total = 0.0;
    for (std::size_t s = 0; s < before.probs.size(); ++s) {
      double zero = inst.model.leak_complement[static_cast<std::size_t>(query)];
      const auto& pa = inst.graph.parents[static_cast<std::size_t>(query)];
      for (std::size_t k = 0; k < pa.size(); ++k) {
        if (s >> pa[k] & 1u) zero *= inst.model.inhibition[static_cast<std::size_t>(query)][k];
      }
      updated[s] = before.probs[s] * (z == 0 ? zero : 1.0 - zero);
      total += updated[s];
    }
    for (std::size_t s = 0; s < updated.size(); ++s)
      CHECK(std::abs(updated[s] / total - after.probs[s]) <= 1e-12);
  }
}

TEST_CASE("information gain is never negative") {
  Rng rng = make_rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = testutil::random_instance(rng, 7, 6);
    ObservationLog log;
    const double h = exact_conditional_entropy(inst.model, inst.graph, log);
    const auto post = exact_posterior(inst.model, inst.graph, log);
    for (std::int32_t j = 0; j < inst.graph.num_queries; ++j) {
      double p_zero = 0.0;
      for (std::size_t s = 0; s < post.probs.size(); ++s) {
        double zero = inst.model.leak_complement[static_cast<std::size_t>(j)];
        const auto& pa = inst.graph.parents[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < pa.size(); ++k) {
          if (s >> pa[k] & 1u) zero *= inst.model.inhibition[static_cast<std::size_t>(j)][k];
        }
        p_zero += post.probs[s] * zero;
      }
      double expected = 0.0;
      for (std::int32_t z : {0, 1}) {
        const double pz = z == 0 ? p_zero : 1.0 - p_zero;
        if (pz <= 0.0) continue;
        ObservationLog extended = log;
        extended.append(j, z);
        expected += pz * exact_conditional_entropy(inst.model, inst.graph, extended);
      }
      CHECK(expected <= h + 1e-12);
    }
  }
}

TEST_CASE("exact entropy selection") {
  SUBCASE("single candidate") {
    const auto graph = testutil::toy_graph();
    const auto model = QmrDtNoiseModel::broadcast(graph, 0.03, 0.95, 0.05);
    Rng rng = make_rng(0);
    const std::vector<std::int32_t> only{1};
    CHECK(select_query_exact_entropy(model, graph, ObservationLog{}, only, rng) == 1);
  }
  SUBCASE("noiseless two-object instance resolves the most prior uncertainty") {
    // Query 0 tests object 0 (a coin flip under the prior); query 1 tests
    // object 1 whose state is nearly certain. Enumerating both outcomes of
    // both queries shows query 0 removes more expected entropy.
    const auto graph = BipartiteDiagnosisGraph::make(2, 2, {{0}, {1}});
    QmrDtNoiseModel model = QmrDtNoiseModel::broadcast(graph, 0.0, 1.0, 0.0);
    model.prior = {0.5, 0.05};
    Rng rng = make_rng(0);
    const std::vector<std::int32_t> candidates{0, 1};
    CHECK(select_query_exact_entropy(model, graph, ObservationLog{}, candidates, rng) == 0);
  }
}

TEST_CASE("map estimate") {
  SUBCASE("prior mode is all-working when priors are below one half") {
    const auto graph = BipartiteDiagnosisGraph::make(4, 1, {{0}});
    const auto model = QmrDtNoiseModel::broadcast(graph, 0.3, 0.95, 0.05);
    CHECK(map_estimate(model, graph, ObservationLog{}).bits ==
          std::vector<std::uint8_t>{0, 0, 0, 0});
  }
  SUBCASE("noiseless responses pin the true state") {
    const auto graph = BipartiteDiagnosisGraph::make(3, 3, {{0}, {1}, {2}});
    const auto model = QmrDtNoiseModel::broadcast(graph, 0.3, 1.0, 0.0);
    ObservationLog log;
    log.append(0, 1);
    log.append(1, 0);
    log.append(2, 1);
    CHECK(map_estimate(model, graph, log).bits == std::vector<std::uint8_t>{1, 0, 1});
  }
  SUBCASE("mode of the hand-computed table") {
    const auto graph = BipartiteDiagnosisGraph::make(3, 2, {{0, 1}, {1, 2}});
    QmrDtNoiseModel model = QmrDtNoiseModel::broadcast(graph, 0.0, 0.9, 0.2);
    model.prior = {0.1, 0.3, 0.2};
    ObservationLog log;
    log.append(0, 1);
    const auto table = hand_posterior(model, graph, log);
    std::size_t mode = 0;
    for (std::size_t s = 1; s < table.size(); ++s) {
      if (table[s] > table[mode]) mode = s;
    }
    const auto got = map_estimate(model, graph, log);
    std::uint32_t got_state = 0;
    for (std::size_t i = 0; i < got.bits.size(); ++i)
      got_state |= static_cast<std::uint32_t>(got.bits[i]) << i;
    CHECK(got_state == mode);
  }
  SUBCASE("ties resolve to the lexicographically smallest state vector") {
    // Conditioned on exactly one fault with a uniform prior, states (1,0)
    // and (0,1) tie; (0,1) is lexicographically smaller.
    const auto graph = BipartiteDiagnosisGraph::make(2, 1, {{0}});
    const auto model = QmrDtNoiseModel::broadcast(graph, 0.5, 0.95, 0.05);
    ExactOracleOptions sf;
    sf.single_fault_condition = true;
    CHECK(map_estimate(model, graph, ObservationLog{}, sf).bits ==
          std::vector<std::uint8_t>{0, 1});
  }
}

}  // namespace
