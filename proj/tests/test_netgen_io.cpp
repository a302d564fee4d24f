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
#include <set>
#include <sstream>
#include <vector>

#include "aucdiag/errors.hpp"
#include "aucdiag/io.hpp"
#include "aucdiag/netgen.hpp"
#include "test_util.hpp"

namespace {

using namespace aucdiag;

std::vector<int> object_degrees(const BipartiteDiagnosisGraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.num_objects), 0);
  for (const auto& pa : g.parents)
    for (auto k : pa) deg[static_cast<std::size_t>(k)]++;
  return deg;
}

TEST_CASE("preferential attachment generator") {
  SUBCASE("saturated fan-out builds the complete bipartite graph") {
    Rng rng = make_rng(1);
    const auto g = generate_pa_bdg(4, 3, 4, rng);
    for (const auto& pa : g.parents) CHECK(pa == std::vector<std::int32_t>{0, 1, 2, 3});
  }
  SUBCASE("every parent set has exactly the requested distinct members") {
    Rng rng = make_rng(2);
    const auto g = generate_pa_bdg(50, 80, 3, rng);
    for (const auto& pa : g.parents) {
      CHECK(pa.size() == 3);
      CHECK(std::set<std::int32_t>(pa.begin(), pa.end()).size() == 3);
      CHECK(std::is_sorted(pa.begin(), pa.end()));
    }
    const auto model = QmrDtNoiseModel::broadcast(g, 0.03, 0.95, 0.05);
    CHECK(validate(g, model).empty());
  }
  SUBCASE("same seed, same graph") {
    Rng a = make_rng(77), b = make_rng(77), c = make_rng(78);
    const auto ga = generate_pa_bdg(30, 40, 2, a);
    const auto gb = generate_pa_bdg(30, 40, 2, b);
    const auto gc = generate_pa_bdg(30, 40, 2, c);
    CHECK(ga == gb);
    CHECK(ga != gc);
  }
  SUBCASE("object degrees are heavy-tailed") {
    // With 300 queries of fan-out 3 over 300 objects the mean degree is 3;
    // preferential attachment should push the max degree past 3x the mean
    // in at least 95 of 100 seeds (observed: 100 of 100, range 14..37).
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng = make_rng(derive_seed(1234, seed));
      const auto g = generate_pa_bdg(300, 300, 3, rng);
      const auto deg = object_degrees(g);
      if (*std::max_element(deg.begin(), deg.end()) > 9) ++hits;
    }
    CHECK(hits >= 95);
  }
  SUBCASE("parameter validation") {
    Rng rng = make_rng(1);
    CHECK_THROWS_AS(generate_pa_bdg(3, 2, 4, rng), std::invalid_argument);
    CHECK_THROWS_AS(generate_pa_bdg(3, 0, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(generate_pa_bdg(0, 2, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(generate_pa_bdg(3, 2, 0, rng), std::invalid_argument);
  }
}

TEST_CASE("graph file round trips") {
  SUBCASE("toy graph") {
    const auto graph = testutil::toy_graph();
    const auto model = QmrDtNoiseModel::broadcast(graph, 0.03, 0.95, 0.05);
    std::stringstream buffer;
    save_graph(graph, model, buffer);
    const auto [g2, m2] = load_graph(buffer);
    CHECK(g2 == graph);
    CHECK(m2 == model);
  }
  SUBCASE("empty parent set survives") {
    const auto graph = BipartiteDiagnosisGraph::make(3, 2, {{}, {0, 2}});
    QmrDtNoiseModel model = QmrDtNoiseModel::broadcast(graph, 0.1, 0.9, 0.2);
    model.prior = {0.25, 1.0 / 3.0, 0.7};  // awkward decimals on purpose
    model.inhibition[1] = {0.1234567890123456, 2.0 / 3.0};
    std::stringstream buffer;
    save_graph(graph, model, buffer);
    const auto [g2, m2] = load_graph(buffer);
    CHECK(g2 == graph);
    CHECK(m2 == model);
  }
  SUBCASE("random graphs round trip bit-exactly") {
    Rng rng = make_rng(81);
    for (int trial = 0; trial < 10; ++trial) {
      auto inst = testutil::random_instance(rng, 20, 15);
      std::stringstream buffer;
      save_graph(inst.graph, inst.model, buffer);
      const auto [g2, m2] = load_graph(buffer);
      CHECK(g2 == inst.graph);
      CHECK(m2 == inst.model);
    }
  }
}

TEST_CASE("parse errors carry a line number") {
  SUBCASE("truncated file") {
    std::stringstream buffer("BDG v1 3 2\nQ 0 0.95 0:0.05\n");
    try {
      load_graph(buffer);
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(err.line() == 3);
      CHECK(std::string(err.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("bad header") {
    std::stringstream buffer("BDG v7 3 2\n");
    CHECK_THROWS_AS(load_graph(buffer), ParseError);
  }
  SUBCASE("garbage probability") {
    std::stringstream buffer("BDG v1 2 1\nQ 0 nope 0:0.05\nPRIOR 0.1 0.1\n");
    try {
      load_graph(buffer);
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(err.line() == 2);
    }
  }
  SUBCASE("probability out of range") {
    std::stringstream buffer("BDG v1 2 1\nQ 0 1.5 0:0.05\nPRIOR 0.1 0.1\n");
    CHECK_THROWS_AS(load_graph(buffer), ParseError);
  }
  SUBCASE("parent index out of range") {
    std::stringstream buffer("BDG v1 2 1\nQ 0 0.9 2:0.05\nPRIOR 0.1 0.1\n");
    CHECK_THROWS_AS(load_graph(buffer), ParseError);
  }
  SUBCASE("duplicate query line") {
    std::stringstream buffer("BDG v1 2 2\nQ 0 0.9 0:0.05\nQ 0 0.9 1:0.05\nPRIOR 0.1 0.1\n");
    CHECK_THROWS_AS(load_graph(buffer), ParseError);
  }
  SUBCASE("wrong prior arity") {
    std::stringstream buffer("BDG v1 2 1\nQ 0 0.9 0:0.05\nPRIOR 0.1\n");
    CHECK_THROWS_AS(load_graph(buffer), ParseError);
  }
  SUBCASE("trailing content") {
    std::stringstream buffer("BDG v1 2 1\nQ 0 0.9 0:0.05\nPRIOR 0.1 0.1\nEXTRA junk\n");
    CHECK_THROWS_AS(load_graph(buffer), ParseError);
  }
}

}  // namespace
