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
#include <string>
#include <string_view>
#include <vector>

#include "aucdiag/ranking.hpp"
#include "aucdiag/types.hpp"

namespace aucdiag {

enum class SelectorId { auc_sf, entropy_sf, exact_entropy, exact_auc, random };

std::string_view selector_name(SelectorId id);
std::optional<SelectorId> parse_selector(std::string_view name);

struct ExperimentConfig {
  /// When non-empty, the graph and noise model are loaded from this BDG v1
  /// file and the generator/noise fields below are ignored.
  std::string graph_file;
  std::int32_t num_objects = 300;
  std::int32_t num_queries = 300;
  std::int32_t edges_per_query = 3;
  double prior = 0.03;
  double leak = 0.05;  // spontaneous alarm probability, 1 - rho0
  double inhibition = 0.05;

  std::vector<SelectorId> selectors{SelectorId::auc_sf};
  std::int32_t budget = 50;        // queries per episode (k)
  std::int32_t realizations = 1;   // episodes per selector (R)
  std::uint64_t seed = 0;          // master seed; everything derives from it

  /// Floor per-hypothesis likelihoods at 1e-300 instead of raising
  /// ContradictoryEvidenceError. Recorded in the run metadata.
  bool likelihood_floor = false;
  std::int32_t oracle_size_limit = 15;

  /// Record per-selection wall times. Off by default because wall times are
  /// not reproducible, and outputs are byte-identical given (config, seed)
  /// only when this is off.
  bool record_timings = false;
  std::int32_t threads = 0;  // 0 = hardware concurrency
};

/// One row of an episode. step 0 is the baseline row: metrics of the prior
/// ranking before any query, with no query/response/time fields.
struct StepRecord {
  std::int32_t step = 0;
  std::optional<std::int32_t> query;
  std::optional<std::int32_t> response;
  std::optional<double> empirical_auc;
  std::optional<double> estimated_auc;          // upper-rectangle area under
  std::optional<double> exact_entropy;          // oracle-mode selectors only
  std::optional<std::int64_t> select_time_us;
};

/// One simulated diagnosis session: one sampled truth, one query trajectory.
struct EpisodeRecord {
  std::int32_t realization = 0;
  SelectorId selector = SelectorId::auc_sf;
  std::vector<std::int32_t> fault_indices;
  /// True when the sampled truth was degenerate (no faults, or all faults),
  /// which leaves the empirical AUC undefined. Skipped episodes still emit
  /// their step-0 row so they are counted, never silently dropped.
  bool skipped = false;
  /// Non-empty when the episode stopped before its budget (e.g.
  /// contradictory evidence with the likelihood floor off).
  std::string abort_reason;
  std::vector<StepRecord> steps;
};

/// Ground-truth AUC of a ranking: the probability that a uniformly random
/// fault is ranked above a uniformly random non-fault, with half credit for
/// posterior-tied pairs (mid-rank Mann-Whitney over tied groups). Returns
/// nullopt when truth has no faults or no non-faults.
std::optional<double> empirical_auc(const RankedEstimate& ranked, const StateVector& truth);

EpisodeRecord run_episode(const ExperimentConfig& config, const BipartiteDiagnosisGraph& graph,
                          const QmrDtNoiseModel& model, SelectorId selector,
                          std::int32_t realization);

struct ExperimentResult {
  std::vector<EpisodeRecord> episodes;  // ordered by (realization, selector)
  std::int32_t skipped_episodes = 0;
  std::string episodes_csv;  // realization,step,selector,query,response,...
  std::string summary_csv;   // selector,step,mean_auc,stderr_auc,episodes
  std::string metadata;      // key=value run description
};

/// Runs realizations x selectors episodes with per-episode derived seeds.
/// Realizations share the sampled truth across selectors, so selector curves
/// are paired. Episodes may run on a worker pool; results are merged in
/// realization order, so output does not depend on scheduling.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct TimingRow {
  std::int32_t num_objects = 0;
  double median_select_us = 0.0;
};

/// Median wall time of one select_query_auc call with all queries as
/// candidates, on generated PA graphs with N = M and the default noise
/// parameters, for each requested size.
std::vector<TimingRow> timing_probe(std::span<const std::int32_t> sizes, std::uint64_t seed,
                                    std::int32_t repetitions = 5);

}  // namespace aucdiag
