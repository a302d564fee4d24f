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

#include "aucdiag/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aucdiag/belief.hpp"
#include "aucdiag/entropy.hpp"
#include "aucdiag/errors.hpp"
#include "aucdiag/io.hpp"
#include "aucdiag/kernels.hpp"
#include "aucdiag/model.hpp"
#include "aucdiag/netgen.hpp"
#include "aucdiag/oracle.hpp"
#include "aucdiag/selection.hpp"

namespace aucdiag {
namespace {

// Stream tags for deriving independent rng seeds from the master seed.
enum : std::uint64_t { kStreamGraph = 1, kStreamTruth = 2, kStreamResponse = 3, kStreamTies = 4 };

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::int64_t now_us() {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

bool oracle_mode(SelectorId id) {
  return id == SelectorId::exact_entropy || id == SelectorId::exact_auc;
}

}  // namespace

std::string_view selector_name(SelectorId id) {
  switch (id) {
    case SelectorId::auc_sf: return "auc_sf";
    case SelectorId::entropy_sf: return "entropy_sf";
    case SelectorId::exact_entropy: return "exact_entropy";
    case SelectorId::exact_auc: return "exact_auc";
    case SelectorId::random: return "random";
  }
  return "unknown";
}

std::optional<SelectorId> parse_selector(std::string_view name) {
  for (SelectorId id : {SelectorId::auc_sf, SelectorId::entropy_sf, SelectorId::exact_entropy,
                        SelectorId::exact_auc, SelectorId::random}) {
    if (name == selector_name(id)) return id;
  }
  return std::nullopt;
}

std::optional<double> empirical_auc(const RankedEstimate& ranked, const StateVector& truth) {
  const std::size_t m = ranked.order.size();
  if (truth.bits.size() != m)
    throw std::invalid_argument("truth length does not match ranking length");
  std::uint64_t n_pos = 0;
  for (auto b : truth.bits) n_pos += b ? 1 : 0;
  const std::uint64_t n_neg = m - n_pos;
  if (n_pos == 0 || n_neg == 0) return std::nullopt;

  // Walk tied-marginal groups in rank order. The numerator is kept doubled
  // (2 per win, 1 per tie) so it stays an exact integer.
  std::uint64_t numerator2 = 0;
  std::uint64_t negatives_below = n_neg;
  std::size_t i = 0;
  while (i < m) {
    const double value = ranked.marginals[static_cast<std::size_t>(ranked.order[i])];
    std::uint64_t group_pos = 0;
    std::uint64_t group_neg = 0;
    std::size_t j = i;
    while (j < m && ranked.marginals[static_cast<std::size_t>(ranked.order[j])] == value) {
      if (truth.bits[static_cast<std::size_t>(ranked.order[j])])
        ++group_pos;
      else
        ++group_neg;
      ++j;
    }
    negatives_below -= group_neg;
    numerator2 += group_pos * (2 * negatives_below + group_neg);
    i = j;
  }
  return static_cast<double>(numerator2) / (2.0 * static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

EpisodeRecord run_episode(const ExperimentConfig& config, const BipartiteDiagnosisGraph& graph,
                          const QmrDtNoiseModel& model, SelectorId selector,
                          std::int32_t realization) {
  const auto r = static_cast<std::uint64_t>(realization);
  const auto sel = static_cast<std::uint64_t>(selector);
  Rng truth_rng = make_rng(derive_seed(config.seed, kStreamTruth, r));
  Rng response_rng = make_rng(derive_seed(config.seed, kStreamResponse, r, sel));
  Rng tie_rng = make_rng(derive_seed(config.seed, kStreamTies, r, sel));

  EpisodeRecord record;
  record.realization = realization;
  record.selector = selector;

  // Ground truth is multi-fault even though the selectors reason under the
  // single-fault assumption. The truth stream does not depend on the
  // selector, so curves across selectors are paired per realization.
  const StateVector truth = sample_state(model, truth_rng);
  record.fault_indices = truth.fault_indices();
  const bool degenerate =
      record.fault_indices.empty() ||
      record.fault_indices.size() == truth.bits.size();
  if (degenerate) {
    record.skipped = true;
    record.steps.push_back(StepRecord{});  // counted, not silently dropped
    return record;
  }

  const ExactOracleOptions oracle_options{config.oracle_size_limit, false};
  BeliefUpdateOptions update_options;
  if (config.likelihood_floor) update_options.likelihood_floor = 1e-300;

  SingleFaultBelief belief = init_belief(model, graph);
  ObservationLog observations;
  std::vector<std::int32_t> candidates(static_cast<std::size_t>(graph.num_queries));
  for (std::int32_t j = 0; j < graph.num_queries; ++j)
    candidates[static_cast<std::size_t>(j)] = j;

  auto record_metrics = [&](StepRecord& step) {
    const RankedEstimate ranked = rank_objects(belief.posterior(), tie_rng);
    step.empirical_auc = empirical_auc(ranked, truth);
    step.estimated_auc = auc_estimate(ranked, AucMethod::upper_rect).area_under;
    if (oracle_mode(selector))
      step.exact_entropy = exact_conditional_entropy(model, graph, observations, oracle_options);
  };

  StepRecord baseline;
  baseline.step = 0;
  record_metrics(baseline);
  record.steps.push_back(baseline);

  const std::int32_t budget = std::min(config.budget, graph.num_queries);
  for (std::int32_t t = 1; t <= budget; ++t) {
    StepRecord step;
    step.step = t;

    const std::int64_t started = now_us();
    std::int32_t query = -1;
    switch (selector) {
      case SelectorId::auc_sf:
        query = select_query_auc(belief, model, graph, candidates, tie_rng);
        break;
      case SelectorId::entropy_sf:
        query = select_query_entropy_sf(belief, model, graph, candidates, tie_rng);
        break;
      case SelectorId::exact_entropy:
        query = select_query_exact_entropy(model, graph, observations, candidates, tie_rng,
                                           oracle_options);
        break;
      case SelectorId::exact_auc:
        query = select_query_auc_exact(model, graph, observations, candidates, tie_rng,
                                       oracle_options);
        break;
      case SelectorId::random:
        query = candidates[static_cast<std::size_t>(uniform_below(tie_rng, candidates.size()))];
        break;
    }
    if (config.record_timings) step.select_time_us = now_us() - started;

    const std::int32_t response = sample_response(model, graph, query, truth, response_rng);
    step.query = query;
    step.response = response;
    try {
      belief = update_belief(belief, model, graph, query, response, update_options);
    } catch (const ContradictoryEvidenceError& err) {
      record.abort_reason = err.what();
      break;
    }
    observations.append(query, response);
    candidates.erase(std::find(candidates.begin(), candidates.end(), query));

    record_metrics(step);
    record.steps.push_back(step);
  }
  return record;
}

namespace {

void append_csv_row(std::string& csv, const EpisodeRecord& episode, const StepRecord& step) {
  csv += std::to_string(episode.realization);
  csv += ',';
  csv += std::to_string(step.step);
  csv += ',';
  csv += selector_name(episode.selector);
  csv += ',';
  if (step.query) csv += std::to_string(*step.query);
  csv += ',';
  if (step.response) csv += std::to_string(*step.response);
  csv += ',';
  if (step.empirical_auc) csv += format_double(*step.empirical_auc);
  csv += ',';
  if (step.estimated_auc) csv += format_double(*step.estimated_auc);
  csv += ',';
  if (step.exact_entropy) csv += format_double(*step.exact_entropy);
  csv += ',';
  if (step.select_time_us) csv += std::to_string(*step.select_time_us);
  csv += '\n';
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.realizations < 1) throw std::invalid_argument("realizations must be at least 1");
  if (config.selectors.empty()) throw std::invalid_argument("no selectors configured");

  BipartiteDiagnosisGraph graph;
  QmrDtNoiseModel model;
  if (!config.graph_file.empty()) {
    auto loaded = load_graph(std::filesystem::path(config.graph_file));
    graph = std::move(loaded.first);
    model = std::move(loaded.second);
  } else {
    Rng graph_rng = make_rng(derive_seed(config.seed, kStreamGraph));
    graph = generate_pa_bdg(config.num_objects, config.num_queries, config.edges_per_query,
                            graph_rng);
    model = QmrDtNoiseModel::broadcast(graph, config.prior, 1.0 - config.leak,
                                       config.inhibition);
  }
  if (config.budget < 0 || config.budget > graph.num_queries)
    throw std::invalid_argument("budget must lie in [0, num_queries]");
  for (SelectorId id : config.selectors) {
    if (oracle_mode(id) && graph.num_objects > config.oracle_size_limit)
      throw std::invalid_argument(std::string(selector_name(id)) + " requires num_objects <= " +
                                  std::to_string(config.oracle_size_limit));
  }

  // One job per (realization, selector), merged back in job order.
  const std::size_t per_realization = config.selectors.size();
  const std::size_t total =
      static_cast<std::size_t>(config.realizations) * per_realization;
  ExperimentResult result;
  result.episodes.resize(total);

  unsigned n_threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(total));
  std::atomic<std::size_t> next_job{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t job = next_job.fetch_add(1); job < total; job = next_job.fetch_add(1)) {
      try {
        const auto realization = static_cast<std::int32_t>(job / per_realization);
        const SelectorId selector = config.selectors[job % per_realization];
        result.episodes[job] = run_episode(config, graph, model, selector, realization);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.episodes_csv =
      "realization,step,selector,query,response,empirical_auc,estimated_auc,exact_entropy,"
      "select_time_us\n";
  for (const EpisodeRecord& episode : result.episodes) {
    if (episode.skipped) ++result.skipped_episodes;
    for (const StepRecord& step : episode.steps) append_csv_row(result.episodes_csv, episode, step);
  }

  result.summary_csv = "selector,step,mean_auc,stderr_auc,episodes\n";
  for (SelectorId selector : config.selectors) {
    for (std::int32_t t = 1; t <= config.budget; ++t) {
      double sum = 0.0;
      double sum_sq = 0.0;
      std::int64_t n = 0;
      for (const EpisodeRecord& episode : result.episodes) {
        if (episode.selector != selector || episode.skipped) continue;
        if (static_cast<std::size_t>(t) >= episode.steps.size()) continue;
        const auto& auc = episode.steps[static_cast<std::size_t>(t)].empirical_auc;
        if (!auc) continue;
        sum += *auc;
        sum_sq += *auc * *auc;
        ++n;
      }
      const double mean = n > 0 ? sum / static_cast<double>(n) : 0.0;
      double stderr_auc = 0.0;
      if (n > 1) {
        const double var =
            std::max(0.0, (sum_sq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1));
        stderr_auc = std::sqrt(var / static_cast<double>(n));
      }
      result.summary_csv += std::string(selector_name(selector)) + ',' + std::to_string(t) + ',' +
                            format_double(mean) + ',' + format_double(stderr_auc) + ',' +
                            std::to_string(n) + '\n';
    }
  }

  std::ostringstream meta;
  meta << "seed=" << config.seed << '\n';
  if (!config.graph_file.empty()) {
    meta << "graph_file=" << config.graph_file << '\n';
  } else {
    meta << "generator=pa num_objects=" << graph.num_objects
         << " num_queries=" << graph.num_queries
         << " edges_per_query=" << config.edges_per_query << '\n';
    meta << "prior=" << format_double(config.prior) << " leak=" << format_double(config.leak)
         << " inhibition=" << format_double(config.inhibition) << '\n';
  }
  meta << "selectors=";
  for (std::size_t i = 0; i < config.selectors.size(); ++i) {
    if (i) meta << ',';
    meta << selector_name(config.selectors[i]);
  }
  meta << '\n';
  meta << "budget=" << config.budget << '\n';
  meta << "realizations=" << config.realizations << '\n';
  meta << "likelihood_floor=" << (config.likelihood_floor ? "1e-300" : "off") << '\n';
  meta << "record_timings=" << (config.record_timings ? "on" : "off") << '\n';
  meta << "kernels=" << kern::active_implementation() << '\n';
  meta << "skipped_episodes=" << result.skipped_episodes << '\n';
  result.metadata = meta.str();
  return result;
}

std::vector<TimingRow> timing_probe(std::span<const std::int32_t> sizes, std::uint64_t seed,
                                    std::int32_t repetitions) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  std::vector<TimingRow> rows;
  rows.reserve(sizes.size());
  for (std::int32_t m : sizes) {
    Rng graph_rng = make_rng(derive_seed(seed, kStreamGraph, static_cast<std::uint64_t>(m)));
    const BipartiteDiagnosisGraph graph = generate_pa_bdg(m, m, std::min(m, 3), graph_rng);
    const QmrDtNoiseModel model = QmrDtNoiseModel::broadcast(graph, 0.03, 0.95, 0.05);
    const SingleFaultBelief belief = init_belief(model, graph);
    std::vector<std::int32_t> candidates(static_cast<std::size_t>(graph.num_queries));
    for (std::int32_t j = 0; j < graph.num_queries; ++j)
      candidates[static_cast<std::size_t>(j)] = j;

    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repetitions));
    for (std::int32_t rep = -1; rep < repetitions; ++rep) {  // rep -1 is warmup
      Rng tie_rng = make_rng(derive_seed(seed, kStreamTies, static_cast<std::uint64_t>(m),
                                         static_cast<std::uint64_t>(rep + 1)));
      const auto started = std::chrono::steady_clock::now();
      volatile std::int32_t chosen =
          select_query_auc(belief, model, graph, candidates, tie_rng);
      (void)chosen;
      const auto elapsed = std::chrono::steady_clock::now() - started;
      if (rep >= 0)
        samples.push_back(
            std::chrono::duration_cast<std::chrono::duration<double, std::micro>>(elapsed)
                .count());
    }
    std::sort(samples.begin(), samples.end());
    rows.push_back({m, samples[(samples.size() - 1) / 2]});
  }
  return rows;
}

}  // namespace aucdiag
