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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aucdiag/harness.hpp"
#include "aucdiag/io.hpp"
#include "aucdiag/kernels.hpp"
#include "aucdiag/netgen.hpp"
#include "aucdiag/rng.hpp"
#include "aucdiag/types.hpp"

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

int run_gen(std::int32_t objects, std::int32_t queries, std::int32_t edges, double prior,
            double leak, double inhibition, std::uint64_t seed, const std::string& out_path) {
  aucdiag::Rng rng = aucdiag::make_rng(seed);
  const auto graph = aucdiag::generate_pa_bdg(objects, queries, edges, rng);
  const auto model = aucdiag::QmrDtNoiseModel::broadcast(graph, prior, 1.0 - leak, inhibition);
  aucdiag::save_graph(graph, model, std::filesystem::path(out_path));
  std::cout << "wrote " << out_path << " (" << objects << " objects, " << queries
            << " queries)\n";
  return 0;
}

int run_experiment_cmd(const aucdiag::ExperimentConfig& config, const std::string& out_prefix) {
  const aucdiag::ExperimentResult result = aucdiag::run_experiment(config);
  const std::string episodes_path = out_prefix + "_episodes.csv";
  const std::string summary_path = out_prefix + "_summary.csv";
  const std::string meta_path = out_prefix + "_meta.txt";
  write_file(episodes_path, result.episodes_csv);
  write_file(summary_path, result.summary_csv);
  write_file(meta_path, result.metadata);
  std::cout << "wrote " << episodes_path << ", " << summary_path << ", " << meta_path << '\n';
  std::cout << "episodes: " << result.episodes.size() << " (skipped " << result.skipped_episodes
            << " with degenerate ground truth)\n";
  return 0;
}

int run_time(const std::vector<std::int32_t>& sizes, std::uint64_t seed, std::int32_t reps,
             const std::string& out_path) {
  const auto rows = aucdiag::timing_probe(sizes, seed, reps);
  std::string csv = "num_objects,median_select_us\n";
  for (const auto& row : rows)
    csv += std::to_string(row.num_objects) + ',' + std::to_string(row.median_select_us) + '\n';
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file(out_path, csv);
    std::cout << "wrote " << out_path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active fault diagnosis on noisy-OR bipartite networks"};
  app.require_subcommand(1);

  std::string kernels;
  app.add_option("--kernels", kernels,
                 "Force a kernel implementation (scalar, avx2, neon); default auto-detects");

  // gen: write a random PA graph with broadcast noise parameters.
  auto* gen = app.add_subcommand("gen", "Generate a preferential-attachment graph file");
  std::int32_t gen_objects = 300;
  std::int32_t gen_queries = 300;
  std::int32_t gen_edges = 3;
  double gen_prior = 0.03;
  double gen_leak = 0.05;
  double gen_inhibition = 0.05;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--objects", gen_objects, "Number of objects (M)")->capture_default_str();
  gen->add_option("--queries", gen_queries, "Number of queries (N)")->capture_default_str();
  gen->add_option("--edges-per-query", gen_edges, "Edges attached per query")
      ->capture_default_str();
  gen->add_option("--prior", gen_prior, "Prior fault probability per object")
      ->capture_default_str();
  gen->add_option("--leak", gen_leak, "Spontaneous alarm probability (1 - rho0)")
      ->capture_default_str();
  gen->add_option("--inhibition", gen_inhibition, "Missed-detection probability per edge")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (BDG v1)")->required();

  // run: simulate episodes and write CSVs.
  auto* run = app.add_subcommand("run", "Run a diagnosis experiment");
  aucdiag::ExperimentConfig config;
  std::vector<std::string> selector_names{"auc_sf"};
  std::string run_out = "experiment";
  run->add_option("--graph", config.graph_file,
                  "Load graph and noise model from a BDG v1 file (otherwise generate)");
  run->add_option("--objects", config.num_objects, "Generated graph: number of objects")
      ->capture_default_str();
  run->add_option("--queries", config.num_queries, "Generated graph: number of queries")
      ->capture_default_str();
  run->add_option("--edges-per-query", config.edges_per_query,
                  "Generated graph: edges attached per query")
      ->capture_default_str();
  run->add_option("--prior", config.prior, "Prior fault probability per object")
      ->capture_default_str();
  run->add_option("--leak", config.leak, "Spontaneous alarm probability (1 - rho0)")
      ->capture_default_str();
  run->add_option("--inhibition", config.inhibition, "Missed-detection probability per edge")
      ->capture_default_str();
  run->add_option("--selector", selector_names,
                  "Selector(s): auc_sf, entropy_sf, exact_entropy, exact_auc, random "
                  "(repeatable; all run on the same realizations)")
      ->capture_default_str();
  run->add_option("--budget", config.budget, "Queries per episode (k)")->capture_default_str();
  run->add_option("--realizations", config.realizations, "Episodes per selector (R)")
      ->capture_default_str();
  run->add_option("--seed", config.seed, "Master seed")->required();
  run->add_flag("--likelihood-floor", config.likelihood_floor,
                "Floor likelihoods at 1e-300 instead of aborting on contradictory evidence");
  run->add_option("--oracle-size-limit", config.oracle_size_limit,
                  "Brute-force state-enumeration limit for exact_* selectors")
      ->capture_default_str();
  run->add_flag("--timings", config.record_timings,
                "Record per-selection wall times (makes outputs non-reproducible)");
  run->add_option("--threads", config.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  run->add_option("--out", run_out, "Output path prefix")->capture_default_str();

  // time: wall-time probe of the AUC selector.
  auto* time_cmd = app.add_subcommand("time", "Measure select time vs network size");
  std::vector<std::int32_t> time_sizes{10, 250, 500, 1000, 2000};
  std::uint64_t time_seed = 1;
  std::int32_t time_reps = 5;
  std::string time_out;
  time_cmd->add_option("--sizes", time_sizes, "Network sizes M (N = M)")->capture_default_str();
  time_cmd->add_option("--seed", time_seed, "Seed for graph generation")->capture_default_str();
  time_cmd->add_option("--reps", time_reps, "Timed repetitions per size")->capture_default_str();
  time_cmd->add_option("--out", time_out, "Output CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!kernels.empty()) aucdiag::kern::force_implementation(kernels);
    if (gen->parsed())
      return run_gen(gen_objects, gen_queries, gen_edges, gen_prior, gen_leak, gen_inhibition,
                     gen_seed, gen_out);
    if (run->parsed()) {
      config.selectors.clear();
      for (const std::string& name : selector_names) {
        const auto id = aucdiag::parse_selector(name);
        if (!id) {
          std::cerr << "error: unknown selector '" << name << "'\n";
          return 2;
        }
        config.selectors.push_back(*id);
      }
      return run_experiment_cmd(config, run_out);
    }
    if (time_cmd->parsed()) return run_time(time_sizes, time_seed, time_reps, time_out);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
