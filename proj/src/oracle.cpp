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

#include "aucdiag/oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "aucdiag/errors.hpp"
#include "argmin.hpp"

namespace aucdiag {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::uint32_t checked_state_count(const BipartiteDiagnosisGraph& graph,
                                  const ExactOracleOptions& options) {
  if (graph.num_objects > options.size_limit)
    throw CapacityError("instance has " + std::to_string(graph.num_objects) +
                        " objects; brute-force limit is " + std::to_string(options.size_limit));
  if (graph.num_objects > 30) throw CapacityError("state enumeration capped at 30 objects");
  return std::uint32_t{1} << graph.num_objects;
}

double state_zero_prob(const QmrDtNoiseModel& model, const BipartiteDiagnosisGraph& graph,
                       std::int32_t query, std::uint32_t state) {
  const auto j = static_cast<std::size_t>(query);
  double p = model.leak_complement[j];
  const auto& pa = graph.parents[j];
  const auto& inh = model.inhibition[j];
  for (std::size_t k = 0; k < pa.size(); ++k) {
    if (state >> pa[k] & 1u) p *= inh[k];
  }
  return p;
}

// Unnormalized log posterior over all states; -inf marks zero mass.
std::vector<double> log_joint(const QmrDtNoiseModel& model, const BipartiteDiagnosisGraph& graph,
                              const ObservationLog& observations,
                              const ExactOracleOptions& options) {
  const std::uint32_t n_states = checked_state_count(graph, options);
  const auto m = static_cast<std::size_t>(graph.num_objects);
  for (const Observation& obs : observations.entries()) {
    if (obs.query < 0 || obs.query >= graph.num_queries)
      throw std::out_of_range("observation query id out of range");
  }

  std::vector<double> log_prior_one(m);
  std::vector<double> log_prior_zero(m);
  for (std::size_t i = 0; i < m; ++i) {
    log_prior_one[i] = std::log(model.prior[i]);
    log_prior_zero[i] = std::log1p(-model.prior[i]);
  }

  std::vector<double> lw(n_states, kNegInf);
  for (std::uint32_t s = 0; s < n_states; ++s) {
    if (options.single_fault_condition && std::popcount(s) != 1) continue;
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      acc += (s >> i & 1u) ? log_prior_one[i] : log_prior_zero[i];
    for (const Observation& obs : observations.entries()) {
      const double zero_prob = state_zero_prob(model, graph, obs.query, s);
      acc += std::log(obs.response == 0 ? zero_prob : 1.0 - zero_prob);
    }
    lw[s] = acc;
  }
  return lw;
}

ExactPosterior normalize(std::vector<double> lw, std::int32_t num_objects) {
  double shift = kNegInf;
  for (double w : lw) shift = std::max(shift, w);
  if (shift == kNegInf)
    throw ContradictoryEvidenceError("observations have zero probability under the model");
  ExactPosterior post;
  post.num_objects = num_objects;
  post.probs.resize(lw.size());
  double total = 0.0;
  for (std::size_t s = 0; s < lw.size(); ++s) {
    const double e = std::exp(lw[s] - shift);
    post.probs[s] = e;
    total += e;
  }
  const double inv = 1.0 / total;
  for (double& p : post.probs) p *= inv;
  return post;
}

double entropy_bits(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

bool lexicographically_smaller(std::uint32_t a, std::uint32_t b, std::int32_t m) {
  for (std::int32_t i = 0; i < m; ++i) {
    const auto ba = a >> i & 1u;
    const auto bb = b >> i & 1u;
    if (ba != bb) return ba < bb;
  }
  return false;
}

}  // namespace

ExactPosterior exact_posterior(const QmrDtNoiseModel& model,
                               const BipartiteDiagnosisGraph& graph,
                               const ObservationLog& observations,
                               const ExactOracleOptions& options) {
  return normalize(log_joint(model, graph, observations, options), graph.num_objects);
}

std::vector<double> exact_marginals(const QmrDtNoiseModel& model,
                                    const BipartiteDiagnosisGraph& graph,
                                    const ObservationLog& observations,
                                    const ExactOracleOptions& options) {
  const ExactPosterior post = exact_posterior(model, graph, observations, options);
  std::vector<double> marginals(static_cast<std::size_t>(graph.num_objects), 0.0);
  for (std::size_t s = 0; s < post.probs.size(); ++s) {
    for (std::size_t i = 0; i < marginals.size(); ++i) {
      if (s >> i & 1u) marginals[i] += post.probs[s];
    }
  }
  return marginals;
}

double exact_conditional_entropy(const QmrDtNoiseModel& model,
                                 const BipartiteDiagnosisGraph& graph,
                                 const ObservationLog& observations,
                                 const ExactOracleOptions& options) {
  const ExactPosterior post = exact_posterior(model, graph, observations, options);
  return entropy_bits(post.probs);
}

std::int32_t select_query_exact_entropy(const QmrDtNoiseModel& model,
                                        const BipartiteDiagnosisGraph& graph,
                                        const ObservationLog& observations,
                                        std::span<const std::int32_t> candidates,
                                        Rng& tiebreak_rng, const ExactOracleOptions& options) {
  if (candidates.empty()) throw std::invalid_argument("candidate set is empty");
  const ExactPosterior post = exact_posterior(model, graph, observations, options);
  const std::size_t n_states = post.probs.size();

  std::vector<double> zero_branch(n_states);
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (std::int32_t j : candidates) {
    if (j < 0 || j >= graph.num_queries)
      throw std::out_of_range("candidate query id out of range");
    double p_zero = 0.0;
    for (std::size_t s = 0; s < n_states; ++s) {
      zero_branch[s] = post.probs[s] * state_zero_prob(model, graph, j, static_cast<std::uint32_t>(s));
      p_zero += zero_branch[s];
    }
    const double p_one = 1.0 - p_zero;

    double expected = 0.0;
    if (p_zero > 0.0) {
      double h = 0.0;
      for (std::size_t s = 0; s < n_states; ++s) {
        const double q = zero_branch[s] / p_zero;
        if (q > 0.0) h -= q * std::log2(q);
      }
      expected += p_zero * h;
    }
    if (p_one > 0.0) {
      double h = 0.0;
      for (std::size_t s = 0; s < n_states; ++s) {
        const double q = (post.probs[s] - zero_branch[s]) / p_one;
        if (q > 0.0) h -= q * std::log2(q);
      }
      expected += p_one * h;
    }
    scores.push_back(expected);
  }
  const std::size_t pick =
      detail::argmin_with_ties(scores, detail::kSelectionTieTolerance, tiebreak_rng);
  return candidates[pick];
}

StateVector map_estimate(const QmrDtNoiseModel& model, const BipartiteDiagnosisGraph& graph,
                         const ObservationLog& observations,
                         const ExactOracleOptions& options) {
  const std::vector<double> lw = log_joint(model, graph, observations, options);
  double best = kNegInf;
  std::uint32_t best_state = 0;
  bool found = false;
  for (std::size_t s = 0; s < lw.size(); ++s) {
    if (lw[s] == kNegInf) continue;
    const auto state = static_cast<std::uint32_t>(s);
    if (!found || lw[s] > best ||
        (lw[s] == best && lexicographically_smaller(state, best_state, graph.num_objects))) {
      best = lw[s];
      best_state = state;
      found = true;
    }
  }
  if (!found)
    throw ContradictoryEvidenceError("observations have zero probability under the model");
  StateVector x;
  x.bits.resize(static_cast<std::size_t>(graph.num_objects));
  for (std::int32_t i = 0; i < graph.num_objects; ++i) x.bits[static_cast<std::size_t>(i)] = best_state >> i & 1u;
  return x;
}

}  // namespace aucdiag
