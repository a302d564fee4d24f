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

#include "aucdiag/belief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "aucdiag/errors.hpp"
#include "aucdiag/kernels.hpp"

namespace aucdiag {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_query(const BipartiteDiagnosisGraph& graph, std::int32_t query) {
  if (query < 0 || query >= graph.num_queries)
    throw std::out_of_range("query id " + std::to_string(query) + " out of range");
}

void check_response(std::int32_t response) {
  if (response != 0 && response != 1) throw std::invalid_argument("response must be 0 or 1");
}

double floored_log(double p, double floor) { return std::log(std::max(p, floor)); }

}  // namespace

bool SingleFaultBelief::renormalize() {
  const double shift = kern::max_value(log_weights_);
  if (shift == kNegInf) return false;
  posterior_.resize(log_weights_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < log_weights_.size(); ++i) {
    const double e = std::exp(log_weights_[i] - shift);
    posterior_[i] = e;
    total += e;
  }
  kern::scale(posterior_, 1.0 / total, posterior_);
  return true;
}

SingleFaultBelief init_belief(const QmrDtNoiseModel& model,
                              const BipartiteDiagnosisGraph& graph) {
  const auto m = static_cast<std::size_t>(graph.num_objects);
  if (model.prior.size() != m)
    throw std::invalid_argument("prior length does not match num_objects");

  SingleFaultBelief b;
  b.log_weights_.assign(m, kNegInf);

  // Objects with prior exactly 1 need care: a second certain fault leaves
  // every single-fault state with zero prior mass.
  std::size_t certain = m;
  std::size_t certain_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (model.prior[i] >= 1.0) {
      certain = i;
      ++certain_count;
    }
  }
  if (certain_count > 1)
    throw DegeneratePriorError("multiple objects have prior 1; no single-fault state has mass");
  if (certain_count == 1) {
    b.log_weights_[certain] = 0.0;
  } else {
    for (std::size_t i = 0; i < m; ++i)
      b.log_weights_[i] = std::log(model.prior[i]) - std::log1p(-model.prior[i]);
  }

  if (!b.renormalize())
    throw DegeneratePriorError("all priors are zero; no single-fault hypothesis has mass");
  return b;
}

double single_fault_likelihood(const QmrDtNoiseModel& model,
                               const BipartiteDiagnosisGraph& graph, std::int32_t query,
                               std::int32_t response, std::int32_t hypothesis) {
  check_query(graph, query);
  check_response(response);
  if (hypothesis < 0 || hypothesis >= graph.num_objects)
    throw std::out_of_range("hypothesis index out of range");
  const auto j = static_cast<std::size_t>(query);
  double zero_prob = model.leak_complement[j];
  const auto& pa = graph.parents[j];
  for (std::size_t k = 0; k < pa.size(); ++k) {
    if (pa[k] == hypothesis) {
      zero_prob *= model.inhibition[j][k];
      break;
    }
  }
  return response == 0 ? zero_prob : 1.0 - zero_prob;
}

SingleFaultBelief update_belief(const SingleFaultBelief& belief, const QmrDtNoiseModel& model,
                                const BipartiteDiagnosisGraph& graph, std::int32_t query,
                                std::int32_t response, const BeliefUpdateOptions& options) {
  check_query(graph, query);
  check_response(response);
  const auto j = static_cast<std::size_t>(query);
  const double rho0 = model.leak_complement[j];
  const double floor = options.likelihood_floor;

  SingleFaultBelief out;
  out.log_weights_.resize(belief.log_weights_.size());

  // Non-parent hypotheses share one likelihood value; parents are patched.
  const double base = response == 0 ? rho0 : 1.0 - rho0;
  const double log_base = floored_log(base, floor);
  const auto& old = belief.log_weights_;
  for (std::size_t i = 0; i < old.size(); ++i) out.log_weights_[i] = old[i] + log_base;

  const auto& pa = graph.parents[j];
  const auto& inh = model.inhibition[j];
  for (std::size_t k = 0; k < pa.size(); ++k) {
    const double zero_prob = rho0 * inh[k];
    const double lik = response == 0 ? zero_prob : 1.0 - zero_prob;
    const auto i = static_cast<std::size_t>(pa[k]);
    out.log_weights_[i] = old[i] + floored_log(lik, floor);
  }

  if (!out.renormalize())
    throw ContradictoryEvidenceError(
        "observation (query " + std::to_string(query) + ", response " +
        std::to_string(response) + ") has likelihood zero under every hypothesis");
  return out;
}

std::pair<double, double> predictive_response_prob(const SingleFaultBelief& belief,
                                                   const QmrDtNoiseModel& model,
                                                   const BipartiteDiagnosisGraph& graph,
                                                   std::int32_t query) {
  check_query(graph, query);
  const auto j = static_cast<std::size_t>(query);
  std::vector<double> zero_lik(belief.posterior().size(), model.leak_complement[j]);
  const auto& pa = graph.parents[j];
  const auto& inh = model.inhibition[j];
  for (std::size_t k = 0; k < pa.size(); ++k)
    zero_lik[static_cast<std::size_t>(pa[k])] *= inh[k];
  double p0 = kern::dot(belief.posterior(), zero_lik);
  p0 = std::clamp(p0, 0.0, 1.0);
  return {p0, 1.0 - p0};
}

}  // namespace aucdiag
