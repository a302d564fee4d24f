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

#include "aucdiag/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace aucdiag {

BipartiteDiagnosisGraph BipartiteDiagnosisGraph::make(
    std::int32_t num_objects, std::int32_t num_queries,
    std::vector<std::vector<std::int32_t>> parents) {
  if (num_objects <= 0) throw std::invalid_argument("num_objects must be positive");
  if (num_queries <= 0) throw std::invalid_argument("num_queries must be positive");
  if (parents.size() != static_cast<std::size_t>(num_queries))
    throw std::invalid_argument("parents must have one entry per query");
  BipartiteDiagnosisGraph g;
  g.num_objects = num_objects;
  g.num_queries = num_queries;
  g.parents = std::move(parents);
  std::size_t max_deg = 0;
  for (const auto& pa : g.parents) max_deg = std::max(max_deg, pa.size());
  g.max_parent_degree = static_cast<std::int32_t>(max_deg);
  return g;
}

QmrDtNoiseModel QmrDtNoiseModel::broadcast(const BipartiteDiagnosisGraph& graph, double prior,
                                           double leak_complement, double inhibition) {
  QmrDtNoiseModel m;
  m.prior.assign(static_cast<std::size_t>(graph.num_objects), prior);
  m.leak_complement.assign(static_cast<std::size_t>(graph.num_queries), leak_complement);
  m.inhibition.reserve(graph.parents.size());
  for (const auto& pa : graph.parents) m.inhibition.emplace_back(pa.size(), inhibition);
  return m;
}

std::vector<std::int32_t> StateVector::fault_indices() const {
  std::vector<std::int32_t> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(static_cast<std::int32_t>(i));
  }
  return out;
}

void ObservationLog::append(std::int32_t query, std::int32_t response) {
  if (query < 0) throw std::out_of_range("query id must be nonnegative");
  if (response != 0 && response != 1) throw std::invalid_argument("response must be 0 or 1");
  if (contains(query))
    throw std::invalid_argument("query " + std::to_string(query) + " already observed");
  entries_.push_back({query, response});
}

bool ObservationLog::contains(std::int32_t query) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [query](const Observation& o) { return o.query == query; });
}

namespace {

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

}  // namespace

std::vector<std::string> validate(const BipartiteDiagnosisGraph& graph,
                                  const QmrDtNoiseModel& model) {
  std::vector<std::string> violations;
  auto report = [&violations](std::string msg) { violations.push_back(std::move(msg)); };

  if (graph.num_objects <= 0) report("num_objects must be positive");
  if (graph.num_queries <= 0) report("num_queries must be positive");
  if (graph.parents.size() != static_cast<std::size_t>(graph.num_queries))
    report("parents has " + std::to_string(graph.parents.size()) + " entries, expected " +
           std::to_string(graph.num_queries));

  std::size_t max_deg = 0;
  for (std::size_t j = 0; j < graph.parents.size(); ++j) {
    const auto& pa = graph.parents[j];
    max_deg = std::max(max_deg, pa.size());
    std::unordered_set<std::int32_t> seen;
    for (std::int32_t k : pa) {
      if (k < 0 || k >= graph.num_objects)
        report("query " + std::to_string(j) + ": parent index " + std::to_string(k) +
               " out of range [0, " + std::to_string(graph.num_objects) + ")");
      if (!seen.insert(k).second)
        report("query " + std::to_string(j) + ": duplicate parent index " + std::to_string(k));
    }
  }
  if (graph.max_parent_degree != static_cast<std::int32_t>(max_deg))
    report("cached max_parent_degree " + std::to_string(graph.max_parent_degree) +
           " does not match recomputed value " + std::to_string(max_deg));

  if (model.prior.size() != static_cast<std::size_t>(graph.num_objects))
    report("prior has " + std::to_string(model.prior.size()) + " entries, expected " +
           std::to_string(graph.num_objects));
  for (std::size_t i = 0; i < model.prior.size(); ++i) {
    if (!is_probability(model.prior[i]))
      report("prior[" + std::to_string(i) + "] not in [0,1]");
  }

  if (model.leak_complement.size() != static_cast<std::size_t>(graph.num_queries))
    report("leak_complement has " + std::to_string(model.leak_complement.size()) +
           " entries, expected " + std::to_string(graph.num_queries));
  for (std::size_t j = 0; j < model.leak_complement.size(); ++j) {
    if (!is_probability(model.leak_complement[j]))
      report("leak_complement[" + std::to_string(j) + "] not in [0,1]");
  }

  // Inhibition must pair one-to-one with the edge set.
  if (model.inhibition.size() != graph.parents.size()) {
    report("inhibition has " + std::to_string(model.inhibition.size()) +
           " query entries, expected " + std::to_string(graph.parents.size()));
  } else {
    for (std::size_t j = 0; j < model.inhibition.size(); ++j) {
      if (model.inhibition[j].size() != graph.parents[j].size()) {
        report("query " + std::to_string(j) + ": " + std::to_string(model.inhibition[j].size()) +
               " inhibition entries for " + std::to_string(graph.parents[j].size()) + " edges");
        continue;
      }
      for (std::size_t k = 0; k < model.inhibition[j].size(); ++k) {
        if (!is_probability(model.inhibition[j][k]))
          report("inhibition[" + std::to_string(j) + "][" + std::to_string(k) + "] not in [0,1]");
      }
    }
  }

  return violations;
}

}  // namespace aucdiag
