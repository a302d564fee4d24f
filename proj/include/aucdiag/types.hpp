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
#include <string>
#include <vector>

namespace aucdiag {

/// Two-layer graph linking objects (possible faults) to queries (probes).
/// An edge means "this query is sensitive to this object". Object and query
/// indices are 0-based everywhere.
///
/// Graphs are immutable after construction and safe to share across threads.
struct BipartiteDiagnosisGraph {
  std::int32_t num_objects = 0;  // M
  std::int32_t num_queries = 0;  // N
  /// parents[j] lists the objects query j is connected to.
  std::vector<std::vector<std::int32_t>> parents;
  /// Cached max_j |parents[j]|.
  std::int32_t max_parent_degree = 0;

  /// Builds a graph and caches the maximum parent degree. Only structural
  /// sizes are enforced here; use validate() to check the full invariants.
  static BipartiteDiagnosisGraph make(std::int32_t num_objects, std::int32_t num_queries,
                                      std::vector<std::vector<std::int32_t>> parents);

  bool operator==(const BipartiteDiagnosisGraph&) const = default;
};

/// Noisy-OR parameters: Pr(Z_j = 0 | x) = leak_complement[j] * prod over
/// faulty parents k of inhibition[j][k']. The leak probability (spontaneous
/// alarm) is 1 - leak_complement[j]; inhibition is the per-edge missed
/// detection probability.
struct QmrDtNoiseModel {
  std::vector<double> prior;            // alpha_i, one per object
  std::vector<double> leak_complement;  // rho_0j, one per query
  /// inhibition[j][k'] pairs with graph.parents[j][k'], so the map is defined
  /// exactly on the edge set.
  std::vector<std::vector<double>> inhibition;

  /// Broadcasts scalar parameters over a graph's objects and edges.
  static QmrDtNoiseModel broadcast(const BipartiteDiagnosisGraph& graph, double prior,
                                   double leak_complement, double inhibition);

  bool operator==(const QmrDtNoiseModel&) const = default;
};

/// Binary object states; bits[i] == 1 means object i is faulty.
struct StateVector {
  std::vector<std::uint8_t> bits;

  std::vector<std::int32_t> fault_indices() const;
  bool operator==(const StateVector&) const = default;
};

struct Observation {
  std::int32_t query = 0;
  std::int32_t response = 0;  // 0 or 1
  bool operator==(const Observation&) const = default;
};

/// Ordered record of (query, response) pairs. Order is preserved so a
/// trajectory can be replayed; a query may appear at most once.
class ObservationLog {
 public:
  void append(std::int32_t query, std::int32_t response);
  bool contains(std::int32_t query) const;
  const std::vector<Observation>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Observation> entries_;
};

/// Checks every type invariant of the graph/model pair. Returns all
/// violations found, not just the first; an empty result means well-formed.
std::vector<std::string> validate(const BipartiteDiagnosisGraph& graph,
                                  const QmrDtNoiseModel& model);

}  // namespace aucdiag
