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

#include <filesystem>
#include <iosfwd>
#include <utility>

#include "aucdiag/types.hpp"

namespace aucdiag {

// "BDG v1": line-oriented UTF-8 text with '\n' newlines and 0-based indices.
//   line 1:        BDG v1 <M> <N>
//   lines 2..N+1:  Q <j> <rho0> <k1>:<rho1> <k2>:<rho2> ...
//   line N+2:      PRIOR <a0> <a1> ... <a_{M-1}>
// Probabilities are written with 17 significant digits, so a save/load
// round trip reproduces every double exactly.

void save_graph(const BipartiteDiagnosisGraph& graph, const QmrDtNoiseModel& model,
                std::ostream& out);
void save_graph(const BipartiteDiagnosisGraph& graph, const QmrDtNoiseModel& model,
                const std::filesystem::path& destination);

/// Throws ParseError (with the offending line number) on malformed input.
std::pair<BipartiteDiagnosisGraph, QmrDtNoiseModel> load_graph(std::istream& in);
std::pair<BipartiteDiagnosisGraph, QmrDtNoiseModel> load_graph(
    const std::filesystem::path& source);

}  // namespace aucdiag
