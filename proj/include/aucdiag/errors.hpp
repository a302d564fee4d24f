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

#include <stdexcept>
#include <string>

namespace aucdiag {

/// No single-fault hypothesis carries prior mass; a posterior cannot be formed.
class DegeneratePriorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every hypothesis assigns likelihood zero to an observation. Callers decide
/// whether to abort the realization or retry with a likelihood floor.
class ContradictoryEvidenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Marginals are all zero or all one, so the ROC error-rate denominators vanish.
class DegenerateMarginalsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance is too large for brute-force state enumeration.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph file. Carries the 1-based line number of the offending line
/// (0 when the problem is not attributable to a single line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace aucdiag
