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

#include <cstddef>

namespace aucdiag::kern {

struct KernelTable {
  const char* name;
  double (*sum)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_squares)(const double*, std::size_t);
  double (*max_value)(const double*, std::size_t);
  void (*scale)(const double*, double, double*, std::size_t);
  void (*subtract)(const double*, const double*, double*, std::size_t);
  double (*rank_moment)(const double*, std::size_t);
};

const KernelTable& scalar_table();

// Null when the variant is not compiled in for this target.
const KernelTable* avx2_table();
const KernelTable* neon_table();

}  // namespace aucdiag::kern
