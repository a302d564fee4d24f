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

// Reference kernels. Plain left-to-right accumulation; the SIMD variants are
// tested for agreement against these.

#include "kernel_table.hpp"

namespace aucdiag::kern {
namespace {

double sum_scalar(const double* v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += v[i];
  return acc;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_squares_scalar(const double* v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += v[i] * v[i];
  return acc;
}

double max_value_scalar(const double* v, std::size_t n) {
  double best = v[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i] > best) best = v[i];
  }
  return best;
}

void scale_scalar(const double* in, double c, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = c * in[i];
}

void subtract_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

double rank_moment_scalar(const double* v, std::size_t n) {
  const double nd = static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += (2.0 * static_cast<double>(i) - nd) * v[i];
  return acc;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      "scalar",        sum_scalar,      dot_scalar,      sum_squares_scalar,
      max_value_scalar, scale_scalar,   subtract_scalar, rank_moment_scalar,
  };
  return table;
}

}  // namespace aucdiag::kern
