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

// NEON kernels. AdvSIMD is baseline on aarch64, so no runtime feature probe
// is needed beyond the architecture check.

#include "kernel_table.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace aucdiag::kern {
namespace {

double sum_neon(const double* v, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(v + i));
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += v[i];
  return r;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double sum_squares_neon(const double* v, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t x = vld1q_f64(v + i);
    acc = vfmaq_f64(acc, x, x);
  }
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += v[i] * v[i];
  return r;
}

double max_value_neon(const double* v, std::size_t n) {
  double r = v[0];
  std::size_t i = 0;
  if (n >= 2) {
    float64x2_t acc = vld1q_f64(v);
    for (i = 2; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vld1q_f64(v + i));
    r = vmaxvq_f64(acc);
  }
  for (; i < n; ++i) {
    if (v[i] > r) r = v[i];
  }
  return r;
}

void scale_neon(const double* in, double c, double* out, std::size_t n) {
  const float64x2_t cv = vdupq_n_f64(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(cv, vld1q_f64(in + i)));
  for (; i < n; ++i) out[i] = c * in[i];
}

void subtract_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

double rank_moment_neon(const double* v, std::size_t n) {
  // Same (2i - n) * v_i terms as the scalar reference, vector summation
  // order only.
  const double nd = static_cast<double>(n);
  const float64x2_t nvec = vdupq_n_f64(nd);
  const float64x2_t step = vdupq_n_f64(2.0);
  float64x2_t idx = {0.0, 1.0};
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t weight = vsubq_f64(vaddq_f64(idx, idx), nvec);
    acc = vfmaq_f64(acc, weight, vld1q_f64(v + i));
    idx = vaddq_f64(idx, step);
  }
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += (2.0 * static_cast<double>(i) - nd) * v[i];
  return r;
}

}  // namespace

const KernelTable* neon_table() {
  static const KernelTable table{
      "neon",         sum_neon,   dot_neon,      sum_squares_neon,
      max_value_neon, scale_neon, subtract_neon, rank_moment_neon,
  };
  return &table;
}

}  // namespace aucdiag::kern

#else

namespace aucdiag::kern {
const KernelTable* neon_table() { return nullptr; }
}  // namespace aucdiag::kern

#endif
