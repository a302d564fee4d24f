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

// AVX2+FMA kernels. Built with per-function target attributes so the rest of
// the library keeps the baseline ISA; the dispatcher only hands out this
// table when cpuid reports avx2 and fma.

#include "kernel_table.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <limits>

namespace aucdiag::kern {
namespace {

#define AUCDIAG_AVX2 __attribute__((target("avx2,fma")))

AUCDIAG_AVX2 double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

AUCDIAG_AVX2 double sum_avx2(const double* v, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += v[i];
  return r;
}

AUCDIAG_AVX2 double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double r = hsum(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

AUCDIAG_AVX2 double sum_squares_avx2(const double* v, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(v + i);
    acc = _mm256_fmadd_pd(x, x, acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += v[i] * v[i];
  return r;
}

AUCDIAG_AVX2 double max_value_avx2(const double* v, std::size_t n) {
  std::size_t i = 0;
  double r = -std::numeric_limits<double>::infinity();
  if (n >= 4) {
    __m256d acc = _mm256_loadu_pd(v);
    for (i = 4; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(v + i));
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    lo = _mm_max_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    r = _mm_cvtsd_f64(_mm_max_sd(lo, swapped));
  }
  for (; i < n; ++i) {
    if (v[i] > r) r = v[i];
  }
  return r;
}

AUCDIAG_AVX2 void scale_avx2(const double* in, double c, double* out, std::size_t n) {
  const __m256d cv = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(cv, _mm256_loadu_pd(in + i)));
  for (; i < n; ++i) out[i] = c * in[i];
}

AUCDIAG_AVX2 void subtract_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

AUCDIAG_AVX2 double rank_moment_avx2(const double* v, std::size_t n) {
  // Same (2i - n) * v_i terms as the scalar reference; only the summation
  // order differs, which keeps the two variants tightly comparable even when
  // the terms cancel.
  const double nd = static_cast<double>(n);
  const __m256d nvec = _mm256_set1_pd(nd);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d step = _mm256_set1_pd(4.0);
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d weight = _mm256_fmsub_pd(two, idx, nvec);
    acc = _mm256_fmadd_pd(weight, _mm256_loadu_pd(v + i), acc);
    idx = _mm256_add_pd(idx, step);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += (2.0 * static_cast<double>(i) - nd) * v[i];
  return r;
}

#undef AUCDIAG_AVX2

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{
      "avx2",         sum_avx2,   dot_avx2,      sum_squares_avx2,
      max_value_avx2, scale_avx2, subtract_avx2, rank_moment_avx2,
  };
  return &table;
}

}  // namespace aucdiag::kern

#else

namespace aucdiag::kern {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace aucdiag::kern

#endif
