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

#include <span>
#include <string_view>
#include <vector>

// Dense double-precision inner loops shared by the belief and selection hot
// paths. Every kernel has a scalar reference implementation plus SIMD
// variants (AVX2 on x86-64, NEON on aarch64) selected at runtime. The active
// variant can be forced through force_implementation() or the
// AUCDIAG_KERNELS environment variable ("scalar", "avx2", "neon").
//
// SIMD variants may reassociate sums and use FMA, so results can differ from
// the scalar reference by a few ulps. Within one process the selection is
// fixed, so all outputs stay deterministic for a given seed.
namespace aucdiag::kern {

double sum(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
double sum_squares(std::span<const double> v);

/// Maximum element. v must be non-empty; -inf entries are permitted.
double max_value(std::span<const double> v);

/// out[i] = c * in[i]. in and out may alias exactly.
void scale(std::span<const double> in, double c, std::span<double> out);

/// out[i] = a[i] - b[i]. Aliasing with either input is allowed.
void subtract(std::span<const double> a, std::span<const double> b, std::span<double> out);

/// sum_i (2i - n) * v[i] for i in [0, n). With v sorted in nonincreasing
/// order this is the rank-weighted moment used by the closed-form ROC-area
/// expression.
double rank_moment(std::span<const double> v);

std::string_view active_implementation();
std::vector<std::string_view> available_implementations();

/// Selects a kernel implementation by name; throws std::invalid_argument if
/// the name is unknown or unsupported on this machine.
void force_implementation(std::string_view name);

}  // namespace aucdiag::kern
