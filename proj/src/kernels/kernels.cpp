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

#include "aucdiag/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernel_table.hpp"

namespace aucdiag::kern {
namespace {

const KernelTable* lookup(std::string_view name) {
  if (name == "scalar") return &scalar_table();
  if (name == "avx2") return avx2_table();
  if (name == "neon") return neon_table();
  return nullptr;
}

bool runtime_supported(const KernelTable* table) {
  if (table == nullptr) return false;
#if defined(__x86_64__) || defined(_M_X64)
  if (table == avx2_table())
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#endif
  return true;
}

const KernelTable* pick_default() {
  if (const char* env = std::getenv("AUCDIAG_KERNELS")) {
    const KernelTable* requested = lookup(env);
    if (!runtime_supported(requested))
      throw std::invalid_argument("AUCDIAG_KERNELS=" + std::string(env) +
                                  " is unknown or unsupported on this machine");
    return requested;
  }
  if (runtime_supported(avx2_table())) return avx2_table();
  if (runtime_supported(neon_table())) return neon_table();
  return &scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = pick_default();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

}  // namespace

double sum(std::span<const double> v) { return active().sum(v.data(), v.size()); }

double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

double sum_squares(std::span<const double> v) {
  return active().sum_squares(v.data(), v.size());
}

double max_value(std::span<const double> v) {
  return active().max_value(v.data(), v.size());
}

void scale(std::span<const double> in, double c, std::span<double> out) {
  active().scale(in.data(), c, out.data(), in.size());
}

void subtract(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  active().subtract(a.data(), b.data(), out.data(), a.size());
}

double rank_moment(std::span<const double> v) {
  return active().rank_moment(v.data(), v.size());
}

std::string_view active_implementation() { return active().name; }

std::vector<std::string_view> available_implementations() {
  std::vector<std::string_view> names{"scalar"};
  if (runtime_supported(avx2_table())) names.emplace_back("avx2");
  if (runtime_supported(neon_table())) names.emplace_back("neon");
  return names;
}

void force_implementation(std::string_view name) {
  const KernelTable* requested = lookup(name);
  if (!runtime_supported(requested))
    throw std::invalid_argument("kernel implementation '" + std::string(name) +
                                "' is unknown or unsupported on this machine");
  g_active.store(requested, std::memory_order_release);
}

}  // namespace aucdiag::kern
