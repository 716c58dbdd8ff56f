// SPDX-License-Identifier: Apache-2.0
//
// nrsense - 5G NR SRS-based OFDM radar ranging, simulation and estimation
// Copyright (C) 2026 nrsense contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nrsense/kernels.hpp"

#include <atomic>

#include "kernels_detail.hpp"
#include "nrsense/errors.hpp"

namespace nrsense::kern {

namespace {

bool cpu_has_avx2() {
#if defined(NRSENSE_HAVE_AVX2_SOURCES)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const detail::Vtable* default_vtable() {
#if defined(NRSENSE_HAVE_AVX2_SOURCES)
  if (cpu_has_avx2()) {
    return &detail::avx2_vtable;
  }
#endif
  return &detail::scalar_vtable;
}

std::atomic<const detail::Vtable*> g_vtable{nullptr};

const detail::Vtable& table() {
  const detail::Vtable* t = g_vtable.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = default_vtable();
    g_vtable.store(t, std::memory_order_release);
  }
  return *t;
}

}  // namespace

Backend active_backend() {
  return &table() == &detail::scalar_vtable ? Backend::scalar : Backend::avx2;
}

bool backend_supported(Backend b) {
  return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

void force_backend(Backend b) {
  if (!backend_supported(b)) {
    throw ConfigError("kernel backend not supported on this host");
  }
  if (b == Backend::scalar) {
    g_vtable.store(&detail::scalar_vtable, std::memory_order_release);
  } else {
#if defined(NRSENSE_HAVE_AVX2_SOURCES)
    g_vtable.store(&detail::avx2_vtable, std::memory_order_release);
#endif
  }
}

void cv_mul(const cf64* a, const cf64* b, cf64* dst, std::size_t n) {
  table().mul(a, b, dst, n);
}

void cv_scale(cf64 s, const cf64* x, cf64* dst, std::size_t n) {
  table().scale(s, x, dst, n);
}

void cv_abs2(const cf64* x, double* dst, std::size_t n) {
  table().abs2(x, dst, n);
}

double cv_energy(const cf64* x, std::size_t n) {
  return table().energy(x, n);
}

}  // namespace nrsense::kern
