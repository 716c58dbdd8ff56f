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

#pragma once

#include <cstddef>

#include "nrsense/common.hpp"

namespace nrsense::kern {

// Element-wise kernels behind the sample-stream hot loops. Each has a scalar
// reference implementation and, where the target supports it, an AVX2 variant.
// The active variant is picked once at startup from CPU features; tests pin a
// backend explicitly to check scalar/SIMD equivalence.

enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_supported(Backend b);

/// Pin the dispatch to one backend. Throws ConfigError if unsupported on this
/// host. Not safe to call while kernels run on other threads.
void force_backend(Backend b);

/// dst[i] = a[i] * b[i]. Aliasing dst with a or b is allowed.
void cv_mul(const cf64* a, const cf64* b, cf64* dst, std::size_t n);

/// dst[i] = s * x[i]. Aliasing dst with x is allowed.
void cv_scale(cf64 s, const cf64* x, cf64* dst, std::size_t n);

/// dst[i] = |x[i]|^2.
void cv_abs2(const cf64* x, double* dst, std::size_t n);

/// Returns sum_i |x[i]|^2.
double cv_energy(const cf64* x, std::size_t n);

}  // namespace nrsense::kern
