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

#include "kernels_detail.hpp"

namespace nrsense::kern::detail {

namespace {

void mul_scalar(const cf64* a, const cf64* b, cf64* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = a[i] * b[i];
  }
}

void scale_scalar(cf64 s, const cf64* x, cf64* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = s * x[i];
  }
}

void abs2_scalar(const cf64* x, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
}

double energy_scalar(const cf64* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

}  // namespace

const Vtable scalar_vtable = {mul_scalar, scale_scalar, abs2_scalar, energy_scalar};

}  // namespace nrsense::kern::detail
