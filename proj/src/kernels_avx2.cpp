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

// AVX2 + FMA variants. Compiled with -mavx2 -mfma; only reached when the
// dispatcher has confirmed CPU support at runtime. One __m256d holds two
// complex doubles as [re0, im0, re1, im1].

#include <immintrin.h>

#include "kernels_detail.hpp"

namespace nrsense::kern::detail {

namespace {

// [a0*b0, a1*b1] for packed complex doubles.
inline __m256d cmul256(__m256d a, __m256d b) {
  __m256d b_re = _mm256_movedup_pd(b);          // [br0, br0, br1, br1]
  __m256d b_im = _mm256_permute_pd(b, 0xF);     // [bi0, bi0, bi1, bi1]
  __m256d a_sw = _mm256_permute_pd(a, 0x5);     // [ai0, ar0, ai1, ar1]
  // even lanes: ar*br - ai*bi, odd lanes: ai*br + ar*bi
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

void mul_avx2(const cf64* a, const cf64* b, cf64* dst, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double* pd = reinterpret_cast<double*>(dst);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(pd + 2 * i, cmul256(va, vb));
  }
  for (; i < n; ++i) {
    dst[i] = a[i] * b[i];
  }
}

void scale_avx2(cf64 s, const cf64* x, cf64* dst, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* pd = reinterpret_cast<double*>(dst);
  __m256d vs = _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    _mm256_storeu_pd(pd + 2 * i, cmul256(vx, vs));
  }
  for (; i < n; ++i) {
    dst[i] = s * x[i];
  }
}

void abs2_avx2(const cf64* x, double* dst, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v0 = _mm256_loadu_pd(px + 2 * i);      // z0, z1
    __m256d v1 = _mm256_loadu_pd(px + 2 * i + 4);  // z2, z3
    __m256d s0 = _mm256_mul_pd(v0, v0);
    __m256d s1 = _mm256_mul_pd(v1, v1);
    // hadd interleaves 128-bit lanes: [|z0|2, |z2|2, |z1|2, |z3|2]
    __m256d h = _mm256_hadd_pd(s0, s1);
    h = _mm256_permute4x64_pd(h, 0xD8);
    _mm256_storeu_pd(dst + i, h);
  }
  for (; i < n; ++i) {
    dst[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
}

double energy_avx2(const cf64* x, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(px + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    sum += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return sum;
}

}  // namespace

const Vtable avx2_vtable = {mul_avx2, scale_avx2, abs2_avx2, energy_avx2};

}  // namespace nrsense::kern::detail
