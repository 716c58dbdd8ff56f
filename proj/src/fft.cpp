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

#include "nrsense/fft.hpp"

#include <bit>
#include <memory>
#include <unordered_map>
#include <utility>

#include "nrsense/kernels.hpp"

namespace nrsense {

namespace {

struct Pow2Plan {
  std::size_t n;
  std::vector<std::uint32_t> bitrev;
  std::vector<cf64> tw;  // forward twiddles exp(-j 2 pi k / n), k in [0, n/2)

  explicit Pow2Plan(std::size_t size) : n(size), bitrev(size), tw(size / 2) {
    const int bits = std::countr_zero(size);
    for (std::size_t i = 0; i < size; ++i) {
      std::size_t r = 0;
      for (int b = 0; b < bits; ++b) {
        r |= ((i >> b) & 1u) << (bits - 1 - b);
      }
      bitrev[i] = static_cast<std::uint32_t>(r);
    }
    for (std::size_t k = 0; k < size / 2; ++k) {
      tw[k] = std::polar(1.0, -2.0 * pi * static_cast<double>(k) / static_cast<double>(size));
    }
  }
};

const Pow2Plan& plan_for(std::size_t n) {
  thread_local std::unordered_map<std::size_t, std::unique_ptr<Pow2Plan>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<Pow2Plan>(n)).first;
  }
  return *it->second;
}

void fft_pow2(std::span<cf64> a, const Pow2Plan& p, bool inverse) {
  const std::size_t n = p.n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = p.bitrev[i];
    if (i < j) {
      std::swap(a[i], a[j]);
    }
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        cf64 w = p.tw[j * step];
        if (inverse) {
          w = std::conj(w);
        }
        const cf64 t = w * a[base + half + j];
        const cf64 u = a[base + j];
        a[base + j] = u + t;
        a[base + half + j] = u - t;
      }
    }
  }
}

// Arbitrary-length DFT as a chirp convolution. Chirp phases use the exact
// residue j^2 mod 2n so they stay accurate for large n.
void bluestein(std::span<cf64> data, FftDirection dir) {
  const std::size_t n = data.size();
  const std::size_t conv_len = std::bit_ceil(2 * n - 1);
  const double sign = dir == FftDirection::forward ? -1.0 : 1.0;

  std::vector<cf64> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t r = (static_cast<std::uint64_t>(j) * j) % (2 * n);
    chirp[j] = std::polar(1.0, sign * pi * static_cast<double>(r) / static_cast<double>(n));
  }

  std::vector<cf64> u(conv_len, cf64{});
  kern::cv_mul(data.data(), chirp.data(), u.data(), n);
  std::vector<cf64> v(conv_len, cf64{});
  v[0] = cf64{1.0, 0.0};
  for (std::size_t j = 1; j < n; ++j) {
    v[j] = std::conj(chirp[j]);
    v[conv_len - j] = std::conj(chirp[j]);
  }

  const Pow2Plan& p = plan_for(conv_len);
  fft_pow2(u, p, false);
  fft_pow2(v, p, false);
  kern::cv_mul(u.data(), v.data(), u.data(), conv_len);
  fft_pow2(u, p, true);
  kern::cv_scale(cf64{1.0 / static_cast<double>(conv_len), 0.0}, u.data(), u.data(), conv_len);

  kern::cv_mul(u.data(), chirp.data(), data.data(), n);
}

}  // namespace

void fft(std::span<cf64> data, FftDirection dir) {
  const std::size_t n = data.size();
  if (n <= 1) {
    return;
  }
  if (std::has_single_bit(n)) {
    fft_pow2(data, plan_for(n), dir == FftDirection::inverse);
  } else {
    bluestein(data, dir);
  }
}

std::vector<cf64> czt(std::span<const cf64> x, std::size_t m_out, double alpha, double omega) {
  if (m_out == 0) {
    return {};
  }
  const std::size_t k_in = x.size();
  if (k_in == 0) {
    return std::vector<cf64>(m_out, cf64{});
  }

  const std::size_t conv_len = std::bit_ceil(k_in + m_out - 1);
  const std::size_t j_max = std::max(k_in, m_out);
  std::vector<cf64> w_half(j_max);
  for (std::size_t j = 0; j < j_max; ++j) {
    const double jd = static_cast<double>(j);
    w_half[j] = std::polar(1.0, 0.5 * omega * jd * jd);
  }

  std::vector<cf64> u(conv_len, cf64{});
  for (std::size_t k = 0; k < k_in; ++k) {
    u[k] = x[k] * std::polar(1.0, alpha * static_cast<double>(k)) * w_half[k];
  }
  std::vector<cf64> v(conv_len, cf64{});
  for (std::size_t m = 0; m < m_out; ++m) {
    v[m] = std::conj(w_half[m]);
  }
  for (std::size_t j = 1; j < k_in; ++j) {
    v[conv_len - j] = std::conj(w_half[j]);
  }

  const Pow2Plan& p = plan_for(conv_len);
  fft_pow2(u, p, false);
  fft_pow2(v, p, false);
  kern::cv_mul(u.data(), v.data(), u.data(), conv_len);
  fft_pow2(u, p, true);

  std::vector<cf64> out(m_out);
  const double inv_len = 1.0 / static_cast<double>(conv_len);
  for (std::size_t m = 0; m < m_out; ++m) {
    out[m] = u[m] * inv_len * w_half[m];
  }
  return out;
}

}  // namespace nrsense
