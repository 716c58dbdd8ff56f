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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "nrsense/fft.hpp"
#include "test_util.hpp"

using namespace nrsense;

namespace {

// quadratic-time reference DFT
std::vector<cf64> dft_direct(const std::vector<cf64>& x, double sign) {
  const std::size_t n = x.size();
  std::vector<cf64> out(n, cf64{});
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      out[m] += x[k] * std::polar(1.0, sign * 2.0 * pi * static_cast<double>(k * m) /
                                           static_cast<double>(n));
    }
  }
  return out;
}

double max_abs_diff(const std::vector<cf64>& a, const std::vector<cf64>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace

TEST_CASE("impulse transforms to all ones") {
  std::vector<cf64> x(64, cf64{});
  x[0] = cf64{1.0, 0.0};
  fft(x, FftDirection::forward);
  for (const cf64& v : x) {
    CHECK(std::abs(v - cf64{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("single tone lands in its bin") {
  const std::size_t n = 128;
  std::vector<cf64> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::polar(1.0, 2.0 * pi * 5.0 * static_cast<double>(i) / static_cast<double>(n));
  }
  fft(x, FftDirection::forward);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 5) {
      CHECK(std::abs(x[k] - cf64{static_cast<double>(n), 0.0}) < 1e-9);
    } else {
      CHECK(std::abs(x[k]) < 1e-9);
    }
  }
}

TEST_CASE("matches the direct DFT") {
  std::mt19937_64 rng(3);
  // power of two, small primes, and composite non-power-of-two lengths
  for (const std::size_t n : {2, 8, 64, 3, 7, 12, 61, 120, 137}) {
    auto x = test::random_cvec(rng, n);
    const auto ref_fwd = dft_direct(x, -1.0);
    auto got = x;
    fft(got, FftDirection::forward);
    CHECK(max_abs_diff(got, ref_fwd) < 1e-9 * static_cast<double>(n));

    const auto ref_inv = dft_direct(x, 1.0);
    got = x;
    fft(got, FftDirection::inverse);
    CHECK(max_abs_diff(got, ref_inv) < 1e-9 * static_cast<double>(n));
  }
}

TEST_CASE("round trip with 1/N recovers the input") {
  std::mt19937_64 rng(4);
  for (const std::size_t n : {4096, 61376}) {  // slot-sized non-power-of-two included
    const auto x = test::random_cvec(rng, n);
    auto y = x;
    fft(y, FftDirection::forward);
    fft(y, FftDirection::inverse);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(y[i] / static_cast<double>(n) - x[i]));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("czt with dft parameters equals the dft") {
  std::mt19937_64 rng(5);
  const std::size_t n = 50;
  const auto x = test::random_cvec(rng, n);
  const auto ref = dft_direct(x, -1.0);
  const auto got = czt(x, n, 0.0, -2.0 * pi / static_cast<double>(n));
  CHECK(max_abs_diff(got, ref) < 1e-10 * static_cast<double>(n));
}

TEST_CASE("czt matches direct evaluation on an arbitrary contour") {
  std::mt19937_64 rng(6);
  const std::size_t n = 37;
  const std::size_t m_out = 91;
  const double alpha = 0.1234;
  const double omega = -0.0271;
  const auto x = test::random_cvec(rng, n);

  std::vector<cf64> ref(m_out, cf64{});
  for (std::size_t m = 0; m < m_out; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      ref[m] += x[k] * std::polar(1.0, alpha * static_cast<double>(k) +
                                           omega * static_cast<double>(k) * static_cast<double>(m));
    }
  }
  const auto got = czt(x, m_out, alpha, omega);
  CHECK(max_abs_diff(got, ref) < 1e-10 * static_cast<double>(n));
}

TEST_CASE("degenerate sizes") {
  std::vector<cf64> one = {cf64{2.0, -1.0}};
  fft(one, FftDirection::forward);
  CHECK(one[0] == cf64{2.0, -1.0});

  const auto empty_out = czt({}, 5, 0.0, 0.1);
  REQUIRE(empty_out.size() == 5);
  for (const cf64& v : empty_out) {
    CHECK(std::abs(v) == 0.0);
  }
  CHECK(czt(one, 0, 0.0, 0.1).empty());
}
