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

#include <algorithm>
#include <random>
#include <string>

#include "nrsense/errors.hpp"
#include "nrsense/nr_config.hpp"
#include "test_util.hpp"

using namespace nrsense;

namespace {

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("subcarrier spacing") {
  CHECK(subcarrier_spacing_hz(3) == 120000.0);
  CHECK(subcarrier_spacing_hz(0) == 15000.0);
  CHECK(subcarrier_spacing_hz(2) == 60000.0);
  CHECK_THROWS_AS(subcarrier_spacing_hz(-1), ConfigError);
  CHECK_THROWS_AS(subcarrier_spacing_hz(5), ConfigError);

  // strictly monotone, exactly doubling
  for (int mu = 1; mu <= 4; ++mu) {
    CHECK(subcarrier_spacing_hz(mu) == 2.0 * subcarrier_spacing_hz(mu - 1));
  }
}

TEST_CASE("slot timing") {
  const SlotTiming t3 = slot_timing(3);
  CHECK(t3.t_symb_s == doctest::Approx(8.3333e-6).epsilon(1e-4));
  CHECK(t3.t_cp_s == doctest::Approx(0.5859e-6).epsilon(1e-3));
  CHECK(t3.t_s_s == doctest::Approx(t3.t_symb_s + t3.t_cp_s));
  CHECK(t3.symbols == 14);

  const SlotTiming t0 = slot_timing(0);
  CHECK(t0.t_symb_s == doctest::Approx(66.67e-6).epsilon(1e-3));
  CHECK(t0.t_symb_s == 1.0 / t0.delta_f_hz);
}

TEST_CASE("srs validation reports every violation") {
  const CarrierConfig carrier{};

  SrsConfig ok;
  ok.k_tc = 2;
  ok.m_sc = 24;
  ok.n_symb_srs = 1;
  ok.start_symbol = 8;
  CHECK(srs_violations(ok, carrier).empty());
  CHECK_NOTHROW(validate_srs(ok, carrier));

  SrsConfig bad_comb = ok;
  bad_comb.k_tc = 3;
  CHECK(mentions(srs_violations(bad_comb, carrier), "invalid comb number"));

  SrsConfig bad_len = ok;
  bad_len.m_sc = 1600;
  CHECK(mentions(srs_violations(bad_len, carrier), "sequence length out of range"));

  SrsConfig bad_both = ok;
  bad_both.k_tc = 3;
  bad_both.m_sc = 1600;
  bad_both.n_symb_srs = 3;
  const auto v = srs_violations(bad_both, carrier);
  CHECK(v.size() >= 3);
  CHECK(mentions(v, "invalid comb number"));
  CHECK(mentions(v, "sequence length out of range"));
  CHECK(mentions(v, "invalid srs symbol count"));
  CHECK_THROWS_AS(validate_srs(bad_both, carrier), ConfigError);

  SrsConfig no_fit = ok;
  no_fit.k_tc = 8;
  no_fit.m_sc = 512;  // needs 4089 subcarriers, grid has 3276
  CHECK(mentions(srs_violations(no_fit, carrier), "comb allocation exceeds grid"));

  SrsConfig slot_overflow = ok;
  slot_overflow.start_symbol = 12;
  slot_overflow.n_symb_srs = 4;
  CHECK(mentions(srs_violations(slot_overflow, carrier), "srs symbols exceed slot"));
}

TEST_CASE("carrier validation") {
  CarrierConfig c;
  CHECK_NOTHROW(validate_carrier(c));
  c.f0_hz = 0.0;
  c.n_grid_subcarriers = 4097;
  const auto v = carrier_violations(c);
  CHECK(v.size() >= 2);
  CHECK_THROWS_AS(validate_carrier(c), ConfigError);
}

TEST_CASE("occupied bandwidth") {
  SrsConfig cfg;
  cfg.k_tc = 2;
  cfg.m_sc = 833;
  CHECK(occupied_bandwidth_hz(cfg, 3) == doctest::Approx(199.92e6));

  cfg.m_sc = 1;  // spacing identity only; not a valid allocation
  CHECK(occupied_bandwidth_hz(cfg, 3) == doctest::Approx(240e3));

  cfg.k_tc = 4;
  cfg.m_sc = 24;
  CHECK(occupied_bandwidth_hz(cfg, 0) == doctest::Approx(1.44e6));
}

TEST_CASE("random valid configs fit the grid and pass validation") {
  std::mt19937_64 rng(42);
  const CarrierConfig carrier{};
  for (int trial = 0; trial < 500; ++trial) {
    const SrsConfig srs = test::random_valid_srs(rng, carrier);
    const auto v = srs_violations(srs, carrier);
    CHECK(v.empty());
    const int highest = srs.comb_offset + srs.k_tc * (srs.m_sc - 1);
    CHECK(highest < carrier.n_grid_subcarriers);
  }
}

TEST_CASE("validation matches an independent re-check of each rule") {
  std::mt19937_64 rng(43);
  const CarrierConfig carrier{};
  std::uniform_int_distribution<int> comb(1, 9);
  std::uniform_int_distribution<int> msc(1, 2000);
  std::uniform_int_distribution<int> nsym(0, 16);
  std::uniform_int_distribution<int> start(-1, 15);
  std::uniform_int_distribution<int> offset(-1, 8);

  for (int trial = 0; trial < 2000; ++trial) {
    SrsConfig srs;
    srs.k_tc = comb(rng);
    srs.m_sc = msc(rng);
    srs.n_symb_srs = nsym(rng);
    srs.start_symbol = start(rng);
    srs.comb_offset = offset(rng);

    const bool comb_ok = srs.k_tc == 2 || srs.k_tc == 4 || srs.k_tc == 8;
    const bool nsym_ok = srs.n_symb_srs == 1 || srs.n_symb_srs == 2 || srs.n_symb_srs == 4 ||
                         srs.n_symb_srs == 8 || srs.n_symb_srs == 10 || srs.n_symb_srs == 12 ||
                         srs.n_symb_srs == 14;
    const bool len_ok = srs.m_sc >= 24 && srs.m_sc <= 1584;
    const bool offset_ok = srs.comb_offset >= 0;
    const bool fit_ok = !offset_ok || static_cast<long long>(srs.comb_offset) +
                                              static_cast<long long>(srs.k_tc) * (srs.m_sc - 1) <
                                          carrier.n_grid_subcarriers;
    const bool slot_ok = srs.start_symbol >= 0 && srs.start_symbol + srs.n_symb_srs <= 14;
    const bool all_ok = comb_ok && nsym_ok && len_ok && offset_ok && fit_ok && slot_ok;

    CHECK(srs_violations(srs, carrier).empty() == all_ok);
  }
}
