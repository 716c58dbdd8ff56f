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

#include "nrsense/config_file.hpp"
#include "nrsense/errors.hpp"
#include "nrsense/harness.hpp"

using namespace nrsense;

TEST_CASE("parsing sections, comments and types") {
  const char* text = R"(
# leading comment
[carrier]
mu = 3            ; numerology
f0_hz = 25e9

[srs]
k_tc = 2
m_sc = 833

[channel]
snr_db = noiseless
range_m = 2.76

[estimator]
average_symbols = true
)";
  const ConfigFile cfg = ConfigFile::parse_string(text);
  CHECK(cfg.get_int("carrier", "mu", -1) == 3);
  CHECK(cfg.get_num("carrier", "f0_hz", 0.0) == 25e9);
  CHECK(cfg.get_str("channel", "snr_db", "") == "noiseless");
  CHECK(cfg.get_bool("estimator", "average_symbols", false));
  CHECK(cfg.get_int("srs", "m_sc", 0) == 833);
  CHECK_FALSE(cfg.has("carrier", "missing"));
  CHECK(cfg.get_num("carrier", "missing", 1.25) == 1.25);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(ConfigFile::parse_string("[open\n"), ConfigError);
  CHECK_THROWS_AS(ConfigFile::parse_string("keyonly\n"), ConfigError);
  CHECK_THROWS_AS(ConfigFile::parse_string("= value\n"), ConfigError);

  const ConfigFile cfg = ConfigFile::parse_string("[a]\nx = notanumber\nb = 1.5\n");
  CHECK_THROWS_AS(cfg.get_num("a", "x", 0.0), ConfigError);
  CHECK_THROWS_AS(cfg.get_int("a", "b", 0), ConfigError);
  CHECK_THROWS_AS(cfg.get_bool("a", "x", false), ConfigError);
}

TEST_CASE("set overrides parsed values") {
  ConfigFile cfg = ConfigFile::parse_string("[srs]\nm_sc = 100\n");
  cfg.set("srs", "m_sc", "200");
  CHECK(cfg.get_int("srs", "m_sc", 0) == 200);
}

TEST_CASE("trial spec built from config") {
  const char* text = R"(
[carrier]
mu = 3
f0_hz = 25e9
n_grid_subcarriers = 3276

[srs]
k_tc = 2
comb_offset = 0
m_sc = 833
n_symb_srs = 1
start_symbol = 8

[channel]
range_m = 2.76
velocity_factor = 0.7
tau_ref_ns = 50
snr_db = noiseless
seed = 17

[estimator]
mode = differential_cable
n_fft = 4096
)";
  const TrialSpec spec = trial_spec_from_config(ConfigFile::parse_string(text));
  CHECK(spec.carrier.mu == 3);
  CHECK(spec.srs.m_sc == 833);
  CHECK(spec.r_true_m == 2.76);
  CHECK(spec.channel.rng_seed == 17);
  CHECK_FALSE(spec.channel.snr_db.has_value());
  REQUIRE(spec.channel.paths.size() == 2);
  CHECK(spec.channel.paths[0].delay_s == doctest::Approx(50e-9));
  CHECK(spec.channel.paths[1].delay_s - spec.channel.paths[0].delay_s ==
        doctest::Approx(2.76 / (0.7 * c0_mps)));
  CHECK(spec.estimator.velocity_mps == doctest::Approx(0.7 * c0_mps));
}

TEST_CASE("explicit path list overrides the two-path keys") {
  const char* text = R"(
[channel]
velocity_factor = 0.7
snr_db = 20

[channel.path0]
delay_ns = 40
gain_db = 0

[channel.path1]
delay_ns = 55
gain_db = -6
phase_deg = 90
)";
  const TrialSpec spec = trial_spec_from_config(ConfigFile::parse_string(text));
  REQUIRE(spec.channel.paths.size() == 2);
  CHECK(spec.channel.paths[0].delay_s == doctest::Approx(40e-9));
  CHECK(spec.channel.paths[1].delay_s == doctest::Approx(55e-9));
  CHECK(std::abs(spec.channel.paths[1].gain) == doctest::Approx(0.5011872336));
  CHECK(std::arg(spec.channel.paths[1].gain) == doctest::Approx(pi / 2.0));
  REQUIRE(spec.channel.snr_db.has_value());
  CHECK(*spec.channel.snr_db == 20.0);
  // ground truth from the injected delays at the cable velocity
  CHECK(spec.r_true_m == doctest::Approx(15e-9 * 0.7 * c0_mps));
}

TEST_CASE("config validation failures throw") {
  CHECK_THROWS_AS(trial_spec_from_config(ConfigFile::parse_string("[srs]\nk_tc = 3\n")),
                  ConfigError);
  CHECK_THROWS_AS(
      trial_spec_from_config(ConfigFile::parse_string("[estimator]\nmode = sideways\n")),
      ConfigError);
  CHECK_THROWS_AS(
      trial_spec_from_config(ConfigFile::parse_string("[channel]\nvelocity_factor = 1.5\n")),
      ConfigError);
}

TEST_CASE("sweep plan defaults and seed list") {
  const SweepPlan defaults = sweep_plan_from_config(ConfigFile::parse_string(""));
  CHECK(defaults.m_sc_list.front() == 24);
  CHECK(defaults.m_sc_list.back() == 1584);
  CHECK(defaults.m_sc_list.size() <= 32);
  CHECK(defaults.seeds == std::vector<std::uint64_t>{0});

  const SweepPlan plan =
      sweep_plan_from_config(ConfigFile::parse_string("[sweep]\nseeds = 3,5,8\npoints = 4\n"));
  CHECK(plan.seeds == std::vector<std::uint64_t>{3, 5, 8});
  CHECK(plan.m_sc_list.size() == 4);
}
