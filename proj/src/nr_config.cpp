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

#include "nrsense/nr_config.hpp"

#include <sstream>

#include "nrsense/errors.hpp"

namespace nrsense {

namespace {

[[noreturn]] void throw_violations(const char* what, const std::vector<std::string>& violations) {
  std::ostringstream oss;
  oss << what << ":";
  for (const auto& v : violations) {
    oss << " [" << v << "]";
  }
  throw ConfigError(oss.str());
}

}  // namespace

double subcarrier_spacing_hz(int mu) {
  if (mu < 0 || mu > 4) {
    throw ConfigError("numerology mu out of range, expected 0..4");
  }
  return static_cast<double>(15000 << mu);
}

SlotTiming slot_timing(int mu) {
  SlotTiming t;
  t.delta_f_hz = subcarrier_spacing_hz(mu);
  t.t_symb_s = 1.0 / t.delta_f_hz;
  t.t_cp_s = t.t_symb_s * cp_ratio;
  t.t_s_s = t.t_symb_s + t.t_cp_s;
  t.symbols = symbols_per_slot;
  return t;
}

std::vector<std::string> carrier_violations(const CarrierConfig& cfg) {
  std::vector<std::string> v;
  if (!(cfg.f0_hz > 0.0)) {
    v.emplace_back("carrier frequency must be positive");
  }
  if (cfg.mu < 0 || cfg.mu > 4) {
    v.emplace_back("numerology mu out of range");
  }
  if (cfg.n_grid_subcarriers <= 0 || cfg.n_grid_subcarriers > 4096) {
    v.emplace_back("grid size out of range, expected 1..4096 subcarriers");
  }
  if (cfg.n_grid_subcarriers % 2 != 0) {
    v.emplace_back("grid size must be even");
  }
  return v;
}

CarrierConfig validate_carrier(const CarrierConfig& cfg) {
  const auto v = carrier_violations(cfg);
  if (!v.empty()) {
    throw_violations("invalid carrier config", v);
  }
  return cfg;
}

std::vector<std::string> srs_violations(const SrsConfig& cfg, const CarrierConfig& carrier) {
  std::vector<std::string> v;
  if (cfg.k_tc != 2 && cfg.k_tc != 4 && cfg.k_tc != 8) {
    v.emplace_back("invalid comb number");
  }
  switch (cfg.n_symb_srs) {
    case 1:
    case 2:
    case 4:
    case 8:
    case 10:
    case 12:
    case 14:
      break;
    default:
      v.emplace_back("invalid srs symbol count");
  }
  if (cfg.m_sc < 24 || cfg.m_sc > 1584) {
    v.emplace_back("sequence length out of range");
  }
  if (cfg.comb_offset < 0) {
    v.emplace_back("negative comb offset");
  }
  // Grid fit uses the raw values so that one bad field cannot mask another.
  const long long highest =
      static_cast<long long>(cfg.comb_offset) +
      static_cast<long long>(cfg.k_tc) * (static_cast<long long>(cfg.m_sc) - 1);
  if (cfg.comb_offset >= 0 && highest >= carrier.n_grid_subcarriers) {
    v.emplace_back("comb allocation exceeds grid");
  }
  if (cfg.start_symbol < 0 || cfg.start_symbol + cfg.n_symb_srs > symbols_per_slot) {
    v.emplace_back("srs symbols exceed slot");
  }
  return v;
}

SrsConfig validate_srs(const SrsConfig& cfg, const CarrierConfig& carrier) {
  const auto v = srs_violations(cfg, carrier);
  if (!v.empty()) {
    throw_violations("invalid srs config", v);
  }
  return cfg;
}

double occupied_bandwidth_hz(const SrsConfig& cfg, int mu) {
  return static_cast<double>(cfg.k_tc) * static_cast<double>(cfg.m_sc) *
         subcarrier_spacing_hz(mu);
}

}  // namespace nrsense
