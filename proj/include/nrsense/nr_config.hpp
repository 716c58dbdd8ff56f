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

#include <string>
#include <vector>

#include "nrsense/common.hpp"

namespace nrsense {

// 3GPP-derived numeric parameters for one carrier plus one SRS allocation.
// Everything here is immutable after validation; all functions are pure.

inline constexpr int symbols_per_slot = 14;  // normal cyclic prefix

// Fixed simplifications baked into the whole pipeline: single antenna port,
// no subcarrier offset, transmission starts at t = 0.
inline constexpr int antenna_port = 1;
inline constexpr int k0_subcarrier_offset = 0;
inline constexpr double t_start_s = 0.0;

// Normal-CP length as a fraction of the symbol body, applied uniformly to
// every symbol of the slot (the longer symbol-0 CP is not modeled).
inline constexpr double cp_ratio = 144.0 / 2048.0;

/// Subcarrier spacing 2^mu * 15 kHz. Throws ConfigError for mu outside {0..4}.
double subcarrier_spacing_hz(int mu);

struct SlotTiming {
  double delta_f_hz;
  double t_symb_s;  // 1 / delta_f
  double t_cp_s;    // cp_ratio * t_symb
  double t_s_s;     // t_symb + t_cp
  int symbols;      // symbols per slot
};

SlotTiming slot_timing(int mu);

struct CarrierConfig {
  double f0_hz = 25e9;
  int mu = 3;
  int n_grid_subcarriers = 3276;
};

/// All violated carrier constraints, empty when valid.
std::vector<std::string> carrier_violations(const CarrierConfig& cfg);

/// Throws ConfigError listing every violation; returns cfg unchanged if valid.
CarrierConfig validate_carrier(const CarrierConfig& cfg);

struct SrsConfig {
  int k_tc = 2;         // comb number: every k_tc-th subcarrier is occupied
  int comb_offset = 0;  // subcarrier index of the first occupied subcarrier
  int m_sc = 24;        // occupied subcarriers per symbol
  int n_symb_srs = 1;   // occupied consecutive symbols per slot
  int start_symbol = 8;
};

/// All violated SRS constraints (comb number, symbol count, sequence length,
/// grid fit, slot fit), empty when valid. Reports every violation, not just
/// the first.
std::vector<std::string> srs_violations(const SrsConfig& cfg, const CarrierConfig& carrier);

/// Throws ConfigError listing every violation; returns cfg unchanged if valid.
SrsConfig validate_srs(const SrsConfig& cfg, const CarrierConfig& carrier);

/// Frequency span covered by the comb: k_tc * m_sc * delta_f. Pure formula,
/// callers validate the config separately.
double occupied_bandwidth_hz(const SrsConfig& cfg, int mu);

}  // namespace nrsense
