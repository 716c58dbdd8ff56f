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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "nrsense/common.hpp"
#include "nrsense/nr_config.hpp"

namespace nrsense {

/// Constant-amplitude base sequence for one SRS allocation. Cyclically
/// extended Zadoff-Chu over the largest prime not exceeding the length, root
/// taken from the group index via q = floor(N_zc * (u + 1) / 31 + 1/2).
/// Hopping and cyclic shifts are not applied.
struct LowPaprSequence {
  std::vector<cf64> values;  // length m_sc, all unit magnitude
  int root_u = 0;
  int n_zc = 0;  // prime kernel length
};

/// Throws ConfigError for length below 24 or negative root.
LowPaprSequence zadoff_chu_base(int root_u, int length_m);

/// One slot of resource elements, subcarriers x symbols, column-major per
/// symbol. Unoccupied elements are exactly zero.
struct ResourceGrid {
  int n_subcarriers = 0;
  int n_symbols = 0;
  std::vector<cf64> elems;
  std::vector<std::uint8_t> occupied;

  cf64& at(int k, int l) { return elems[static_cast<std::size_t>(l) * n_subcarriers + k]; }
  const cf64& at(int k, int l) const {
    return elems[static_cast<std::size_t>(l) * n_subcarriers + k];
  }
  bool is_occupied(int k, int l) const {
    return occupied[static_cast<std::size_t>(l) * n_subcarriers + k] != 0;
  }
  std::span<const cf64> symbol(int l) const {
    return {elems.data() + static_cast<std::size_t>(l) * n_subcarriers,
            static_cast<std::size_t>(n_subcarriers)};
  }
  /// Sum of |a_{k,l}|^2 over the grid.
  double energy() const;
};

ResourceGrid make_empty_grid(const CarrierConfig& carrier);

/// Maps the base sequence onto the comb: subcarriers comb_offset + k_tc * i
/// in symbols [start_symbol, start_symbol + n_symb_srs), identical in every
/// occupied symbol. Throws on invalid configs.
ResourceGrid generate_srs_grid(const SrsConfig& srs, const CarrierConfig& carrier, int root_u);

/// Peak-to-average power ratio 10 log10(max |x|^2 / mean |x|^2) over the
/// whole sample vector. Throws SignalError for empty or all-zero input.
double papr_db(std::span<const cf64> samples);

/// Debug dump, one line per occupied element: "k l re im".
void dump_occupied(std::ostream& os, const ResourceGrid& grid);

}  // namespace nrsense
