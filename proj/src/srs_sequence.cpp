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

#include "nrsense/srs_sequence.hpp"

#include <cmath>
#include <ostream>

#include "nrsense/errors.hpp"
#include "nrsense/kernels.hpp"

namespace nrsense {

namespace {

bool is_prime(int n) {
  if (n < 2) {
    return false;
  }
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

int largest_prime_not_above(int n) {
  int p = n;
  while (!is_prime(p)) {
    --p;
  }
  return p;
}

}  // namespace

LowPaprSequence zadoff_chu_base(int root_u, int length_m) {
  if (length_m < 24) {
    throw ConfigError("srs sequence length below 24");
  }
  if (root_u < 0) {
    throw ConfigError("negative sequence group index");
  }

  LowPaprSequence seq;
  seq.root_u = root_u;
  seq.n_zc = largest_prime_not_above(length_m);
  seq.values.resize(static_cast<std::size_t>(length_m));

  const auto n_zc = static_cast<std::uint64_t>(seq.n_zc);
  const std::uint64_t q = static_cast<std::uint64_t>(
      std::floor(static_cast<double>(n_zc) * (root_u + 1) / 31.0 + 0.5));

  // Phase is -pi q m (m+1) / N_zc; reduce q m (m+1) mod 2 N_zc in integers so
  // long sequences keep full precision.
  for (int n = 0; n < length_m; ++n) {
    const std::uint64_t m = static_cast<std::uint64_t>(n) % n_zc;
    const std::uint64_t units = (q % (2 * n_zc)) * m % (2 * n_zc) * (m + 1) % (2 * n_zc);
    const double phase = -pi * static_cast<double>(units) / static_cast<double>(n_zc);
    seq.values[static_cast<std::size_t>(n)] = std::polar(1.0, phase);
  }
  return seq;
}

double ResourceGrid::energy() const {
  return kern::cv_energy(elems.data(), elems.size());
}

ResourceGrid make_empty_grid(const CarrierConfig& carrier) {
  ResourceGrid g;
  g.n_subcarriers = carrier.n_grid_subcarriers;
  g.n_symbols = symbols_per_slot;
  g.elems.assign(static_cast<std::size_t>(g.n_subcarriers) * g.n_symbols, cf64{});
  g.occupied.assign(g.elems.size(), 0);
  return g;
}

ResourceGrid generate_srs_grid(const SrsConfig& srs, const CarrierConfig& carrier, int root_u) {
  validate_carrier(carrier);
  validate_srs(srs, carrier);

  const LowPaprSequence seq = zadoff_chu_base(root_u, srs.m_sc);
  ResourceGrid grid = make_empty_grid(carrier);
  for (int l = srs.start_symbol; l < srs.start_symbol + srs.n_symb_srs; ++l) {
    for (int i = 0; i < srs.m_sc; ++i) {
      const int k = srs.comb_offset + srs.k_tc * i;
      grid.at(k, l) = seq.values[static_cast<std::size_t>(i)];
      grid.occupied[static_cast<std::size_t>(l) * grid.n_subcarriers + k] = 1;
    }
  }
  return grid;
}

double papr_db(std::span<const cf64> samples) {
  if (samples.empty()) {
    throw SignalError("papr of empty waveform");
  }
  double peak = 0.0;
  for (const cf64& s : samples) {
    const double p = s.real() * s.real() + s.imag() * s.imag();
    if (p > peak) {
      peak = p;
    }
  }
  if (peak == 0.0) {
    throw SignalError("papr of all-zero waveform");
  }
  const double mean = kern::cv_energy(samples.data(), samples.size()) /
                      static_cast<double>(samples.size());
  return 10.0 * std::log10(peak / mean);
}

void dump_occupied(std::ostream& os, const ResourceGrid& grid) {
  for (int l = 0; l < grid.n_symbols; ++l) {
    for (int k = 0; k < grid.n_subcarriers; ++k) {
      if (grid.is_occupied(k, l)) {
        const cf64& a = grid.at(k, l);
        os << k << ' ' << l << ' ' << a.real() << ' ' << a.imag() << '\n';
      }
    }
  }
}

}  // namespace nrsense
