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

#include <cstddef>
#include <vector>

#include "nrsense/common.hpp"
#include "nrsense/nr_config.hpp"
#include "nrsense/srs_sequence.hpp"

namespace nrsense {

// Complex-baseband OFDM modem. The synthesis transform is fixed at 4096
// points so the modem, the range-profile FFT and the 3GPP grid sizes all
// share one lattice; the sample rate is therefore 4096 * delta_f.

inline constexpr int modem_fft_size = 4096;

/// Cyclic-prefix length in samples; exact for every numerology because the
/// CP ratio is a binary fraction of the transform size.
inline constexpr int modem_cp_samples = static_cast<int>(modem_fft_size * cp_ratio);

inline constexpr int samples_per_symbol = modem_fft_size + modem_cp_samples;

struct BasebandWaveform {
  std::vector<cf64> samples;
  double sample_rate_hz = 0.0;
  double beta = 1.0;  // linear amplitude scale applied at modulation
};

/// Received resource elements for a run of demodulated symbols. Column j
/// corresponds to transmit symbol index first_symbol + j.
struct ReceivedGrid {
  int n_subcarriers = 0;
  int n_symbols = 0;
  int first_symbol = 0;
  std::vector<cf64> elems;

  cf64& at(int k, int j) { return elems[static_cast<std::size_t>(j) * n_subcarriers + k]; }
  const cf64& at(int k, int j) const {
    return elems[static_cast<std::size_t>(j) * n_subcarriers + k];
  }
};

/// Synthesizes the slot: per symbol, subcarrier k rides at (k - N_s/2) *
/// delta_f with the phase referenced to the end of the cyclic prefix, so the
/// CP is the cyclic copy of the symbol tail. Output length is
/// 14 * (4096 + 288) samples at 4096 * delta_f.
BasebandWaveform modulate(const ResourceGrid& grid, const SlotTiming& timing,
                          const CarrierConfig& carrier, double beta);

/// Per symbol: skip the CP, transform the 4096-sample body, undo the 1/N-free
/// synthesis scaling and reorder to grid rows. demodulate(modulate(g), 0)
/// recovers g to rounding error.
ReceivedGrid demodulate(const BasebandWaveform& waveform, std::size_t start_sample,
                        const SlotTiming& timing, const CarrierConfig& carrier, int n_symbols,
                        int first_symbol = 0);

/// Locates the start of the transmitted burst with a moving-average energy
/// filter of one symbol duration T_s. The window is centered, the rising
/// edge is found at `threshold` of the global maximum and then walked back to
/// the 50% crossing, which for a centered window sits on the first signal
/// sample. Throws SignalError when no signal is present.
std::size_t detect_start(const BasebandWaveform& waveform, const SlotTiming& timing,
                         double threshold = 0.9);

}  // namespace nrsense
