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

#include "nrsense/ofdm_modem.hpp"

#include <algorithm>
#include <cmath>

#include "nrsense/errors.hpp"
#include "nrsense/fft.hpp"
#include "nrsense/kernels.hpp"

namespace nrsense {

namespace {

// Centered-grid bin mapping: subcarrier k rides at (k - N_s/2) * delta_f,
// which lands in FFT bin (k - N_s/2) mod N.
inline std::size_t grid_row_to_bin(int k, int n_grid) {
  const int shifted = k - n_grid / 2;
  return static_cast<std::size_t>((shifted % modem_fft_size + modem_fft_size) % modem_fft_size);
}

inline double frac_clamp(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

BasebandWaveform modulate(const ResourceGrid& grid, const SlotTiming& timing,
                          const CarrierConfig& carrier, double beta) {
  if (grid.n_subcarriers != carrier.n_grid_subcarriers || grid.n_symbols != timing.symbols) {
    throw ConfigError("grid shape does not match carrier/slot configuration");
  }
  if (!(beta > 0.0)) {
    throw ConfigError("amplitude scale beta must be positive");
  }
  if (grid.n_subcarriers > modem_fft_size) {
    throw ConfigError("grid exceeds modulation transform size");
  }

  BasebandWaveform wf;
  wf.sample_rate_hz = static_cast<double>(modem_fft_size) * timing.delta_f_hz;
  wf.beta = beta;
  wf.samples.assign(static_cast<std::size_t>(grid.n_symbols) * samples_per_symbol, cf64{});

  std::vector<cf64> bins(modem_fft_size);
  for (int l = 0; l < grid.n_symbols; ++l) {
    std::fill(bins.begin(), bins.end(), cf64{});
    const auto sym = grid.symbol(l);
    for (int k = 0; k < grid.n_subcarriers; ++k) {
      if (sym[static_cast<std::size_t>(k)] != cf64{}) {
        bins[grid_row_to_bin(k, grid.n_subcarriers)] = sym[static_cast<std::size_t>(k)];
      }
    }
    // Unnormalized inverse transform evaluates the synthesis sum directly;
    // body sample m is the signal at t = (m + n_cp) / fs.
    fft(bins, FftDirection::inverse);

    cf64* out = wf.samples.data() + static_cast<std::size_t>(l) * samples_per_symbol;
    kern::cv_scale(cf64{beta, 0.0}, bins.data() + modem_fft_size - modem_cp_samples, out,
                   modem_cp_samples);
    kern::cv_scale(cf64{beta, 0.0}, bins.data(), out + modem_cp_samples, modem_fft_size);
  }
  return wf;
}

ReceivedGrid demodulate(const BasebandWaveform& waveform, std::size_t start_sample,
                        const SlotTiming& timing, const CarrierConfig& carrier, int n_symbols,
                        int first_symbol) {
  (void)timing;
  if (n_symbols <= 0) {
    throw ConfigError("nothing to demodulate");
  }
  const std::size_t needed =
      start_sample + static_cast<std::size_t>(n_symbols) * samples_per_symbol;
  if (needed > waveform.samples.size()) {
    throw SignalError("waveform too short for requested demodulation window");
  }

  ReceivedGrid rx;
  rx.n_subcarriers = carrier.n_grid_subcarriers;
  rx.n_symbols = n_symbols;
  rx.first_symbol = first_symbol;
  rx.elems.assign(static_cast<std::size_t>(rx.n_subcarriers) * n_symbols, cf64{});

  std::vector<cf64> body(modem_fft_size);
  const double inv_n = 1.0 / static_cast<double>(modem_fft_size);
  for (int j = 0; j < n_symbols; ++j) {
    const cf64* sym = waveform.samples.data() + start_sample +
                      static_cast<std::size_t>(j) * samples_per_symbol + modem_cp_samples;
    std::copy(sym, sym + modem_fft_size, body.begin());
    fft(body, FftDirection::forward);
    for (int k = 0; k < rx.n_subcarriers; ++k) {
      rx.at(k, j) = body[grid_row_to_bin(k, rx.n_subcarriers)] * inv_n;
    }
  }
  return rx;
}

std::size_t detect_start(const BasebandWaveform& waveform, const SlotTiming& timing,
                         double threshold) {
  const std::size_t n = waveform.samples.size();
  const auto window = static_cast<std::size_t>(
      std::llround(timing.t_s_s * waveform.sample_rate_hz));
  if (window == 0 || n < window) {
    throw SignalError("waveform shorter than detection window");
  }

  std::vector<double> power(n);
  kern::cv_abs2(waveform.samples.data(), power.data(), n);
  std::vector<double> cumsum(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cumsum[i + 1] = cumsum[i] + power[i];
  }
  if (cumsum[n] == 0.0) {
    throw SignalError("no signal detected");
  }

  // windowed[j] = energy of samples [j, j + window)
  const std::size_t n_windows = n - window + 1;
  double peak = 0.0;
  for (std::size_t j = 0; j < n_windows; ++j) {
    peak = std::max(peak, cumsum[j + window] - cumsum[j]);
  }

  // Rising edge at `threshold` of the peak, then walk back to the 50%
  // crossing. The window is interpreted as centered, so the 50% crossing of
  // the ramp sits half a window before the burst start.
  std::size_t j_edge = 0;
  for (std::size_t j = 0; j < n_windows; ++j) {
    if (cumsum[j + window] - cumsum[j] >= threshold * peak) {
      j_edge = j;
      break;
    }
  }
  const double half_peak = 0.5 * peak;
  std::size_t j_cross = j_edge;
  while (j_cross > 0 && cumsum[j_cross - 1 + window] - cumsum[j_cross - 1] >= half_peak) {
    --j_cross;
  }
  std::size_t coarse;
  const double e_first = cumsum[window] - cumsum[0];
  if (j_cross == 0 && e_first > half_peak) {
    // Ramp clipped by the capture edge: the burst starts less than half a
    // window in. Invert the linear ramp E[0] = peak * (window - Z) / window.
    coarse = static_cast<std::size_t>(std::llround(frac_clamp(1.0 - e_first / peak) *
                                                   static_cast<double>(window)));
  } else {
    coarse = j_cross + window / 2;
  }

  // The 50% crossing sits on the energy median of the burst envelope, which
  // for a non-flat envelope is offset from the physical onset by a few
  // samples. Refine to the first instantaneous-power crossing nearby.
  const double onset_level = 0.1 * peak / static_cast<double>(window);
  const std::size_t slack = 16;
  const std::size_t lo = coarse > slack ? coarse - slack : 0;
  const std::size_t hi = std::min(coarse + slack, n - 1);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (power[i] >= onset_level) {
      return i;
    }
  }
  return coarse;
}

}  // namespace nrsense
