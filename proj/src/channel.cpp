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

#include "nrsense/channel.hpp"

#include <cmath>
#include <random>

#include "nrsense/errors.hpp"
#include "nrsense/fft.hpp"
#include "nrsense/kernels.hpp"

namespace nrsense {

namespace {

// Mean power over the samples carrying the burst; sinc leakage from the
// band-limited delay sits far below the -60 dB cut.
double occupied_mean_power(const std::vector<cf64>& samples) {
  std::vector<double> p(samples.size());
  kern::cv_abs2(samples.data(), p.data(), samples.size());
  double peak = 0.0;
  for (double v : p) {
    peak = std::max(peak, v);
  }
  if (peak == 0.0) {
    return 0.0;
  }
  const double cut = peak * 1e-6;
  double acc = 0.0;
  std::size_t count = 0;
  for (double v : p) {
    if (v >= cut) {
      acc += v;
      ++count;
    }
  }
  return acc / static_cast<double>(count);
}

}  // namespace

BasebandWaveform apply_channel(const BasebandWaveform& waveform, const ChannelConfig& channel,
                               const SlotTiming& timing) {
  if (waveform.samples.empty()) {
    throw SignalError("channel input is empty");
  }
  if (channel.paths.empty()) {
    throw ConfigError("channel needs at least one path");
  }
  for (const PathSpec& p : channel.paths) {
    if (p.delay_s < 0.0) {
      throw ConfigError("negative path delay");
    }
    if (p.delay_s >= timing.t_cp_s) {
      throw ConfigError("delay exceeds CP");
    }
    if (std::abs(p.gain) <= 0.0) {
      throw ConfigError("path gain must be nonzero");
    }
  }

  const std::size_t n = waveform.samples.size();
  const double fs = waveform.sample_rate_hz;

  std::vector<cf64> spectrum(waveform.samples);
  fft(spectrum, FftDirection::forward);

  // Composite response per bin: H(f) = sum_p gain_p e^{-j2pi f0 tau_p}
  // e^{-j2pi f tau_p}, with f the signed baseband bin frequency.
  std::vector<cf64> response(n, cf64{});
  for (const PathSpec& p : channel.paths) {
    const cf64 g = p.gain * std::polar(1.0, -2.0 * pi * channel.f0_hz * p.delay_s);
    for (std::size_t q = 0; q < n; ++q) {
      const double signed_bin =
          q <= n / 2 ? static_cast<double>(q) : static_cast<double>(q) - static_cast<double>(n);
      const double f = signed_bin * fs / static_cast<double>(n);
      response[q] += g * std::polar(1.0, -2.0 * pi * f * p.delay_s);
    }
  }

  kern::cv_mul(spectrum.data(), response.data(), spectrum.data(), n);
  fft(spectrum, FftDirection::inverse);
  kern::cv_scale(cf64{1.0 / static_cast<double>(n), 0.0}, spectrum.data(), spectrum.data(), n);

  BasebandWaveform out;
  out.sample_rate_hz = fs;
  out.beta = waveform.beta;
  out.samples = std::move(spectrum);

  if (channel.snr_db.has_value()) {
    const double p_ref = occupied_mean_power(out.samples);
    if (p_ref > 0.0) {
      const double noise_power = p_ref / std::pow(10.0, *channel.snr_db / 10.0);
      const double sigma = std::sqrt(noise_power / 2.0);
      std::mt19937_64 rng(channel.rng_seed);
      std::normal_distribution<double> gauss(0.0, sigma);
      for (cf64& s : out.samples) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        s += cf64{re, im};
      }
    }
  }
  return out;
}

ChannelConfig two_path_channel(double r_meters, double velocity_mps, double tau_ref_s,
                               cf64 gain_ref, cf64 gain_target) {
  if (!(r_meters > 0.0)) {
    throw ConfigError("path length difference must be positive");
  }
  if (!(velocity_mps > 0.0) || velocity_mps > c0_mps) {
    throw ConfigError("propagation velocity must be in (0, c0]");
  }
  if (tau_ref_s < 0.0) {
    throw ConfigError("negative reference delay");
  }

  ChannelConfig cfg;
  cfg.paths.push_back({tau_ref_s, gain_ref, PathSpec::Label::reference});
  cfg.paths.push_back(
      {tau_ref_s + r_meters / velocity_mps, gain_target, PathSpec::Label::target});
  return cfg;
}

}  // namespace nrsense
