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
#include <optional>
#include <vector>

#include "nrsense/common.hpp"
#include "nrsense/nr_config.hpp"
#include "nrsense/ofdm_modem.hpp"

namespace nrsense {

struct PathSpec {
  enum class Label { reference, target };

  double delay_s = 0.0;
  cf64 gain{1.0, 0.0};  // linear scale, may carry a fixed phase
  Label label = Label::reference;
};

/// Multipath delay-gain channel with additive circular Gaussian noise. The
/// downconversion phase exp(-j 2 pi f0 tau) of each path is applied here, so
/// the modem never materializes the carrier.
struct ChannelConfig {
  std::vector<PathSpec> paths;
  std::optional<double> snr_db;  // nullopt = noiseless
  double f0_hz = 0.0;
  std::uint64_t rng_seed = 0;
};

/// Applies the channel: y = sum_p gain_p e^{-j 2 pi f0 tau_p} x(t - tau_p)
/// + noise. Fractional delays are exact frequency-domain phase ramps over the
/// full capture, so the shift is circular over the waveform length. The SNR
/// reference is the mean power of the noiseless composite output over its
/// occupied duration (samples above -60 dB of the instantaneous peak).
/// Throws ConfigError when a delay reaches the cyclic prefix length.
BasebandWaveform apply_channel(const BasebandWaveform& waveform, const ChannelConfig& channel,
                               const SlotTiming& timing);

/// Cable-style scenario: a short reference (leakage) path plus a target path
/// longer by r_meters of propagation at `velocity`. One-way convention, no
/// radar factor 2. f0, SNR and seed are left at their defaults for the
/// caller to fill in.
ChannelConfig two_path_channel(double r_meters, double velocity_mps, double tau_ref_s,
                               cf64 gain_ref, cf64 gain_target);

}  // namespace nrsense
