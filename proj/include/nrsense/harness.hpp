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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nrsense/channel.hpp"
#include "nrsense/config_file.hpp"
#include "nrsense/nr_config.hpp"
#include "nrsense/range_estimator.hpp"

namespace nrsense {

// Experiment runner: composes sequence generation, modulation, channel,
// start detection, demodulation and estimation into single trials and
// bandwidth sweeps, and feeds recorded IQ captures through the same chain.

struct EstimatorOptions {
  int n_fft = modem_fft_size;
  RangeMode mode = RangeMode::differential_cable;
  double velocity_mps = 0.7 * c0_mps;  // used by differential_cable only
  double prominence_db = 6.0;
  double peak_drop_db = 13.0;   // max secondary-below-primary drop
  int min_separation_bins = 0;  // 0 = half the main-lobe width of the config
  bool average_symbols = false;
  double start_threshold = 0.9;
  // The demodulation window starts this many samples before the detected
  // burst so that detection jitter cannot push a path to a negative residual
  // delay (which would wrap to the end of the profile). Both peaks shift by
  // the guard equally, so differential estimates are unaffected. The guard
  // spends part of the CP delay budget.
  int start_guard_samples = 32;
};

struct TrialSpec {
  CarrierConfig carrier;
  SrsConfig srs;
  ChannelConfig channel;
  EstimatorOptions estimator;
  int root_u = 0;
  double beta = 1.0;
  double r_true_m = 0.0;
  // Zero samples prepended before, and appended after, the slot prior to the
  // channel. The tail pad keeps the circular path delay from wrapping into
  // the burst.
  std::size_t lead_in_samples = 0;
  std::size_t tail_pad_samples = modem_fft_size;
};

struct TrialResult {
  bool resolved = false;
  std::string diagnostic;  // failure reason when unresolved
  RangeResult range;
  double abs_error_m = 0.0;
  std::size_t detected_start = 0;
  RangeProfile profile;  // coarse profile, for export / plotting
};

/// Executes generate -> modulate -> channel -> detect -> demodulate ->
/// equalize -> profile -> peaks -> refine -> range. Estimation failures
/// (unresolved peaks, boundary peaks, mislabeled peaks) come back as
/// resolved = false with a diagnostic; configuration errors still throw.
TrialResult run_trial(const TrialSpec& spec);

/// The run_trial chain from start detection onward, for externally supplied
/// waveforms (channel output or recorded captures).
TrialResult estimate_from_waveform(const BasebandWaveform& rx, const TrialSpec& spec);

/// Minimum occupied bandwidth that resolves two responses a path difference
/// r apart: c0 / r. Throws for r <= 0.
double min_bandwidth_hz(double r_meters);

struct SweepRow {
  int m_sc = 0;
  double bandwidth_hz = 0.0;
  double r_true_m = 0.0;
  double r_hat_m = 0.0;      // NaN when unresolved
  double abs_error_m = 0.0;  // NaN when unresolved
  bool resolved = false;
  std::uint64_t seed = 0;
};

/// One row per (m_sc, seed), in list order with seeds innermost. Per-row
/// failures are recorded in the row; the sweep always continues.
std::vector<SweepRow> sweep_bandwidth(const TrialSpec& base, std::span<const int> m_sc_list,
                                      std::span<const std::uint64_t> seeds);

/// Logarithmically spaced occupied-subcarrier counts, deduplicated.
std::vector<int> log_spaced_m_sc(int lo, int hi, int points);

/// CSV with a leading "# b_min_hz = ..." comment (when b_min_hz > 0), the
/// fixed header, and 9-significant-digit floats. Byte-deterministic for a
/// given row list.
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows, double b_min_hz);

/// Runs the estimation chain on a recorded capture. The sidecar sample rate
/// must match the mu-derived modem rate within 1 ppm.
TrialResult process_capture(const std::filesystem::path& iq_path, const TrialSpec& spec);

struct SweepPlan {
  std::vector<int> m_sc_list;
  std::vector<std::uint64_t> seeds;
};

/// Builds a TrialSpec from a parsed config file ([carrier], [srs],
/// [channel], [estimator], [trial] sections). Throws ConfigError on
/// violations.
TrialSpec trial_spec_from_config(const ConfigFile& cfg);

/// Reads the [sweep] section (m_sc_min, m_sc_max, points, seeds).
SweepPlan sweep_plan_from_config(const ConfigFile& cfg);

}  // namespace nrsense
