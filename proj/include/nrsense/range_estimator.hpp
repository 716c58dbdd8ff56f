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

#include <iosfwd>
#include <span>
#include <vector>

#include "nrsense/common.hpp"
#include "nrsense/ofdm_modem.hpp"
#include "nrsense/srs_sequence.hpp"

namespace nrsense {

// Delay estimation from one equalized OFDM symbol: element-wise channel
// division, coarse delay profile over an FFT grid, chirp-Z zoom around the
// detected peaks, and conversion of the peak spacing to a range.

/// Equalized subcarriers of one symbol, compacted to the occupied comb.
/// occupied_k holds the absolute subcarrier index of each value.
struct EqualizedVector {
  std::vector<cf64> values;
  std::vector<int> occupied_k;
  double delta_f_hz = 0.0;
};

/// epsilon[k] = X[k] / a[k] on occupied elements only; the division is
/// mask-guarded so unoccupied (zero) transmit elements are never touched.
/// symbol_l indexes the transmit grid. Throws on shape mismatch or a fully
/// unoccupied symbol.
EqualizedVector equalize(const ReceivedGrid& rx, const ResourceGrid& tx, int symbol_l,
                         double delta_f_hz);

/// Power versus discretized delay tau_n = n / (n_fft * delta_f). A positive
/// physical delay peaks near bin n = tau * n_fft * delta_f.
struct RangeProfile {
  std::vector<double> power;
  double tau_step_s = 0.0;
  int n_fft = 0;

  double tau(int n) const { return tau_step_s * n; }
};

/// Transforms the zero-filled equalized vector with an n_fft-point kernel.
/// Throws when n_fft does not cover the occupied span.
RangeProfile range_profile(const EqualizedVector& eps, int n_fft = modem_fft_size);

/// Zoomed profile on the fine grid tau = tau_start + m * tau_step_s,
/// m in [0, n_points), with step 2 / (n_fft^2 * delta_f) spanning the two
/// coarse bins around a peak.
struct CztRefinement {
  std::vector<double> power;
  double tau_start_s = 0.0;
  double tau_step_s = 0.0;

  double tau(int m) const { return tau_start_s + tau_step_s * m; }
};

/// Evaluates the profile kernel on n_fft fine points covering
/// [tau_{n_hat-1}, tau_{n_hat+1}). At coarse grid points the refined values
/// match the coarse profile. Throws when n_hat touches the array boundary.
CztRefinement czt_refine(const EqualizedVector& eps, int n_hat, int n_fft);

struct PeakEstimate {
  double tau_hat_s = 0.0;
  int coarse_index = 0;
  int fine_index = 0;
  double peak_power = 0.0;
};

/// czt_refine plus argmax bookkeeping.
PeakEstimate refine_peak(const EqualizedVector& eps, int n_hat, int n_fft);

struct TwoPeaks {
  int n_ref = 0;     // smaller delay: the leakage / reference path
  int n_target = 0;  // larger delay: the path of interest
};

/// The two strongest local maxima at least min_separation_bins apart,
/// ordered by delay. search_limit_bins restricts the search to the first
/// alias period of a comb profile (0 = whole profile). Candidates need a
/// prominence of prominence_db over the median profile power, and the
/// secondary must sit within max_drop_db of the primary so that a bare
/// sidelobe of a single response (first sidelobe -13.26 dB for the
/// rectangular occupancy window) is not reported as a second target. Throws
/// UnresolvedPeaksError when no qualifying pair exists.
TwoPeaks find_two_peaks(const RangeProfile& profile, int min_separation_bins,
                        int search_limit_bins = 0, double prominence_db = 6.0,
                        double max_drop_db = 13.0);

enum class RangeMode { absolute_radar, differential_radar, differential_cable };

struct RangeResult {
  double tau_ref_s = 0.0;
  double tau_target_s = 0.0;
  double tau_delta_s = 0.0;
  double range_m = 0.0;
  RangeMode mode = RangeMode::differential_cable;
};

/// absolute_radar:      R = c0/2 * tau_target (ref peak unused)
/// differential_radar:  R = c0/2 * (tau_target - tau_ref)
/// differential_cable:  R = velocity * (tau_target - tau_ref)
/// Differential modes reject tau_target < tau_ref (mislabeled peaks).
RangeResult estimate_range(const PeakEstimate& ref, const PeakEstimate& target, RangeMode mode,
                           double velocity_mps);

/// Element-wise mean of power profiles over identical grids.
RangeProfile average_profiles(std::span<const RangeProfile> profiles);

/// Plot-ready export: "tau_s power_db" per line, floor clamped at -300 dB.
void write_profile(std::ostream& os, const RangeProfile& profile);

}  // namespace nrsense
