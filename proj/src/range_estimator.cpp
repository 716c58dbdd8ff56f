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

#include "nrsense/range_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "nrsense/errors.hpp"
#include "nrsense/fft.hpp"
#include "nrsense/kernels.hpp"

namespace nrsense {

EqualizedVector equalize(const ReceivedGrid& rx, const ResourceGrid& tx, int symbol_l,
                         double delta_f_hz) {
  if (rx.n_subcarriers != tx.n_subcarriers) {
    throw ConfigError("rx/tx grid shape mismatch");
  }
  const int j = symbol_l - rx.first_symbol;
  if (symbol_l < 0 || symbol_l >= tx.n_symbols || j < 0 || j >= rx.n_symbols) {
    throw ConfigError("symbol index outside demodulated window");
  }

  EqualizedVector eps;
  eps.delta_f_hz = delta_f_hz;
  for (int k = 0; k < tx.n_subcarriers; ++k) {
    if (tx.is_occupied(k, symbol_l)) {
      eps.values.push_back(rx.at(k, j) / tx.at(k, symbol_l));
      eps.occupied_k.push_back(k);
    }
  }
  if (eps.values.empty()) {
    throw SignalError("symbol carries no occupied subcarriers");
  }
  return eps;
}

RangeProfile range_profile(const EqualizedVector& eps, int n_fft) {
  if (eps.values.empty()) {
    throw SignalError("empty equalized vector");
  }
  if (!(eps.delta_f_hz > 0.0)) {
    throw ConfigError("equalized vector lacks subcarrier spacing");
  }
  const int k_max = *std::max_element(eps.occupied_k.begin(), eps.occupied_k.end());
  if (n_fft < k_max + 1) {
    throw ConfigError("profile FFT smaller than occupied span");
  }

  // rho~[n] = sum_k eps[k] e^{+j 2 pi k n / n_fft}: unnormalized inverse
  // transform of the zero-filled vector, so tau_n = n / (n_fft delta_f) and a
  // positive delay lands at a positive bin.
  std::vector<cf64> buf(static_cast<std::size_t>(n_fft), cf64{});
  for (std::size_t i = 0; i < eps.values.size(); ++i) {
    buf[static_cast<std::size_t>(eps.occupied_k[i])] = eps.values[i];
  }
  fft(buf, FftDirection::inverse);

  RangeProfile profile;
  profile.n_fft = n_fft;
  profile.tau_step_s = 1.0 / (static_cast<double>(n_fft) * eps.delta_f_hz);
  profile.power.resize(static_cast<std::size_t>(n_fft));
  kern::cv_abs2(buf.data(), profile.power.data(), buf.size());
  return profile;
}

CztRefinement czt_refine(const EqualizedVector& eps, int n_hat, int n_fft) {
  if (eps.values.empty()) {
    throw SignalError("empty equalized vector");
  }
  if (!(eps.delta_f_hz > 0.0)) {
    throw ConfigError("equalized vector lacks subcarrier spacing");
  }
  if (n_hat < 1 || n_hat > n_fft - 2) {
    throw SignalError("peak at profile boundary, refinement span undefined");
  }

  const double coarse_step = 1.0 / (static_cast<double>(n_fft) * eps.delta_f_hz);
  const double tau_start = coarse_step * (n_hat - 1);
  const double fine_step =
      2.0 / (static_cast<double>(n_fft) * static_cast<double>(n_fft) * eps.delta_f_hz);

  // Same kernel as the coarse profile, evaluated on the fine contour
  // tau = tau_start + m * fine_step:
  //   rho~[m] = sum_k eps[k] e^{j 2 pi k delta_f (tau_start + m fine_step)}
  const int k_max = *std::max_element(eps.occupied_k.begin(), eps.occupied_k.end());
  std::vector<cf64> dense(static_cast<std::size_t>(k_max) + 1, cf64{});
  for (std::size_t i = 0; i < eps.values.size(); ++i) {
    dense[static_cast<std::size_t>(eps.occupied_k[i])] = eps.values[i];
  }
  const double alpha = 2.0 * pi * eps.delta_f_hz * tau_start;
  const double omega = 2.0 * pi * eps.delta_f_hz * fine_step;
  const std::vector<cf64> zoom = czt(dense, static_cast<std::size_t>(n_fft), alpha, omega);

  CztRefinement ref;
  ref.tau_start_s = tau_start;
  ref.tau_step_s = fine_step;
  ref.power.resize(zoom.size());
  kern::cv_abs2(zoom.data(), ref.power.data(), zoom.size());
  return ref;
}

PeakEstimate refine_peak(const EqualizedVector& eps, int n_hat, int n_fft) {
  const CztRefinement zoom = czt_refine(eps, n_hat, n_fft);
  const auto it = std::max_element(zoom.power.begin(), zoom.power.end());
  PeakEstimate peak;
  peak.coarse_index = n_hat;
  peak.fine_index = static_cast<int>(it - zoom.power.begin());
  peak.tau_hat_s = zoom.tau(peak.fine_index);
  peak.peak_power = *it;
  return peak;
}

TwoPeaks find_two_peaks(const RangeProfile& profile, int min_separation_bins,
                        int search_limit_bins, double prominence_db, double max_drop_db) {
  const int limit = search_limit_bins > 0
                        ? std::min(search_limit_bins, profile.n_fft)
                        : profile.n_fft;
  if (limit < 3) {
    throw SignalError("profile too short for peak search");
  }

  std::vector<double> seg(profile.power.begin(), profile.power.begin() + limit);
  std::vector<double> sorted = seg;
  std::nth_element(sorted.begin(), sorted.begin() + limit / 2, sorted.end());
  const double median = sorted[static_cast<std::size_t>(limit) / 2];
  const double floor = median * std::pow(10.0, prominence_db / 10.0);

  // The searched segment is one period of a circular profile, so the
  // neighbors of bin 0 and bin limit-1 wrap around.
  std::vector<int> maxima;
  for (int n = 0; n < limit; ++n) {
    const double left = seg[static_cast<std::size_t>((n + limit - 1) % limit)];
    const double right = seg[static_cast<std::size_t>((n + 1) % limit)];
    if (seg[static_cast<std::size_t>(n)] > left && seg[static_cast<std::size_t>(n)] >= right &&
        seg[static_cast<std::size_t>(n)] >= floor) {
      maxima.push_back(n);
    }
  }
  if (maxima.empty()) {
    throw UnresolvedPeaksError("unresolved peaks: no prominent maxima");
  }
  std::sort(maxima.begin(), maxima.end(),
            [&seg](int a, int b) { return seg[static_cast<std::size_t>(a)] > seg[static_cast<std::size_t>(b)]; });

  const int primary = maxima.front();
  int secondary = -1;
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    const int d = std::abs(maxima[i] - primary);
    const int circ = std::min(d, limit - d);
    if (circ >= min_separation_bins) {
      secondary = maxima[i];
      break;
    }
  }
  if (secondary < 0) {
    throw UnresolvedPeaksError("unresolved peaks: no second maximum outside separation limit");
  }
  const double drop_floor =
      seg[static_cast<std::size_t>(primary)] * std::pow(10.0, -max_drop_db / 10.0);
  if (seg[static_cast<std::size_t>(secondary)] < drop_floor) {
    throw UnresolvedPeaksError("unresolved peaks: second maximum below the sidelobe floor");
  }

  TwoPeaks peaks;
  peaks.n_ref = std::min(primary, secondary);
  peaks.n_target = std::max(primary, secondary);
  return peaks;
}

RangeResult estimate_range(const PeakEstimate& ref, const PeakEstimate& target, RangeMode mode,
                           double velocity_mps) {
  RangeResult res;
  res.mode = mode;
  res.tau_ref_s = ref.tau_hat_s;
  res.tau_target_s = target.tau_hat_s;

  if (mode == RangeMode::absolute_radar) {
    res.tau_delta_s = target.tau_hat_s;
    res.range_m = 0.5 * c0_mps * target.tau_hat_s;
    return res;
  }

  res.tau_delta_s = target.tau_hat_s - ref.tau_hat_s;
  if (res.tau_delta_s < 0.0) {
    throw SignalError("negative differential delay, peaks mislabeled");
  }
  if (mode == RangeMode::differential_radar) {
    res.range_m = 0.5 * c0_mps * res.tau_delta_s;
  } else {
    if (!(velocity_mps > 0.0) || velocity_mps > c0_mps) {
      throw ConfigError("propagation velocity must be in (0, c0]");
    }
    res.range_m = velocity_mps * res.tau_delta_s;
  }
  return res;
}

RangeProfile average_profiles(std::span<const RangeProfile> profiles) {
  if (profiles.empty()) {
    throw SignalError("nothing to average");
  }
  RangeProfile mean = profiles.front();
  for (std::size_t i = 1; i < profiles.size(); ++i) {
    const RangeProfile& p = profiles[i];
    if (p.n_fft != mean.n_fft || p.tau_step_s != mean.tau_step_s) {
      throw ConfigError("profile grids differ, cannot average");
    }
    for (std::size_t n = 0; n < mean.power.size(); ++n) {
      mean.power[n] += p.power[n];
    }
  }
  const double inv = 1.0 / static_cast<double>(profiles.size());
  for (double& v : mean.power) {
    v *= inv;
  }
  return mean;
}

void write_profile(std::ostream& os, const RangeProfile& profile) {
  for (int n = 0; n < profile.n_fft; ++n) {
    const double p = profile.power[static_cast<std::size_t>(n)];
    const double db = p > 0.0 ? 10.0 * std::log10(p) : -300.0;
    os << profile.tau(n) << ' ' << db << '\n';
  }
}

}  // namespace nrsense
