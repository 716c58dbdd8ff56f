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

#include "nrsense/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "nrsense/errors.hpp"
#include "nrsense/iq_capture.hpp"

namespace nrsense {

namespace {

int auto_min_separation(const EstimatorOptions& est, const SrsConfig& srs) {
  if (est.min_separation_bins > 0) {
    return est.min_separation_bins;
  }
  // Half the main-lobe (null-to-null) width of the comb response.
  const double half_lobe =
      static_cast<double>(est.n_fft) / (static_cast<double>(srs.m_sc) * srs.k_tc);
  return std::max(2, static_cast<int>(std::lround(half_lobe)));
}

PeakEstimate averaged_peak(const std::vector<EqualizedVector>& eps_set, int n_hat, int n_fft) {
  // Noncoherent zoom: average the refined power over symbols, then argmax.
  CztRefinement acc = czt_refine(eps_set.front(), n_hat, n_fft);
  for (std::size_t i = 1; i < eps_set.size(); ++i) {
    const CztRefinement z = czt_refine(eps_set[i], n_hat, n_fft);
    for (std::size_t m = 0; m < acc.power.size(); ++m) {
      acc.power[m] += z.power[m];
    }
  }
  const auto it = std::max_element(acc.power.begin(), acc.power.end());
  PeakEstimate peak;
  peak.coarse_index = n_hat;
  peak.fine_index = static_cast<int>(it - acc.power.begin());
  peak.tau_hat_s = acc.tau(peak.fine_index);
  peak.peak_power = *it / static_cast<double>(eps_set.size());
  return peak;
}

}  // namespace

TrialResult estimate_from_waveform(const BasebandWaveform& rx, const TrialSpec& spec) {
  const CarrierConfig carrier = validate_carrier(spec.carrier);
  const SrsConfig srs = validate_srs(spec.srs, carrier);
  const SlotTiming timing = slot_timing(carrier.mu);
  const ResourceGrid tx = generate_srs_grid(srs, carrier, spec.root_u);

  TrialResult result;
  try {
    const std::size_t burst_start = detect_start(rx, timing, spec.estimator.start_threshold);
    result.detected_start = burst_start;

    const auto guard = static_cast<std::size_t>(std::max(0, spec.estimator.start_guard_samples));
    const std::size_t window_start = burst_start >= guard ? burst_start - guard : 0;
    const ReceivedGrid rx_grid =
        demodulate(rx, window_start, timing, carrier, srs.n_symb_srs, srs.start_symbol);

    std::vector<EqualizedVector> eps_set;
    if (spec.estimator.average_symbols) {
      for (int l = srs.start_symbol; l < srs.start_symbol + srs.n_symb_srs; ++l) {
        eps_set.push_back(equalize(rx_grid, tx, l, timing.delta_f_hz));
      }
    } else {
      eps_set.push_back(equalize(rx_grid, tx, srs.start_symbol, timing.delta_f_hz));
    }

    std::vector<RangeProfile> profiles;
    profiles.reserve(eps_set.size());
    for (const EqualizedVector& eps : eps_set) {
      profiles.push_back(range_profile(eps, spec.estimator.n_fft));
    }
    result.profile = profiles.size() == 1 ? std::move(profiles.front())
                                          : average_profiles(profiles);

    const int alias_period = srs.k_tc > 1 ? spec.estimator.n_fft / srs.k_tc : 0;
    const TwoPeaks peaks =
        find_two_peaks(result.profile, auto_min_separation(spec.estimator, srs), alias_period,
                       spec.estimator.prominence_db, spec.estimator.peak_drop_db);

    const PeakEstimate ref = averaged_peak(eps_set, peaks.n_ref, spec.estimator.n_fft);
    const PeakEstimate target = averaged_peak(eps_set, peaks.n_target, spec.estimator.n_fft);

    result.range =
        estimate_range(ref, target, spec.estimator.mode, spec.estimator.velocity_mps);
    result.resolved = true;
    result.abs_error_m = std::abs(spec.r_true_m - result.range.range_m);
  } catch (const SignalError& e) {
    result.resolved = false;
    result.diagnostic = e.what();
    result.abs_error_m = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

TrialResult run_trial(const TrialSpec& spec) {
  const CarrierConfig carrier = validate_carrier(spec.carrier);
  const SrsConfig srs = validate_srs(spec.srs, carrier);
  const SlotTiming timing = slot_timing(carrier.mu);

  const ResourceGrid tx = generate_srs_grid(srs, carrier, spec.root_u);
  BasebandWaveform wf = modulate(tx, timing, carrier, spec.beta);

  if (spec.lead_in_samples > 0 || spec.tail_pad_samples > 0) {
    std::vector<cf64> padded(spec.lead_in_samples + wf.samples.size() + spec.tail_pad_samples,
                             cf64{});
    std::copy(wf.samples.begin(), wf.samples.end(), padded.begin() + spec.lead_in_samples);
    wf.samples = std::move(padded);
  }

  ChannelConfig channel = spec.channel;
  channel.f0_hz = carrier.f0_hz;
  const BasebandWaveform rx = apply_channel(wf, channel, timing);

  return estimate_from_waveform(rx, spec);
}

double min_bandwidth_hz(double r_meters) {
  if (!(r_meters > 0.0)) {
    throw ConfigError("path difference must be positive");
  }
  return c0_mps / r_meters;
}

std::vector<SweepRow> sweep_bandwidth(const TrialSpec& base, std::span<const int> m_sc_list,
                                      std::span<const std::uint64_t> seeds) {
  std::vector<SweepRow> rows;
  rows.reserve(m_sc_list.size() * std::max<std::size_t>(1, seeds.size()));
  const std::vector<std::uint64_t> seed_list =
      seeds.empty() ? std::vector<std::uint64_t>{base.channel.rng_seed}
                    : std::vector<std::uint64_t>(seeds.begin(), seeds.end());

  for (const int m_sc : m_sc_list) {
    for (const std::uint64_t seed : seed_list) {
      TrialSpec spec = base;
      spec.srs.m_sc = m_sc;
      spec.channel.rng_seed = seed;

      SweepRow row;
      row.m_sc = m_sc;
      row.r_true_m = spec.r_true_m;
      row.seed = seed;
      row.bandwidth_hz = occupied_bandwidth_hz(spec.srs, spec.carrier.mu);
      try {
        const TrialResult res = run_trial(spec);
        row.resolved = res.resolved;
        if (res.resolved) {
          row.r_hat_m = res.range.range_m;
          row.abs_error_m = res.abs_error_m;
        } else {
          row.r_hat_m = std::numeric_limits<double>::quiet_NaN();
          row.abs_error_m = std::numeric_limits<double>::quiet_NaN();
        }
      } catch (const std::exception&) {
        // invalid cell (for example a comb that no longer fits the grid)
        row.resolved = false;
        row.r_hat_m = std::numeric_limits<double>::quiet_NaN();
        row.abs_error_m = std::numeric_limits<double>::quiet_NaN();
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<int> log_spaced_m_sc(int lo, int hi, int points) {
  if (lo <= 0 || hi < lo || points <= 0) {
    throw ConfigError("invalid sweep grid");
  }
  std::vector<int> out;
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    const double v = lo * std::pow(static_cast<double>(hi) / lo, t);
    const int m = static_cast<int>(std::lround(v));
    if (out.empty() || out.back() != m) {
      out.push_back(m);
    }
  }
  return out;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows, double b_min_hz) {
  std::ostringstream fmt;
  fmt.precision(9);
  if (b_min_hz > 0.0) {
    fmt << "# b_min_hz = " << b_min_hz << '\n';
  }
  fmt << "m_sc,bandwidth_hz,r_true_m,r_hat_m,abs_error_m,resolved,seed\n";
  for (const SweepRow& r : rows) {
    fmt << r.m_sc << ',' << r.bandwidth_hz << ',' << r.r_true_m << ',' << r.r_hat_m << ','
        << r.abs_error_m << ',' << (r.resolved ? "true" : "false") << ',' << r.seed << '\n';
  }
  os << fmt.str();
}

TrialResult process_capture(const std::filesystem::path& iq_path, const TrialSpec& spec) {
  CaptureMetadata meta;
  const BasebandWaveform rx = read_capture(iq_path, &meta);

  const double expected_rate =
      static_cast<double>(modem_fft_size) * subcarrier_spacing_hz(spec.carrier.mu);
  if (std::abs(meta.sample_rate_hz - expected_rate) > 1e-6 * expected_rate) {
    std::ostringstream oss;
    oss << "capture sample rate " << meta.sample_rate_hz << " Hz does not match the mu-derived "
        << expected_rate << " Hz within 1 ppm";
    throw IoError(oss.str());
  }
  return estimate_from_waveform(rx, spec);
}

TrialSpec trial_spec_from_config(const ConfigFile& cfg) {
  TrialSpec spec;

  spec.carrier.mu = cfg.get_int("carrier", "mu", spec.carrier.mu);
  spec.carrier.f0_hz = cfg.get_num("carrier", "f0_hz", spec.carrier.f0_hz);
  spec.carrier.n_grid_subcarriers =
      cfg.get_int("carrier", "n_grid_subcarriers", spec.carrier.n_grid_subcarriers);

  spec.srs.k_tc = cfg.get_int("srs", "k_tc", spec.srs.k_tc);
  spec.srs.comb_offset = cfg.get_int("srs", "comb_offset", spec.srs.comb_offset);
  spec.srs.m_sc = cfg.get_int("srs", "m_sc", spec.srs.m_sc);
  spec.srs.n_symb_srs = cfg.get_int("srs", "n_symb_srs", spec.srs.n_symb_srs);
  spec.srs.start_symbol = cfg.get_int("srs", "start_symbol", spec.srs.start_symbol);
  spec.root_u = cfg.get_int("srs", "root_u", spec.root_u);

  const std::string mode = cfg.get_str("estimator", "mode", "differential_cable");
  if (mode == "absolute") {
    spec.estimator.mode = RangeMode::absolute_radar;
  } else if (mode == "differential_radar") {
    spec.estimator.mode = RangeMode::differential_radar;
  } else if (mode == "differential_cable") {
    spec.estimator.mode = RangeMode::differential_cable;
  } else {
    throw ConfigError("unknown estimator mode: " + mode);
  }
  spec.estimator.n_fft = cfg.get_int("estimator", "n_fft", spec.estimator.n_fft);
  spec.estimator.prominence_db =
      cfg.get_num("estimator", "prominence_db", spec.estimator.prominence_db);
  spec.estimator.peak_drop_db =
      cfg.get_num("estimator", "peak_drop_db", spec.estimator.peak_drop_db);
  spec.estimator.min_separation_bins =
      cfg.get_int("estimator", "min_separation_bins", spec.estimator.min_separation_bins);
  spec.estimator.average_symbols =
      cfg.get_bool("estimator", "average_symbols", spec.estimator.average_symbols);
  spec.estimator.start_threshold =
      cfg.get_num("estimator", "start_threshold", spec.estimator.start_threshold);
  spec.estimator.start_guard_samples =
      cfg.get_int("estimator", "start_guard_samples", spec.estimator.start_guard_samples);

  const double velocity_factor = cfg.get_num("channel", "velocity_factor", 0.7);
  if (!(velocity_factor > 0.0) || velocity_factor > 1.0) {
    throw ConfigError("velocity_factor must be in (0, 1]");
  }
  spec.estimator.velocity_mps = velocity_factor * c0_mps;
  // Range-to-delay conversion: one-way at v_p for the cable scenario,
  // two-way (c0 / 2) for the radar convention.
  const double convert_velocity = spec.estimator.mode == RangeMode::differential_cable
                                      ? spec.estimator.velocity_mps
                                      : 0.5 * c0_mps;

  const auto explicit_paths = cfg.sections_with_prefix("channel.path");
  if (!explicit_paths.empty()) {
    spec.channel.paths.clear();
    for (const std::string& sec : explicit_paths) {
      PathSpec p;
      if (cfg.has(sec, "delay_ns")) {
        p.delay_s = cfg.get_num(sec, "delay_ns", 0.0) * 1e-9;
      } else if (cfg.has(sec, "range_m")) {
        p.delay_s = cfg.get_num(sec, "range_m", 0.0) / convert_velocity;
      } else {
        throw ConfigError("path section " + sec + " needs delay_ns or range_m");
      }
      const double gain_db = cfg.get_num(sec, "gain_db", 0.0);
      const double phase_deg = cfg.get_num(sec, "phase_deg", 0.0);
      p.gain = std::polar(std::pow(10.0, gain_db / 20.0), phase_deg * pi / 180.0);
      p.label = spec.channel.paths.empty() ? PathSpec::Label::reference : PathSpec::Label::target;
      spec.channel.paths.push_back(p);
    }
    if (spec.channel.paths.size() >= 2) {
      spec.r_true_m =
          (spec.channel.paths[1].delay_s - spec.channel.paths[0].delay_s) * convert_velocity;
    } else {
      spec.r_true_m = spec.channel.paths[0].delay_s * 0.5 * c0_mps;
    }
  } else {
    const double range_m = cfg.get_num("channel", "range_m", 2.76);
    const double tau_ref_s = cfg.get_num("channel", "tau_ref_ns", 50.0) * 1e-9;
    const cf64 gain_ref = std::polar(std::pow(10.0, cfg.get_num("channel", "gain_ref_db", 0.0) / 20.0),
                                     cfg.get_num("channel", "phase_ref_deg", 0.0) * pi / 180.0);
    const cf64 gain_target =
        std::polar(std::pow(10.0, cfg.get_num("channel", "gain_target_db", -6.0206) / 20.0),
                   cfg.get_num("channel", "phase_target_deg", 0.0) * pi / 180.0);
    spec.channel = two_path_channel(range_m, convert_velocity, tau_ref_s, gain_ref, gain_target);
    spec.r_true_m = range_m;
  }

  const std::string snr = cfg.get_str("channel", "snr_db", "noiseless");
  if (snr != "noiseless") {
    spec.channel.snr_db = cfg.get_num("channel", "snr_db", 0.0);
  }
  spec.channel.rng_seed = static_cast<std::uint64_t>(cfg.get_num("channel", "seed", 0.0));
  spec.channel.f0_hz = spec.carrier.f0_hz;

  spec.beta = cfg.get_num("trial", "beta", spec.beta);
  spec.lead_in_samples =
      static_cast<std::size_t>(cfg.get_int("trial", "lead_in_samples", 0));
  spec.tail_pad_samples = static_cast<std::size_t>(
      cfg.get_int("trial", "tail_pad_samples", static_cast<int>(spec.tail_pad_samples)));

  validate_carrier(spec.carrier);
  validate_srs(spec.srs, spec.carrier);
  return spec;
}

SweepPlan sweep_plan_from_config(const ConfigFile& cfg) {
  SweepPlan plan;
  const int lo = cfg.get_int("sweep", "m_sc_min", 24);
  const int hi = cfg.get_int("sweep", "m_sc_max", 1584);
  const int points = cfg.get_int("sweep", "points", 32);
  plan.m_sc_list = log_spaced_m_sc(lo, hi, points);

  const std::string seeds = cfg.get_str("sweep", "seeds", "0");
  std::istringstream ss(seeds);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) {
      continue;
    }
    try {
      plan.seeds.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      throw ConfigError("malformed seed list: " + seeds);
    }
  }
  if (plan.seeds.empty()) {
    plan.seeds.push_back(0);
  }
  return plan;
}

}  // namespace nrsense
