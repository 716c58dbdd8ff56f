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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrsense/errors.hpp"
#include "nrsense/harness.hpp"
#include "nrsense/iq_capture.hpp"

namespace {

using nrsense::ConfigFile;

struct Override {
  std::string section;
  std::string key;
  std::string flag;  // CLI flag, mirrors the config key
};

// Flags mirror the config-file keys and take precedence over the file.
const std::vector<Override> overrides = {
    {"carrier", "mu", "--mu"},
    {"carrier", "f0_hz", "--f0_hz"},
    {"carrier", "n_grid_subcarriers", "--n_grid_subcarriers"},
    {"srs", "k_tc", "--k_tc"},
    {"srs", "comb_offset", "--comb_offset"},
    {"srs", "m_sc", "--m_sc"},
    {"srs", "n_symb_srs", "--n_symb_srs"},
    {"srs", "start_symbol", "--start_symbol"},
    {"srs", "root_u", "--root_u"},
    {"channel", "range_m", "--range_m"},
    {"channel", "velocity_factor", "--velocity_factor"},
    {"channel", "tau_ref_ns", "--tau_ref_ns"},
    {"channel", "gain_ref_db", "--gain_ref_db"},
    {"channel", "phase_ref_deg", "--phase_ref_deg"},
    {"channel", "gain_target_db", "--gain_target_db"},
    {"channel", "phase_target_deg", "--phase_target_deg"},
    {"channel", "snr_db", "--snr_db"},
    {"channel", "seed", "--seed"},
    {"estimator", "mode", "--mode"},
    {"estimator", "n_fft", "--n_fft"},
    {"estimator", "prominence_db", "--prominence_db"},
    {"estimator", "peak_drop_db", "--peak_drop_db"},
    {"estimator", "min_separation_bins", "--min_separation_bins"},
    {"estimator", "average_symbols", "--average_symbols"},
    {"estimator", "start_threshold", "--start_threshold"},
    {"estimator", "start_guard_samples", "--start_guard_samples"},
    {"trial", "beta", "--beta"},
    {"trial", "lead_in_samples", "--lead_in_samples"},
    {"sweep", "m_sc_min", "--m_sc_min"},
    {"sweep", "m_sc_max", "--m_sc_max"},
    {"sweep", "points", "--points"},
    {"sweep", "seeds", "--seeds"},
};

struct CommonArgs {
  std::string config_path;
  std::vector<std::optional<std::string>> values;

  void attach(CLI::App* cmd) {
    values.assign(overrides.size(), std::nullopt);
    cmd->add_option("-c,--config", config_path,
                    "config file (default: $NRSENSE_CONFIG when set)");
    for (std::size_t i = 0; i < overrides.size(); ++i) {
      cmd->add_option_function<std::string>(
          overrides[i].flag,
          [this, i](const std::string& v) { values[i] = v; },
          "override config key [" + overrides[i].section + "] " + overrides[i].key);
    }
  }

  ConfigFile load() const {
    std::string path = config_path;
    if (path.empty()) {
      if (const char* env = std::getenv("NRSENSE_CONFIG")) {
        path = env;
      }
    }
    ConfigFile cfg = path.empty() ? ConfigFile{} : ConfigFile::parse_file(path);
    for (std::size_t i = 0; i < overrides.size(); ++i) {
      if (values[i].has_value()) {
        cfg.set(overrides[i].section, overrides[i].key, *values[i]);
      }
    }
    return cfg;
  }
};

void print_trial(const nrsense::TrialResult& res, double r_true, double b_min) {
  if (!res.resolved) {
    std::cout << "resolved      : false\n"
              << "diagnostic    : " << res.diagnostic << "\n";
    return;
  }
  std::cout.precision(9);
  std::cout << "resolved      : true\n"
            << "tau_ref_s     : " << res.range.tau_ref_s << "\n"
            << "tau_target_s  : " << res.range.tau_target_s << "\n"
            << "tau_delta_s   : " << res.range.tau_delta_s << "\n"
            << "range_hat_m   : " << res.range.range_m << "\n"
            << "r_true_m      : " << r_true << "\n"
            << "abs_error_m   : " << res.abs_error_m << "\n"
            << "b_min_hz      : " << b_min << "\n"
            << "detected_start: " << res.detected_start << "\n";
}

int run_validate(const CommonArgs& args, const std::string& grid_dump) {
  const ConfigFile cfg = args.load();
  nrsense::TrialSpec spec;
  try {
    spec = nrsense::trial_spec_from_config(cfg);
  } catch (const nrsense::ConfigError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  }
  std::cout << "config valid\n";
  std::cout.precision(9);
  std::cout << "occupied_bandwidth_hz: "
            << nrsense::occupied_bandwidth_hz(spec.srs, spec.carrier.mu) << "\n";
  if (!grid_dump.empty()) {
    const auto grid = nrsense::generate_srs_grid(spec.srs, spec.carrier, spec.root_u);
    std::ofstream out(grid_dump);
    if (!out) {
      throw nrsense::IoError("cannot open grid dump file: " + grid_dump);
    }
    nrsense::dump_occupied(out, grid);
    std::cout << "grid dump written to " << grid_dump << "\n";
  }
  return 0;
}

int run_trial_cmd(const CommonArgs& args, const std::string& profile_out,
                  const std::string& capture_out) {
  const ConfigFile cfg = args.load();
  const nrsense::TrialSpec spec = nrsense::trial_spec_from_config(cfg);

  if (!capture_out.empty()) {
    // Re-run the front half to capture the channel output.
    const auto timing = nrsense::slot_timing(spec.carrier.mu);
    const auto grid = nrsense::generate_srs_grid(spec.srs, spec.carrier, spec.root_u);
    auto wf = nrsense::modulate(grid, timing, spec.carrier, spec.beta);
    if (spec.lead_in_samples > 0 || spec.tail_pad_samples > 0) {
      std::vector<nrsense::cf64> padded(
          spec.lead_in_samples + wf.samples.size() + spec.tail_pad_samples, nrsense::cf64{});
      std::copy(wf.samples.begin(), wf.samples.end(), padded.begin() + spec.lead_in_samples);
      wf.samples = std::move(padded);
    }
    auto channel = spec.channel;
    channel.f0_hz = spec.carrier.f0_hz;
    const auto rx = nrsense::apply_channel(wf, channel, timing);
    nrsense::CaptureMetadata meta;
    meta.sample_rate_hz = rx.sample_rate_hz;
    meta.f0_hz = spec.carrier.f0_hz;
    meta.mu = spec.carrier.mu;
    nrsense::write_capture(capture_out, rx, meta);
    std::cout << "capture written to " << capture_out << "\n";
  }

  const nrsense::TrialResult res = nrsense::run_trial(spec);
  print_trial(res, spec.r_true_m, nrsense::min_bandwidth_hz(spec.r_true_m));
  if (res.resolved && !profile_out.empty()) {
    std::ofstream out(profile_out);
    if (!out) {
      throw nrsense::IoError("cannot open profile file: " + profile_out);
    }
    nrsense::write_profile(out, res.profile);
    std::cout << "profile written to " << profile_out << "\n";
  }
  return res.resolved ? 0 : 3;
}

int run_sweep(const CommonArgs& args, const std::string& csv_out) {
  const ConfigFile cfg = args.load();
  const nrsense::TrialSpec spec = nrsense::trial_spec_from_config(cfg);
  const nrsense::SweepPlan plan = nrsense::sweep_plan_from_config(cfg);

  const auto rows = nrsense::sweep_bandwidth(spec, plan.m_sc_list, plan.seeds);
  const double b_min = nrsense::min_bandwidth_hz(spec.r_true_m);
  if (csv_out.empty()) {
    nrsense::write_sweep_csv(std::cout, rows, b_min);
  } else {
    std::ofstream out(csv_out, std::ios::binary);
    if (!out) {
      throw nrsense::IoError("cannot open csv file: " + csv_out);
    }
    nrsense::write_sweep_csv(out, rows, b_min);
    std::cerr << "csv written to " << csv_out << "\n";
  }
  const bool any_resolved =
      std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.resolved; });
  return any_resolved ? 0 : 3;
}

int run_process(const CommonArgs& args, const std::string& iq_path,
                const std::string& profile_out) {
  const ConfigFile cfg = args.load();
  const nrsense::TrialSpec spec = nrsense::trial_spec_from_config(cfg);
  const nrsense::TrialResult res = nrsense::process_capture(iq_path, spec);
  print_trial(res, spec.r_true_m, nrsense::min_bandwidth_hz(spec.r_true_m));
  if (res.resolved && !profile_out.empty()) {
    std::ofstream out(profile_out);
    if (!out) {
      throw nrsense::IoError("cannot open profile file: " + profile_out);
    }
    nrsense::write_profile(out, res.profile);
  }
  return res.resolved ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"5G NR SRS ranging: waveform simulation and delay estimation"};
  app.require_subcommand(1);

  CommonArgs trial_args, sweep_args, process_args, validate_args;
  std::string profile_out, capture_out, csv_out, iq_path, process_profile_out, grid_dump;

  CLI::App* trial = app.add_subcommand("trial", "run one simulated ranging trial");
  trial_args.attach(trial);
  trial->add_option("--profile-out", profile_out, "write the range profile (tau_s power_db)");
  trial->add_option("--capture-out", capture_out, "record the channel output as an IQ capture");

  CLI::App* sweep = app.add_subcommand("sweep", "error versus occupied bandwidth");
  sweep_args.attach(sweep);
  sweep->add_option("--csv-out", csv_out, "CSV output path (default stdout)");

  CLI::App* process = app.add_subcommand("process", "estimate range from a recorded IQ capture");
  process_args.attach(process);
  process->add_option("--iq", iq_path, "IQ capture file")->required();
  process->add_option("--profile-out", process_profile_out,
                      "write the range profile (tau_s power_db)");

  CLI::App* validate = app.add_subcommand("validate", "check a configuration");
  validate_args.attach(validate);
  validate->add_option("--dump-grid", grid_dump, "write occupied resource elements to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (trial->parsed()) {
      return run_trial_cmd(trial_args, profile_out, capture_out);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_args, csv_out);
    }
    if (process->parsed()) {
      return run_process(process_args, iq_path, process_profile_out);
    }
    if (validate->parsed()) {
      return run_validate(validate_args, grid_dump);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
