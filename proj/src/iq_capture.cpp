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

#include "nrsense/iq_capture.hpp"

#include <bit>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <vector>

#include "nrsense/errors.hpp"

namespace nrsense {

namespace {

void put_f32_le(std::vector<unsigned char>& out, float v) {
  const auto bits = std::bit_cast<std::uint32_t>(v);
  out.push_back(static_cast<unsigned char>(bits & 0xFF));
  out.push_back(static_cast<unsigned char>((bits >> 8) & 0xFF));
  out.push_back(static_cast<unsigned char>((bits >> 16) & 0xFF));
  out.push_back(static_cast<unsigned char>((bits >> 24) & 0xFF));
}

float get_f32_le(const unsigned char* p) {
  const std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                             (static_cast<std::uint32_t>(p[1]) << 8) |
                             (static_cast<std::uint32_t>(p[2]) << 16) |
                             (static_cast<std::uint32_t>(p[3]) << 24);
  return std::bit_cast<float>(bits);
}

std::string utc_now_iso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

std::filesystem::path metadata_path(const std::filesystem::path& iq_path) {
  std::filesystem::path p = iq_path;
  p += ".meta";
  return p;
}

void write_capture(const std::filesystem::path& iq_path, const BasebandWaveform& waveform,
                   CaptureMetadata meta) {
  std::vector<unsigned char> bytes;
  bytes.reserve(waveform.samples.size() * 8);
  for (const cf64& s : waveform.samples) {
    put_f32_le(bytes, static_cast<float>(s.real()));
    put_f32_le(bytes, static_cast<float>(s.imag()));
  }

  std::ofstream iq(iq_path, std::ios::binary | std::ios::trunc);
  if (!iq) {
    throw IoError("cannot open capture file for writing: " + iq_path.string());
  }
  iq.write(reinterpret_cast<const char*>(bytes.data()),
           static_cast<std::streamsize>(bytes.size()));
  if (!iq) {
    throw IoError("short write on capture file: " + iq_path.string());
  }

  if (meta.timestamp.empty()) {
    meta.timestamp = utc_now_iso8601();
  }
  std::ofstream sidecar(metadata_path(iq_path), std::ios::trunc);
  if (!sidecar) {
    throw IoError("cannot open metadata sidecar for writing");
  }
  sidecar.precision(17);
  sidecar << "sample_rate_hz = " << meta.sample_rate_hz << '\n'
          << "f0_hz = " << meta.f0_hz << '\n'
          << "mu = " << meta.mu << '\n'
          << "timestamp = " << meta.timestamp << '\n';
}

BasebandWaveform read_capture(const std::filesystem::path& iq_path, CaptureMetadata* meta_out) {
  std::ifstream iq(iq_path, std::ios::binary | std::ios::ate);
  if (!iq) {
    throw IoError("cannot open capture file: " + iq_path.string());
  }
  const std::streamsize size = iq.tellg();
  if (size <= 0) {
    throw IoError("empty capture file: " + iq_path.string());
  }
  if (size % 8 != 0) {
    throw IoError("truncated capture file, byte count not a multiple of 8");
  }
  iq.seekg(0);
  std::vector<unsigned char> bytes(static_cast<std::size_t>(size));
  iq.read(reinterpret_cast<char*>(bytes.data()), size);
  if (!iq) {
    throw IoError("short read on capture file: " + iq_path.string());
  }

  CaptureMetadata meta;
  std::ifstream sidecar(metadata_path(iq_path));
  if (!sidecar) {
    throw IoError("missing metadata sidecar: " + metadata_path(iq_path).string());
  }
  bool have_rate = false;
  std::string line;
  while (std::getline(sidecar, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "sample_rate_hz") {
        meta.sample_rate_hz = std::stod(value);
        have_rate = true;
      } else if (key == "f0_hz") {
        meta.f0_hz = std::stod(value);
      } else if (key == "mu") {
        meta.mu = std::stoi(value);
      } else if (key == "timestamp") {
        meta.timestamp = value;
      }
    } catch (const std::exception&) {
      throw IoError("malformed metadata value for key '" + key + "'");
    }
  }
  if (!have_rate || !(meta.sample_rate_hz > 0.0)) {
    throw IoError("metadata sidecar lacks a valid sample_rate_hz");
  }

  BasebandWaveform wf;
  wf.sample_rate_hz = meta.sample_rate_hz;
  const std::size_t n = bytes.size() / 8;
  wf.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned char* p = bytes.data() + 8 * i;
    wf.samples[i] = cf64{static_cast<double>(get_f32_le(p)),
                         static_cast<double>(get_f32_le(p + 4))};
  }
  if (meta_out != nullptr) {
    *meta_out = meta;
  }
  return wf;
}

}  // namespace nrsense
