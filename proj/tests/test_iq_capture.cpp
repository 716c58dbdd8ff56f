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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "nrsense/errors.hpp"
#include "nrsense/iq_capture.hpp"
#include "test_util.hpp"

using namespace nrsense;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("nrsense_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("byte layout is little-endian float pairs") {
  TempDir dir;
  const fs::path file = dir.path / "layout.iq";

  BasebandWaveform wf;
  wf.sample_rate_hz = 491.52e6;
  wf.samples = {cf64{1.5, -2.25}, cf64{0.0, 1.0}};
  CaptureMetadata meta;
  meta.sample_rate_hz = wf.sample_rate_hz;
  meta.f0_hz = 25e9;
  meta.mu = 3;
  write_capture(file, wf, meta);

  std::ifstream in(file, std::ios::binary);
  unsigned char bytes[16];
  in.read(reinterpret_cast<char*>(bytes), 16);
  REQUIRE(in.gcount() == 16);

  // 1.5f = 0x3FC00000, -2.25f = 0xC0100000, 0.0f = 0, 1.0f = 0x3F800000
  const unsigned char expected[16] = {0x00, 0x00, 0xC0, 0x3F, 0x00, 0x00, 0x10, 0xC0,
                                      0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x80, 0x3F};
  for (int i = 0; i < 16; ++i) {
    CHECK(bytes[i] == expected[i]);
  }
}

TEST_CASE("round trip preserves float-narrowed samples and metadata") {
  TempDir dir;
  const fs::path file = dir.path / "roundtrip.iq";

  std::mt19937_64 rng(5);
  BasebandWaveform wf;
  wf.sample_rate_hz = 491.52e6;
  wf.samples = test::random_cvec(rng, 1000);
  CaptureMetadata meta;
  meta.sample_rate_hz = wf.sample_rate_hz;
  meta.f0_hz = 25e9;
  meta.mu = 3;
  meta.timestamp = "2026-01-02T03:04:05Z";
  write_capture(file, wf, meta);

  CaptureMetadata read_meta;
  const BasebandWaveform back = read_capture(file, &read_meta);
  REQUIRE(back.samples.size() == wf.samples.size());
  for (std::size_t i = 0; i < wf.samples.size(); ++i) {
    CHECK(back.samples[i].real() == static_cast<double>(static_cast<float>(wf.samples[i].real())));
    CHECK(back.samples[i].imag() == static_cast<double>(static_cast<float>(wf.samples[i].imag())));
  }
  CHECK(read_meta.sample_rate_hz == meta.sample_rate_hz);
  CHECK(read_meta.f0_hz == meta.f0_hz);
  CHECK(read_meta.mu == 3);
  CHECK(read_meta.timestamp == meta.timestamp);
}

TEST_CASE("truncated payload is rejected") {
  TempDir dir;
  const fs::path file = dir.path / "trunc.iq";

  BasebandWaveform wf;
  wf.sample_rate_hz = 491.52e6;
  wf.samples = {cf64{1.0, 2.0}, cf64{3.0, 4.0}};
  CaptureMetadata meta;
  meta.sample_rate_hz = wf.sample_rate_hz;
  write_capture(file, wf, meta);

  fs::resize_file(file, 12);  // not a multiple of 8
  CHECK_THROWS_AS(read_capture(file, nullptr), IoError);
}

TEST_CASE("missing pieces are rejected") {
  TempDir dir;
  CHECK_THROWS_AS(read_capture(dir.path / "absent.iq", nullptr), IoError);

  // payload without sidecar
  const fs::path orphan = dir.path / "orphan.iq";
  std::ofstream(orphan, std::ios::binary).write("\0\0\0\0\0\0\0\0", 8);
  CHECK_THROWS_AS(read_capture(orphan, nullptr), IoError);

  // sidecar without a sample rate
  const fs::path norate = dir.path / "norate.iq";
  std::ofstream(norate, std::ios::binary).write("\0\0\0\0\0\0\0\0", 8);
  std::ofstream(metadata_path(norate)) << "mu = 3\n";
  CHECK_THROWS_AS(read_capture(norate, nullptr), IoError);
}
