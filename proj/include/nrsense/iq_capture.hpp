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

#include <filesystem>
#include <string>

#include "nrsense/ofdm_modem.hpp"

namespace nrsense {

// IQ capture files: little-endian interleaved 32-bit float I/Q pairs, sample
// i at bytes [8i, 8i+8) as (I: float32, Q: float32), independent of host
// endianness. A text sidecar "<file>.meta" carries the capture parameters as
// key = value lines.

struct CaptureMetadata {
  double sample_rate_hz = 0.0;
  double f0_hz = 0.0;
  int mu = 0;
  std::string timestamp;  // ISO 8601 UTC
};

std::filesystem::path metadata_path(const std::filesystem::path& iq_path);

/// Writes samples (narrowed to float32) and the sidecar. Timestamp defaults
/// to the current UTC time when empty.
void write_capture(const std::filesystem::path& iq_path, const BasebandWaveform& waveform,
                   CaptureMetadata meta);

/// Reads a capture and its sidecar. Throws IoError on missing files, a
/// truncated payload (byte count not a multiple of 8) or a malformed sidecar.
BasebandWaveform read_capture(const std::filesystem::path& iq_path, CaptureMetadata* meta_out);

}  // namespace nrsense
