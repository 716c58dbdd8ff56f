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

#include <stdexcept>
#include <string>

namespace nrsense {

/// Invalid or inconsistent configuration (bad numerology, comb, grid fit, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Signal-level processing failure (no signal detected, degenerate profile, ...).
struct SignalError : std::runtime_error {
  explicit SignalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Fewer than two separable peaks in a range profile.
struct UnresolvedPeaksError : SignalError {
  explicit UnresolvedPeaksError(const std::string& msg) : SignalError(msg) {}
};

/// File format or I/O failure.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nrsense
