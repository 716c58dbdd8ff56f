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

#include <complex>
#include <numbers>

namespace nrsense {

using cf64 = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Speed of light in vacuum [m/s].
inline constexpr double c0_mps = 299792458.0;

}  // namespace nrsense
