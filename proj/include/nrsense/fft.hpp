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

#include <cstddef>
#include <span>
#include <vector>

#include "nrsense/common.hpp"

namespace nrsense {

enum class FftDirection { forward, inverse };

/// In-place DFT of arbitrary length, unnormalized in both directions:
///   forward:  X[n] = sum_k x[k] exp(-j 2 pi k n / N)
///   inverse:  X[n] = sum_k x[k] exp(+j 2 pi k n / N)
/// Power-of-two lengths run radix-2; everything else goes through Bluestein.
/// Callers that need a round trip scale by 1/N themselves.
void fft(std::span<cf64> data, FftDirection dir);

/// Chirp-Z evaluation
///   X[m] = sum_k x[k] exp(j (alpha k + omega k m)),  m in [0, m_out)
/// i.e. the spectrum of x on the contour starting at phase-rate alpha and
/// stepping by omega per output point. alpha = 0, omega = -2 pi / N is the
/// plain forward DFT.
std::vector<cf64> czt(std::span<const cf64> x, std::size_t m_out, double alpha, double omega);

}  // namespace nrsense
