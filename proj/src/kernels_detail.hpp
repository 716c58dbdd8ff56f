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

#include "nrsense/common.hpp"

namespace nrsense::kern::detail {

struct Vtable {
  void (*mul)(const cf64*, const cf64*, cf64*, std::size_t);
  void (*scale)(cf64, const cf64*, cf64*, std::size_t);
  void (*abs2)(const cf64*, double*, std::size_t);
  double (*energy)(const cf64*, std::size_t);
};

extern const Vtable scalar_vtable;

#if defined(NRSENSE_HAVE_AVX2_SOURCES)
extern const Vtable avx2_vtable;
#endif

}  // namespace nrsense::kern::detail
