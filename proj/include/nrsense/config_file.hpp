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

#include <map>
#include <string>
#include <vector>

namespace nrsense {

/// Human-editable key-value configuration with [section] headers, '#' / ';'
/// comments and "key = value" lines. Unknown keys are preserved; typed
/// getters throw ConfigError on malformed values.
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_string(const std::string& text);

  bool has(const std::string& section, const std::string& key) const;
  void set(const std::string& section, const std::string& key, const std::string& value);

  std::string get_str(const std::string& section, const std::string& key,
                      const std::string& fallback) const;
  double get_num(const std::string& section, const std::string& key, double fallback) const;
  int get_int(const std::string& section, const std::string& key, int fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

  /// Section names that start with `prefix`, in lexical order.
  std::vector<std::string> sections_with_prefix(const std::string& prefix) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace nrsense
