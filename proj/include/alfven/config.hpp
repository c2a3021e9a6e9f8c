// Copyright 2026 The Alfven Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "alfven/simulate.hpp"
#include "alfven/study.hpp"

namespace alfven {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` settings. Lines starting with '#' are comments. Reals
/// accept a trailing "pi" factor ("32pi"); lists are comma separated;
/// booleans are true/false.
struct ConfigMap {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
};

struct ConfigKey {
  const char* name;
  const char* help;
};

/// Every accepted key.
const std::vector<ConfigKey>& config_keys();

/// Throws ConfigError naming `source:line` for unknown keys or malformed lines.
ConfigMap parse_config(std::istream& in, const std::string& source = "<config>");
ConfigMap load_config(const std::string& path);
/// "key=value" override.
void apply_override(ConfigMap& cfg, const std::string& assignment);
/// Canonical text form, one key per line, sorted by key.
std::string render(const ConfigMap& cfg);

double parse_real_value(const std::string& key, const std::string& v);
std::vector<double> parse_real_list(const std::string& key, const std::string& v);

SimConfig to_sim_config(const ConfigMap& cfg, SimConfig base = {});
StudyConfig to_study_config(const ConfigMap& cfg, StudyConfig base = {});

}  // namespace alfven
