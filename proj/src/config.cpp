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

#include "alfven/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

namespace alfven {

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      {"n", "points per axis (sets n1 and n2)"},
      {"n1", "points along x1"},
      {"n2", "points along x2"},
      {"L", "box length (sets L1 and L2)"},
      {"L1", "box length along x1"},
      {"L2", "box length along x2"},
      {"eps", "Alfven number"},
      {"mu", "viscosity"},
      {"nu", "resistivity"},
      {"m", "Sobolev index"},
      {"dt", "time step in the rescaled frame, or auto"},
      {"dt_cap", "upper bound of the automatic step"},
      {"t_end", "final time in the configured frame"},
      {"snapshot_times", "comma separated snapshot times"},
      {"snapshot_count", "equal snapshot intervals when snapshot_times is empty"},
      {"seed", "initial data seed"},
      {"spectrum_width", "Gaussian spectrum width of the initial data"},
      {"target_norm", "||(v0, H0)||_m"},
      {"support_radius", "slab half width R of the initial data, or none"},
      {"nonlinear", "true or false"},
      {"frame", "rescaled or original"},
      {"record_steps", "record per-step norms"},
      {"study", "study name written to the CSV"},
      {"kind", "study kind"},
      {"eps_list", "strictly decreasing eps values"},
      {"theta", "kernel exponent theta"},
      {"c_tilde", "kernel region constant"},
      {"t0", "kernel evaluation time"},
      {"slab_l", "slab multiple l"},
      {"t1", "limit observation time (original frame)"},
      {"samples", "sample count for sampled studies"},
      {"decay_samples", "sample count of the decay constant"},
      {"sample_seeds", "comma separated seeds for sampled studies"},
      {"pressure_index", "Sobolev index of the pressure ratio"},
      {"workers", "concurrent runs"},
      {"deterministic", "write wall_ms = 0"},
  };
  return keys;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool known(const std::string& key) {
  const auto& keys = config_keys();
  return std::any_of(keys.begin(), keys.end(), [&](const ConfigKey& k) { return key == k.name; });
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& v, const char* what) {
  throw ConfigError("key '" + key + "': " + what + " '" + v + "'");
}

long long parse_integer(const std::string& key, const std::string& v) {
  long long out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || p != v.data() + v.size()) {
    bad_value(key, v, "expected an integer, got");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  bad_value(key, v, "expected true or false, got");
}

}  // namespace

double parse_real_value(const std::string& key, const std::string& raw) {
  std::string v = trim(raw);
  double factor = 1.0;
  if (v.size() >= 2 && v.compare(v.size() - 2, 2, "pi") == 0) {
    factor = std::numbers::pi;
    v = trim(v.substr(0, v.size() - 2));
    if (!v.empty() && v.back() == '*') v = trim(v.substr(0, v.size() - 1));
    if (v.empty()) return factor;
  }
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size()) bad_value(key, raw, "expected a real, got");
  return x * factor;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split_list(v)) out.push_back(parse_real_value(key, item));
  return out;
}

ConfigMap parse_config(std::istream& in, const std::string& source) {
  ConfigMap cfg;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    const std::string where = source + ":" + std::to_string(no) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value: " + t);
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (!known(key)) throw ConfigError(where + "unknown key '" + key + "' in line: " + t);
    cfg.values[key] = value;
  }
  return cfg;
}

ConfigMap load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  return parse_config(in, path);
}

void apply_override(ConfigMap& cfg, const std::string& assignment) {
  std::istringstream in(assignment);
  const ConfigMap one = parse_config(in, "--set");
  if (one.values.empty()) throw ConfigError("--set: empty assignment");
  for (const auto& [k, v] : one.values) cfg.values[k] = v;
}

std::string render(const ConfigMap& cfg) {
  std::ostringstream o;
  for (const auto& [k, v] : cfg.values) o << k << " = " << v << '\n';
  return o.str();
}

SimConfig to_sim_config(const ConfigMap& cfg, SimConfig c) {
  const auto get = [&](const char* k) -> const std::string* {
    const auto it = cfg.values.find(k);
    return it == cfg.values.end() ? nullptr : &it->second;
  };
  if (const auto* v = get("n")) c.n1 = c.n2 = static_cast<int>(parse_integer("n", *v));
  if (const auto* v = get("n1")) c.n1 = static_cast<int>(parse_integer("n1", *v));
  if (const auto* v = get("n2")) c.n2 = static_cast<int>(parse_integer("n2", *v));
  if (const auto* v = get("L")) c.length1 = c.length2 = parse_real_value("L", *v);
  if (const auto* v = get("L1")) c.length1 = parse_real_value("L1", *v);
  if (const auto* v = get("L2")) c.length2 = parse_real_value("L2", *v);
  if (const auto* v = get("eps")) c.eps = parse_real_value("eps", *v);
  if (const auto* v = get("mu")) c.mu = parse_real_value("mu", *v);
  if (const auto* v = get("nu")) c.nu = parse_real_value("nu", *v);
  if (const auto* v = get("m")) c.m = static_cast<int>(parse_integer("m", *v));
  if (const auto* v = get("dt")) {
    if (*v == "auto") {
      c.dt.reset();
    } else {
      c.dt = parse_real_value("dt", *v);
    }
  }
  if (const auto* v = get("dt_cap")) c.dt_cap = parse_real_value("dt_cap", *v);
  if (const auto* v = get("t_end")) c.t_end = parse_real_value("t_end", *v);
  if (const auto* v = get("snapshot_times")) c.snapshot_times = parse_real_list("snapshot_times", *v);
  if (const auto* v = get("snapshot_count")) {
    c.snapshot_count = static_cast<int>(parse_integer("snapshot_count", *v));
  }
  if (const auto* v = get("seed")) c.recipe.seed = static_cast<std::uint64_t>(parse_integer("seed", *v));
  if (const auto* v = get("spectrum_width")) {
    c.recipe.spectrum_width = parse_real_value("spectrum_width", *v);
  }
  if (const auto* v = get("target_norm")) c.recipe.target_norm = parse_real_value("target_norm", *v);
  if (const auto* v = get("support_radius")) {
    if (*v == "none") {
      c.recipe.support_radius.reset();
    } else {
      c.recipe.support_radius = parse_real_value("support_radius", *v);
    }
  }
  if (const auto* v = get("nonlinear")) c.nonlinear = parse_bool("nonlinear", *v);
  if (const auto* v = get("record_steps")) c.record_steps = parse_bool("record_steps", *v);
  if (const auto* v = get("frame")) {
    if (*v == "rescaled") {
      c.frame = Frame::rescaled;
    } else if (*v == "original") {
      c.frame = Frame::original;
    } else {
      bad_value("frame", *v, "expected rescaled or original, got");
    }
  }
  c.recipe.m = c.m;
  return c;
}

StudyConfig to_study_config(const ConfigMap& cfg, StudyConfig s) {
  s.base = to_sim_config(cfg, s.base);
  const auto get = [&](const char* k) -> const std::string* {
    const auto it = cfg.values.find(k);
    return it == cfg.values.end() ? nullptr : &it->second;
  };
  if (const auto* v = get("study")) s.name = *v;
  if (const auto* v = get("kind")) {
    try {
      s.kind = parse_study_kind(*v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("key 'kind': ") + e.what());
    }
  }
  if (const auto* v = get("eps_list")) s.eps_list = parse_real_list("eps_list", *v);
  if (const auto* v = get("theta")) s.theta = parse_real_value("theta", *v);
  if (const auto* v = get("c_tilde")) s.c_tilde = parse_real_value("c_tilde", *v);
  if (const auto* v = get("t0")) s.t0 = parse_real_value("t0", *v);
  if (const auto* v = get("slab_l")) s.slab_l = parse_real_value("slab_l", *v);
  if (const auto* v = get("t1")) s.t1 = parse_real_value("t1", *v);
  if (const auto* v = get("samples")) s.samples = static_cast<int>(parse_integer("samples", *v));
  if (const auto* v = get("decay_samples")) {
    s.decay_samples = static_cast<int>(parse_integer("decay_samples", *v));
  }
  if (const auto* v = get("sample_seeds")) {
    s.sample_seeds.clear();
    for (const auto& item : split_list(*v)) {
      s.sample_seeds.push_back(static_cast<std::uint64_t>(parse_integer("sample_seeds", item)));
    }
  }
  if (const auto* v = get("pressure_index")) {
    s.pressure_index = static_cast<int>(parse_integer("pressure_index", *v));
  }
  if (const auto* v = get("workers")) s.workers = static_cast<int>(parse_integer("workers", *v));
  if (const auto* v = get("deterministic")) s.deterministic = parse_bool("deterministic", *v);
  return s;
}

}  // namespace alfven
