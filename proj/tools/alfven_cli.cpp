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

// Command line front end: one subcommand per workflow.
//
//   alfven simulate --config ref.cfg --set eps=0.05 --out runs/ref
//   alfven scaling  --config sweep.cfg --out studies/
//   alfven report   --in studies/ --out report.json
//
// Exit codes: 0 success, 1 usage or config error, 2 numerical abort,
// 3 acceptance failure (report only).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alfven/config.hpp"
#include "alfven/diagnostics.hpp"
#include "alfven/report.hpp"
#include "alfven/simulate.hpp"
#include "alfven/snapshot_io.hpp"
#include "alfven/study.hpp"

namespace fs = std::filesystem;
using namespace alfven;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitAbort = 2;
constexpr int kExitAcceptance = 3;

struct Common {
  std::string config;
  std::vector<std::string> overrides;
  std::string out = ".";
  int verbose = 0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("-c,--config", c.config, "flat key = value config file")->check(CLI::ExistingFile);
  app->add_option("--set", c.overrides, "override, key=value (repeatable)");
  app->add_option("-o,--out", c.out, "output directory");
  app->add_flag("-v,--verbose", c.verbose, "more output");
}

ConfigMap effective_config(const Common& c) {
  ConfigMap cfg = c.config.empty() ? ConfigMap{} : load_config(c.config);
  for (const auto& o : c.overrides) apply_override(cfg, o);
  return cfg;
}

void echo_config(const ConfigMap& cfg, const fs::path& dir) {
  fs::create_directories(dir);
  std::ofstream(dir / "effective.cfg") << render(cfg);
}

void write_diagnostics(const Trajectory& t, const fs::path& dir) {
  DiagnosticsOptions opt;
  if (t.config.recipe.support_radius) opt.slab_radius = *t.config.recipe.support_radius;
  const auto rows = diagnostics_records(t, opt);
  std::ofstream out(dir / "diagnostics.csv", std::ios::binary);
  out << "time,sobolev_m,dissipation_cum,energy_residual,div_max,linf_slab,bilinear_Q,"
         "pressure_ratio\n";
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.time,
                  r.sobolev_m, r.dissipation_cum, r.energy_residual, r.div_max, r.linf_slab,
                  r.bilinear_Q, r.pressure_ratio);
    out << buf;
  }
  std::vector<SpectralState> states;
  for (const auto& s : t.snapshots) states.push_back(s.state);
  write_snapshots((dir / "snapshots.bin").string(), states);
}

void print_summary(const Trajectory& t) {
  const Snapshot& last = t.snapshots.back();
  std::printf("t = %.6g  ||(u,h)||_m = %.6e  energy residual = %.3e  steps = %ld  smallness = %.3e\n",
              last.state.time, last.sobolev_m, energy_residual(t), t.step_count, t.smallness);
}

int run_simulation(const Common& c, bool linear) {
  const ConfigMap cfg = effective_config(c);
  const SimConfig sim = to_sim_config(cfg);
  const fs::path dir(c.out);
  echo_config(cfg, dir);
  try {
    const Trajectory t = linear ? simulate_linear(sim) : simulate(sim);
    write_diagnostics(t, dir);
    print_summary(t);
  } catch (const SimulationAborted& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    if (!e.partial().snapshots.empty()) write_diagnostics(e.partial(), dir);
    return kExitAbort;
  }
  return 0;
}

int workers_from_env(int fallback) {
  if (const char* w = std::getenv("ALFVEN_WORKERS")) {
    const int n = std::atoi(w);
    if (n >= 1) return n;
    throw ConfigError("ALFVEN_WORKERS must be a positive integer");
  }
  return fallback;
}

int run_study_command(const Common& c, std::optional<StudyKind> kind) {
  const ConfigMap cfg = effective_config(c);
  StudyConfig s = to_study_config(cfg);
  if (kind) s.kind = *kind;
  if (!cfg.has("study")) s.name = to_string(s.kind);
  s.workers = workers_from_env(s.workers);
  const fs::path dir(c.out);
  echo_config(cfg, dir);
  s.output = (dir / (s.name + ".csv")).string();
  const StudyTable t = run_study(s);
  bool failed = false;
  for (const auto& r : t) {
    if (c.verbose > 0) std::cout << csv_row(r) << "\n";
    failed = failed || r.observable == observable::kRunFailed;
  }
  std::cout << "wrote " << t.size() << " rows to " << *s.output << "\n";
  return failed ? kExitAbort : 0;
}

int run_report(const std::string& in, const std::string& out) {
  std::vector<std::string> inputs;
  StudyTable all;
  const fs::path p(in);
  if (fs::is_directory(p)) {
    for (const auto& e : fs::directory_iterator(p)) {
      if (e.path().extension() == ".csv") inputs.push_back(e.path().string());
    }
  } else if (fs::exists(p)) {
    inputs.push_back(p.string());
  }
  std::sort(inputs.begin(), inputs.end());
  if (inputs.empty()) {
    std::cerr << "report: no study CSV files under " << in << "\n";
    return kExitUsage;
  }
  for (const auto& f : inputs) {
    const StudyTable t = load_csv(f);
    all.insert(all.end(), t.begin(), t.end());
  }
  const auto results = evaluate_criteria(all);
  emit_report(results, inputs, out);
  for (const auto& r : results) {
    std::printf("%-4s %-6s %s%s%s\n", r.id.c_str(),
                !r.evaluated ? "SKIP" : (r.pass ? "PASS" : "FAIL"), r.title.c_str(),
                r.detail.empty() ? "" : ": ", r.detail.c_str());
  }
  return all_pass(results) ? 0 : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudospectral simulator and scaling harness for 2D incompressible MHD"};
  app.require_subcommand(1);

  Common common;
  auto* sim = app.add_subcommand("simulate", "time-stepped run");
  auto* lin = app.add_subcommand("linear", "linear run by direct propagation");
  auto* scaling = app.add_subcommand("scaling", "study of the configured kind (default stability)");
  auto* error = app.add_subcommand("error", "nonlinear minus linear error sweep");
  auto* limit = app.add_subcommand("limit", "slab limit sweep");
  auto* kernel = app.add_subcommand("kernel", "kernel decomposition sweep");
  auto* verify = app.add_subcommand("verify-propagator", "closed form against the oracle");
  auto* energy = app.add_subcommand("energy", "energy identity residuals");
  auto* report = app.add_subcommand("report", "evaluate acceptance criteria from study CSVs");
  std::string keys = "Config keys:\n";
  for (const auto& k : config_keys()) keys += "  " + std::string(k.name) + ": " + k.help + "\n";
  for (auto* s : {sim, lin, scaling, error, limit, kernel, verify, energy}) {
    add_common(s, common);
    s->footer(keys);
  }
  bool nonlinear_limit = false;
  limit->add_flag("--nonlinear", nonlinear_limit, "nonlinear runs instead of linear ones");
  std::string report_in, report_out = "report.json";
  report->add_option("--in", report_in, "study CSV file or directory")->required();
  report->add_option("--out", report_out, "report JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sim) return run_simulation(common, false);
    if (*lin) return run_simulation(common, true);
    if (*scaling) return run_study_command(common, std::nullopt);
    if (*error) return run_study_command(common, StudyKind::error);
    if (*limit) {
      return run_study_command(common, nonlinear_limit ? StudyKind::limit_nonlinear
                                                       : StudyKind::limit_linear);
    }
    if (*kernel) return run_study_command(common, StudyKind::kernel);
    if (*verify) return run_study_command(common, StudyKind::propagator_verify);
    if (*energy) return run_study_command(common, StudyKind::energy);
    if (*report) return run_report(report_in, report_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalAbort& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return kExitAbort;
  }
  return kExitUsage;
}
