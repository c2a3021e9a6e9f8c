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

#include <optional>
#include <string>
#include <vector>

#include "alfven/errors.hpp"
#include "alfven/initial_data.hpp"
#include "alfven/state.hpp"

namespace alfven {

struct SimConfig {
  int n1 = 128;
  int n2 = 128;
  double length1 = 32.0 * std::numbers::pi;
  double length2 = 32.0 * std::numbers::pi;
  double eps = 0.05;
  double mu = 1.0;
  double nu = 0.5;
  int m = 3;
  /// Time step in the rescaled (integration) frame; unset means auto.
  std::optional<double> dt;
  double dt_cap = 1e-2;
  /// Horizon and snapshot times are expressed in `frame`.
  double t_end = 5.0;
  std::vector<double> snapshot_times;
  /// Used when snapshot_times is empty: this many equal intervals up to t_end.
  int snapshot_count = 10;
  InitialDataRecipe recipe{};
  bool nonlinear = true;
  Frame frame = Frame::rescaled;
  /// Record per-step norms (needed for the energy identity).
  bool record_steps = true;

  Grid grid() const;
  PhysicalParams params() const { return {eps, mu, nu}; }
  /// Sorted snapshot times including 0 and t_end.
  std::vector<double> schedule() const;
};

struct Snapshot {
  SpectralState state;
  double sobolev_m = 0.0;        // ||(u, h)||_m
  double dissipation_cum = 0.0;  // integral of ||grad (u, h)||_{H^m}^2 dt
  double div_max = 0.0;          // max |xi . f| over both fields
  double div_relative = 0.0;     // div_max / max coefficient
  /// Energy fraction in the outer 10% of the box along x1.
  double box_contamination = 0.0;
};

/// Per-step record, always in the rescaled frame.
struct StepRecord {
  double t = 0.0;
  double u_sq = 0.0;
  double h_sq = 0.0;
  double grad_u_sq = 0.0;
  double grad_h_sq = 0.0;
  double hm_sq = 0.0;
  double grad_hm_sq = 0.0;
};

struct Trajectory {
  SimConfig config;
  Frame frame = Frame::rescaled;
  std::vector<Snapshot> snapshots;
  std::vector<StepRecord> steps;
  /// ||(v0, H0)||_m and ||v0||_0^2 + ||H0||_0^2 of the unscaled data.
  double initial_norm_m = 0.0;
  double initial_energy = 0.0;
  /// eps max(n^2, n^3) with n = ||(v0, H0)||_m, recorded against the smallness condition.
  double smallness = 0.0;
  double mean_dt = 0.0;
  long step_count = 0;
};

class SimulationAborted : public NumericalAbort {
 public:
  SimulationAborted(const std::string& what, Trajectory partial)
      : NumericalAbort(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

/// Draws (v0, H0) from config.recipe with m = config.m.
std::pair<VectorField, VectorField> initial_data(const SimConfig& config);

/// Time-stepped run. Nonlinear runs are integrated in the rescaled frame from
/// (eps v0, eps H0) and converted when config.frame is original.
Trajectory simulate(const SimConfig& config);
Trajectory simulate(const SimConfig& config, const VectorField& v0, const VectorField& H0);

/// Snapshots by direct application of the propagator in config.frame.
Trajectory simulate_linear(const SimConfig& config);
Trajectory simulate_linear(const SimConfig& config, const VectorField& v0, const VectorField& H0);

enum class Direction { to_original, to_rescaled };

/// u = eps v(x, eps t): fields scale by 1/eps and times by eps going to the
/// original frame, and inversely going back.
SpectralState rescale_to_original(const SpectralState& s, Direction d);
Trajectory rescale_to_original(const Trajectory& t, Direction d);

/// Snapshot diagnostics for one state.
Snapshot make_snapshot(const SpectralState& s, int m, double dissipation_cum);

/// Automatic step: 0.5 dx / max(1, max|u| + max|h|), capped.
double auto_dt(const Grid& g, double max_speed, double cap);

}  // namespace alfven
