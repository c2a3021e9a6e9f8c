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

#include "alfven/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alfven/fft.hpp"
#include "alfven/kernels.hpp"
#include "alfven/solver.hpp"
#include "alfven/spectral_ops.hpp"

namespace alfven {

Grid SimConfig::grid() const { return make_grid(n1, n2, length1, length2); }

std::vector<double> SimConfig::schedule() const {
  if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be nonnegative");
  std::vector<double> times{0.0};
  if (snapshot_times.empty()) {
    if (snapshot_count < 1) throw std::invalid_argument("snapshot_count must be positive");
    for (int k = 1; k <= snapshot_count && t_end > 0.0; ++k) {
      times.push_back(t_end * k / snapshot_count);
    }
  } else {
    for (double t : snapshot_times) {
      if (t < 0.0 || t > t_end) throw std::invalid_argument("snapshot time outside [0, t_end]");
      times.push_back(t);
    }
    times.push_back(t_end);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

namespace {

double norm_sq(const VectorField& f, int m, int p) {
  const Grid& g = f.grid();
  return kernels::weighted_norm_sq(g, f[0].coeffs, m, p) +
         kernels::weighted_norm_sq(g, f[1].coeffs, m, p);
}

StepRecord record(const SpectralState& s, int m) {
  StepRecord r;
  r.t = s.time;
  r.u_sq = norm_sq(s.u, 0, 0);
  r.h_sq = norm_sq(s.h, 0, 0);
  r.grad_u_sq = norm_sq(s.u, 0, 1);
  r.grad_h_sq = norm_sq(s.h, 0, 1);
  r.hm_sq = norm_sq(s.u, m, 0) + norm_sq(s.h, m, 0);
  r.grad_hm_sq = norm_sq(s.u, m, 1) + norm_sq(s.h, m, 1);
  return r;
}

double contamination(const SpectralState& s) {
  const Grid& g = s.grid();
  double inner = 0.0;
  double outer = 0.0;
  std::vector<double> dens(g.physical_size(), 0.0);
  for (const VectorField* f : {&s.u, &s.h}) {
    for (int c = 0; c < 2; ++c) {
      const std::vector<double> x = transform_inverse((*f)[c]);
      for (std::size_t j = 0; j < x.size(); ++j) dens[j] += x[j] * x[j];
    }
  }
  for (int i = 0; i < g.n1; ++i) {
    const bool edge = std::abs(g.x1(i) - 0.5 * g.length1) > 0.45 * g.length1;
    for (int j = 0; j < g.n2; ++j) (edge ? outer : inner) += dens[g.physical_index(i, j)];
  }
  const double total = inner + outer;
  return total > 0.0 ? outer / total : 0.0;
}

VectorField scaled(double s, const VectorField& f) {
  VectorField out = s * f;
  out.divergence_free = f.divergence_free;
  return out;
}

void fill_initial(Trajectory& traj, const SimConfig& config, const VectorField& v0,
                  const VectorField& H0) {
  traj.config = config;
  traj.frame = config.frame;
  const double n_m = std::sqrt(norm_sq(v0, config.m, 0) + norm_sq(H0, config.m, 0));
  traj.initial_norm_m = n_m;
  traj.initial_energy = norm_sq(v0, 0, 0) + norm_sq(H0, 0, 0);
  traj.smallness = config.eps * std::max(n_m * n_m, n_m * n_m * n_m);
}

void check_data(const SimConfig& config, const VectorField& v0, const VectorField& H0) {
  if (config.m < 0) throw std::invalid_argument("m must be nonnegative");
  validate(config.params());
  const Grid g = config.grid();
  if (!(v0.grid() == g) || !(H0.grid() == g)) {
    throw std::invalid_argument("initial data grid does not match config");
  }
}

}  // namespace

double auto_dt(const Grid& g, double max_speed, double cap) {
  const double dx = std::min(g.dx1(), g.dx2());
  return std::min(cap, 0.5 * dx / std::max(1.0, max_speed));
}

Snapshot make_snapshot(const SpectralState& s, int m, double dissipation_cum) {
  Snapshot snap;
  snap.state = s;
  snap.sobolev_m = std::sqrt(norm_sq(s.u, m, 0) + norm_sq(s.h, m, 0));
  snap.dissipation_cum = dissipation_cum;
  snap.div_max = std::max(max_divergence(s.u), max_divergence(s.h));
  const double peak = std::max(max_coefficient(s.u), max_coefficient(s.h));
  snap.div_relative = peak > 0.0 ? snap.div_max / peak : 0.0;
  snap.box_contamination = contamination(s);
  return snap;
}

std::pair<VectorField, VectorField> initial_data(const SimConfig& config) {
  InitialDataRecipe recipe = config.recipe;
  recipe.m = config.m;
  return random_divfree_pair(config.grid(), recipe);
}

Trajectory simulate(const SimConfig& config) {
  const auto [v0, H0] = initial_data(config);
  return simulate(config, v0, H0);
}

Trajectory simulate(const SimConfig& config, const VectorField& v0, const VectorField& H0) {
  check_data(config, v0, H0);
  const Grid g = config.grid();
  const double eps = config.eps;
  // Times of the integration (rescaled) frame.
  std::vector<double> times = config.schedule();
  if (config.frame == Frame::original) {
    for (double& t : times) t /= eps;
  }

  Trajectory traj;
  fill_initial(traj, config, v0, H0);
  traj.frame = Frame::rescaled;

  SpectralState state;
  // Modes above the 2/3 cut stay passive: the nonlinear operator truncates its
  // inputs, so they evolve by the exact propagator alone.
  state.u = scaled(eps, v0);
  state.h = scaled(eps, H0);
  state.params = config.params();
  state.frame = Frame::rescaled;

  Integrator integ(g, linear_params(state), config.nonlinear);
  StepRecord last = record(state, config.m);
  if (config.record_steps) traj.steps.push_back(last);
  double dissipation = 0.0;
  traj.snapshots.push_back(make_snapshot(state, config.m, 0.0));

  const auto finish = [&](Trajectory& t) -> Trajectory& {
    t.mean_dt = t.step_count > 0 ? state.time / t.step_count : 0.0;
    if (config.frame == Frame::original) {
      t = rescale_to_original(t, Direction::to_original);
      t.config = config;
    }
    return t;
  };

  for (std::size_t k = 1; k < times.size(); ++k) {
    const double span = times[k] - state.time;
    double dt = config.dt.value_or(0.0);
    if (!config.dt) dt = auto_dt(g, integ.op().max_speed(state.u, state.h), config.dt_cap);
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    const long n = std::max(1L, static_cast<long>(std::ceil(span / dt - 1e-9)));
    const double h = span / n;
    for (long s = 0; s < n; ++s) {
      try {
        integ.step(state, h);
      } catch (const NumericalAbort& e) {
        throw SimulationAborted(e.what(), finish(traj));
      }
      if (s == n - 1) state.time = times[k];
      ++traj.step_count;
      const StepRecord now = record(state, config.m);
      dissipation += 0.5 * (now.t - last.t) * (now.grad_hm_sq + last.grad_hm_sq);
      last = now;
      if (config.record_steps) traj.steps.push_back(now);
    }
    traj.snapshots.push_back(make_snapshot(state, config.m, dissipation));
  }
  return finish(traj);
}

Trajectory simulate_linear(const SimConfig& config) {
  const auto [v0, H0] = initial_data(config);
  return simulate_linear(config, v0, H0);
}

Trajectory simulate_linear(const SimConfig& config, const VectorField& v0,
                           const VectorField& H0) {
  check_data(config, v0, H0);
  Trajectory traj;
  fill_initial(traj, config, v0, H0);
  const double amp = config.frame == Frame::rescaled ? config.eps : 1.0;
  SpectralState s0;
  s0.u = scaled(amp, v0);
  s0.h = scaled(amp, H0);
  s0.params = config.params();
  s0.frame = config.frame;
  const PropagatorParams p = linear_params(s0);

  double dissipation = 0.0;
  double prev_t = 0.0;
  double prev_g = 0.0;
  for (double t : config.schedule()) {
    const SpectralState s = apply_propagator(s0, t, p);
    const double g = norm_sq(s.u, config.m, 1) + norm_sq(s.h, config.m, 1);
    if (t > 0.0) dissipation += 0.5 * (t - prev_t) * (g + prev_g);
    prev_t = t;
    prev_g = g;
    traj.snapshots.push_back(make_snapshot(s, config.m, dissipation));
    if (config.record_steps) traj.steps.push_back(record(s, config.m));
  }
  return traj;
}

SpectralState rescale_to_original(const SpectralState& s, Direction d) {
  const double eps = s.params.eps;
  const bool to_orig = d == Direction::to_original;
  if (to_orig != (s.frame == Frame::rescaled)) {
    throw std::invalid_argument("rescale_to_original: frame does not match direction");
  }
  SpectralState out = s;
  const double f = to_orig ? 1.0 / eps : eps;
  const double tf = to_orig ? eps : 1.0 / eps;
  out.u = scaled(f, s.u);
  out.h = scaled(f, s.h);
  out.time = s.time * tf;
  out.frame = to_orig ? Frame::original : Frame::rescaled;
  return out;
}

Trajectory rescale_to_original(const Trajectory& t, Direction d) {
  const bool to_orig = d == Direction::to_original;
  if (to_orig != (t.frame == Frame::rescaled)) {
    throw std::invalid_argument("rescale_to_original: frame does not match direction");
  }
  const double eps = t.config.eps;
  const double f = to_orig ? 1.0 / eps : eps;
  Trajectory out = t;
  out.frame = to_orig ? Frame::original : Frame::rescaled;
  for (Snapshot& s : out.snapshots) {
    s.state = rescale_to_original(s.state, d);
    s.sobolev_m *= f;
    s.div_max *= f;
    // dt scales by eps^{+-1} and the squared norm by eps^{-+2}.
    s.dissipation_cum *= f;
  }
  return out;
}

}  // namespace alfven
