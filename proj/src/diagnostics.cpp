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

#include "alfven/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "alfven/fft.hpp"
#include "alfven/kernels.hpp"
#include "alfven/spectral_ops.hpp"

namespace alfven {

double sobolev_norm(const ScalarField& f, int m) {
  if (m < 0) throw std::invalid_argument("sobolev_norm: m must be nonnegative");
  return std::sqrt(kernels::weighted_norm_sq(f.grid, f.coeffs, m, 0));
}

double sobolev_norm(const VectorField& f, int m) {
  if (m < 0) throw std::invalid_argument("sobolev_norm: m must be nonnegative");
  return std::sqrt(kernels::weighted_norm_sq(f.grid(), f[0].coeffs, m, 0) +
                   kernels::weighted_norm_sq(f.grid(), f[1].coeffs, m, 0));
}

double sobolev_norm(const VectorField& u, const VectorField& h, int m) {
  const double a = sobolev_norm(u, m);
  const double b = sobolev_norm(h, m);
  return std::sqrt(a * a + b * b);
}

double gradient_norm(const VectorField& f, int m) {
  return std::sqrt(kernels::weighted_norm_sq(f.grid(), f[0].coeffs, m, 1) +
                   kernels::weighted_norm_sq(f.grid(), f[1].coeffs, m, 1));
}

std::pair<VectorField, VectorField> elsasser(const SpectralState& s) {
  VectorField plus = s.u + s.h;
  VectorField minus = s.u - s.h;
  return {std::move(plus), std::move(minus)};
}

std::vector<double> anisotropic_profile_sq(const VectorField& f, int j, bool gradient) {
  if (j < 0) throw std::invalid_argument("anisotropic_norm: j must be nonnegative");
  const Grid& g = f.grid();
  std::vector<double> out(g.n1, 0.0);
  Fft fft(g);
  std::vector<double> x(g.physical_size());
  const int extra_max = gradient ? 2 : 1;
  for (int order = 0; order <= j; ++order) {
    for (int a1 = 0; a1 <= order; ++a1) {
      const int a2 = order - a1;
      for (int comp = 0; comp < 2; ++comp) {
        for (int k = 0; k < extra_max; ++k) {
          const int e1 = gradient && k == 0 ? 1 : 0;
          const int e2 = gradient && k == 1 ? 1 : 0;
          fft.inverse(derivative(f[comp], a1 + e1, a2 + e2).coeffs, x);
          for (int i = 0; i < g.n1; ++i) {
            double acc = 0.0;
            for (int jj = 0; jj < g.n2; ++jj) {
              const double v = x[g.physical_index(i, jj)];
              acc += v * v;
            }
            out[i] += acc * g.dx2();
          }
        }
      }
    }
  }
  return out;
}

double anisotropic_norm(const VectorField& f, int j, int x1_index, bool gradient) {
  if (x1_index < 0 || x1_index >= f.grid().n1) {
    throw std::out_of_range("anisotropic_norm: x1 index out of range");
  }
  return std::sqrt(anisotropic_profile_sq(f, j, gradient)[x1_index]);
}

namespace {

// Integral over x1 of the squared bilinear density for one state.
double bilinear_slice_integral(const SpectralState& s, int m, BilinearVariant variant) {
  const auto [plus, minus] = elsasser(s);
  const Grid& g = s.grid();
  std::vector<double> ap, am;
  if (variant == BilinearVariant::gradient_pair) {
    ap = anisotropic_profile_sq(plus, m - 2, true);
    am = anisotropic_profile_sq(minus, m - 2, true);
  } else {
    ap = anisotropic_profile_sq(plus, m - 1, false);
    am = anisotropic_profile_sq(minus, m - 1, false);
  }
  const std::vector<double> bp = anisotropic_profile_sq(plus, m - 1, true);
  const std::vector<double> bm = anisotropic_profile_sq(minus, m - 1, true);
  double acc = 0.0;
  for (int i = 0; i < g.n1; ++i) {
    const double v = std::sqrt(ap[i] * bm[i]) + std::sqrt(am[i] * bp[i]);
    acc += v * v;
  }
  return acc * g.dx1();
}

}  // namespace

double bilinear_quantity(const std::vector<SpectralState>& states, int m,
                         BilinearVariant variant) {
  if (states.size() < 2) throw std::invalid_argument("bilinear_quantity: need >= 2 snapshots");
  if (m < 3) throw std::invalid_argument("bilinear_quantity: m must be >= 3");
  double total = 0.0;
  double prev = bilinear_slice_integral(states[0], m, variant);
  for (std::size_t k = 1; k < states.size(); ++k) {
    const double now = bilinear_slice_integral(states[k], m, variant);
    total += 0.5 * (states[k].time - states[k - 1].time) * (now + prev);
    prev = now;
  }
  return std::sqrt(total);
}

double bilinear_quantity(const Trajectory& traj, int m, BilinearVariant variant) {
  std::vector<SpectralState> states;
  states.reserve(traj.snapshots.size());
  for (const auto& s : traj.snapshots) states.push_back(s.state);
  return bilinear_quantity(states, m, variant);
}

double bilinear_bound(const Trajectory& traj) {
  if (traj.snapshots.empty()) throw std::invalid_argument("bilinear_bound: empty trajectory");
  double sup = 0.0;
  for (const auto& s : traj.snapshots) sup = std::max(sup, s.sobolev_m);
  const double g = std::sqrt(traj.snapshots.back().dissipation_cum);
  return sup * sup + sup * std::sqrt(sup + traj.config.eps) * g;
}

std::vector<double> energy_residual_series(const Trajectory& traj) {
  std::vector<double> out;
  if (traj.steps.empty()) return out;
  const double eps = traj.config.eps;
  const double mu = traj.config.mu;
  const double nu = traj.config.nu;
  const StepRecord& first = traj.steps.front();
  const double e0 = first.u_sq + first.h_sq;
  double integral = 0.0;
  out.reserve(traj.steps.size());
  for (std::size_t k = 0; k < traj.steps.size(); ++k) {
    const StepRecord& s = traj.steps[k];
    if (k > 0) {
      const StepRecord& p = traj.steps[k - 1];
      const double dnow = mu * s.grad_u_sq + nu * s.grad_h_sq;
      const double dprev = mu * p.grad_u_sq + nu * p.grad_h_sq;
      integral += 0.5 * (s.t - p.t) * (dnow + dprev);
    }
    const double r = s.u_sq + s.h_sq + 2.0 * eps * integral - e0;
    out.push_back(e0 > 0.0 ? std::abs(r) / e0 : std::abs(r));
  }
  return out;
}

double energy_residual(const Trajectory& traj) {
  const std::vector<double> r = energy_residual_series(traj);
  return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

VectorField pressure_gradient(const SpectralState& s) {
  const Grid& g = s.grid();
  const VectorField u = dealias(s.u);
  const VectorField h = dealias(s.h);
  std::array<std::vector<double>, 4> x{transform_inverse(u[0]), transform_inverse(u[1]),
                                       transform_inverse(h[0]), transform_inverse(h[1])};
  std::array<std::vector<double>, 4> p;
  for (auto& v : p) v.resize(g.physical_size());
  kernels::serial::quadratic_products({x[0], x[1], x[2], x[3], p[0], p[1], p[2], p[3]});
  const ScalarField a11 = transform_forward(g, p[0]);
  const ScalarField a12 = transform_forward(g, p[1]);
  const ScalarField a22 = transform_forward(g, p[2]);
  // F = h.grad h - u.grad u = -div(A).
  VectorField f(g);
  for (int r = 0; r < g.rows(); ++r) {
    const Complex i1(0.0, g.xi1_odd(r));
    for (int c = 0; c < g.cols(); ++c) {
      if (!is_dealiased(g.k1(r), c, g)) continue;
      const Complex i2(0.0, g.xi2_odd(c));
      f[0].at(r, c) = -(i1 * a11.at(r, c) + i2 * a12.at(r, c));
      f[1].at(r, c) = -(i1 * a12.at(r, c) + i2 * a22.at(r, c));
    }
  }
  VectorField grad_q = f - leray_project(f);
  grad_q.divergence_free = false;
  return grad_q;
}

std::optional<double> pressure_ratio(const SpectralState& s, int i) {
  if (i < 0) throw std::invalid_argument("pressure_ratio: index must be nonnegative");
  const double denom = sobolev_norm(s.h, i) * gradient_norm(s.h, i) +
                       sobolev_norm(s.u, i) * gradient_norm(s.u, i);
  if (!(denom > 0.0)) return std::nullopt;
  return sobolev_norm(pressure_gradient(s), i) / denom;
}

double sup_norm_slab(const VectorField& u, const VectorField& h, double l, double radius) {
  const Grid& g = u.grid();
  const double reach = l * radius;
  const bool whole = std::isinf(reach);
  if (!whole && !(reach < 0.5 * g.length1)) {
    throw std::invalid_argument("sup_norm_slab: slab exceeds the box");
  }
  if (!whole && !(reach > 0.0)) throw std::invalid_argument("sup_norm_slab: empty slab");
  const std::array<std::vector<double>, 4> x{transform_inverse(u[0]), transform_inverse(u[1]),
                                             transform_inverse(h[0]), transform_inverse(h[1])};
  double peak = 0.0;
  for (int i = 0; i < g.n1; ++i) {
    if (!whole && !(std::abs(g.x1(i) - 0.5 * g.length1) < reach)) continue;
    for (int j = 0; j < g.n2; ++j) {
      const std::size_t k = g.physical_index(i, j);
      double m2 = 0.0;
      for (const auto& c : x) m2 += c[k] * c[k];
      peak = std::max(peak, std::sqrt(m2));
    }
  }
  return peak;
}

double sup_norm_slab(const VectorField& f, double l, double radius) {
  return sup_norm_slab(f, VectorField(f.grid()), l, radius);
}

std::vector<ErrorPoint> error_norms(const Trajectory& nonlinear, const Trajectory& linear,
                                    int m) {
  if (m < 2) throw std::invalid_argument("error_norms: m must be >= 2");
  if (nonlinear.snapshots.size() != linear.snapshots.size()) {
    throw std::invalid_argument("error_norms: snapshot counts differ");
  }
  if (nonlinear.frame != linear.frame) throw std::invalid_argument("error_norms: frames differ");
  const double eps = nonlinear.config.eps;
  std::vector<ErrorPoint> out;
  double prev_t = 0.0;
  double prev_d = 0.0;
  double cum = 0.0;
  for (std::size_t k = 0; k < nonlinear.snapshots.size(); ++k) {
    const SpectralState& a = nonlinear.snapshots[k].state;
    const SpectralState& b = linear.snapshots[k].state;
    if (!(a.grid() == b.grid())) throw std::invalid_argument("error_norms: grid mismatch");
    if (std::abs(a.time - b.time) > 1e-9 * std::max(1.0, std::abs(a.time))) {
      throw std::invalid_argument("error_norms: snapshot times differ");
    }
    const VectorField du = a.u - b.u;
    const VectorField dh = a.h - b.h;
    const Grid& g = a.grid();
    double grad_sq = 0.0;
    double lap_sq = 0.0;
    for (const VectorField* f : {&du, &dh}) {
      for (int c = 0; c < 2; ++c) {
        grad_sq += kernels::weighted_norm_sq(g, (*f)[c].coeffs, m - 2, 1);
        lap_sq += kernels::weighted_norm_sq(g, (*f)[c].coeffs, m - 2, 2);
      }
    }
    if (k > 0) cum += 0.5 * (a.time - prev_t) * (lap_sq + prev_d);
    prev_t = a.time;
    prev_d = lap_sq;
    out.push_back({a.time, std::sqrt(grad_sq), eps * cum});
  }
  return out;
}

std::vector<DiagnosticsRecord> diagnostics_records(const Trajectory& traj,
                                                   const DiagnosticsOptions& opt) {
  std::vector<DiagnosticsRecord> out;
  const std::vector<double> residual = energy_residual_series(traj);
  const int m = traj.config.m;
  double q_sq = 0.0;
  double prev_slice = 0.0;
  std::size_t step = 0;
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    const Snapshot& s = traj.snapshots[k];
    DiagnosticsRecord r;
    r.time = s.state.time;
    r.sobolev_m = s.sobolev_m;
    r.dissipation_cum = s.dissipation_cum;
    r.div_max = s.div_max;
    // Step records are rescaled; the matching step has t = time / eps in the original frame.
    const double t_steps = traj.frame == Frame::original ? r.time / traj.config.eps : r.time;
    while (step + 1 < traj.steps.size() && traj.steps[step].t < t_steps - 1e-12) ++step;
    r.energy_residual = residual.empty() ? 0.0 : residual[std::min(step, residual.size() - 1)];
    const double radius = opt.slab_radius > 0.0 ? opt.slab_radius
                                                : std::numeric_limits<double>::infinity();
    r.linf_slab = sup_norm_slab(s.state.u, s.state.h, opt.slab_l, radius);
    if (m >= 3) {
      const double slice = bilinear_slice_integral(s.state, m, BilinearVariant::mixed_pair);
      if (k > 0) {
        q_sq += 0.5 * (s.state.time - traj.snapshots[k - 1].state.time) * (slice + prev_slice);
      }
      prev_slice = slice;
      r.bilinear_Q = std::sqrt(q_sq);
    }
    r.pressure_ratio = pressure_ratio(s.state, opt.pressure_index).value_or(0.0);
    out.push_back(r);
  }
  return out;
}

}  // namespace alfven
