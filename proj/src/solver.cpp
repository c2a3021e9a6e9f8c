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

#include "alfven/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "alfven/errors.hpp"
#include "alfven/fft.hpp"
#include "alfven/kernels.hpp"
#include "alfven/spectral_ops.hpp"

namespace alfven {

struct NonlinearOperator::Scratch {
  explicit Scratch(const Grid& g) : fft(g), keep(g.spectral_size()), spec(g.spectral_size()) {
    for (auto& p : phys) p.resize(g.physical_size());
    for (auto& p : prod) p.resize(g.physical_size());
    for (auto& s : prod_hat) s.resize(g.spectral_size());
    for (int r = 0; r < g.rows(); ++r) {
      for (int c = 0; c < g.cols(); ++c) keep[g.index(r, c)] = is_dealiased(g.k1(r), c, g);
    }
  }

  void to_physical(const ScalarField& f, std::vector<double>& out) {
    for (std::size_t k = 0; k < spec.size(); ++k) spec[k] = keep[k] ? f.coeffs[k] : Complex(0.0);
    fft.inverse(spec, out);
  }

  Fft fft;
  std::vector<char> keep;
  std::vector<Complex> spec;
  std::array<std::vector<double>, 4> phys;
  std::array<std::vector<double>, 4> prod;
  std::array<std::vector<Complex>, 4> prod_hat;
};

NonlinearOperator::NonlinearOperator(const Grid& grid)
    : grid_(grid), scratch_(std::make_unique<Scratch>(grid)) {}
NonlinearOperator::~NonlinearOperator() = default;
NonlinearOperator::NonlinearOperator(NonlinearOperator&&) noexcept = default;
NonlinearOperator& NonlinearOperator::operator=(NonlinearOperator&&) noexcept = default;

void NonlinearOperator::evaluate(const VectorField& u, const VectorField& h, Tendency& out) {
  if (!(u.grid() == grid_) || !(h.grid() == grid_)) {
    throw std::invalid_argument("nonlinear_rhs: grid mismatch");
  }
  Scratch& s = *scratch_;
  s.to_physical(u[0], s.phys[0]);
  s.to_physical(u[1], s.phys[1]);
  s.to_physical(h[0], s.phys[2]);
  s.to_physical(h[1], s.phys[3]);
  kernels::quadratic_products({s.phys[0], s.phys[1], s.phys[2], s.phys[3], s.prod[0], s.prod[1],
                               s.prod[2], s.prod[3]});
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(kernels::max_abs(s.prod[i]))) {
      throw NumericalAbort("nonlinear_rhs: non-finite product");
    }
    s.fft.forward(s.prod[i], s.prod_hat[i]);
  }

  if (!(out.u.grid() == grid_)) out.u = VectorField(grid_);
  if (!(out.h.grid() == grid_)) out.h = VectorField(grid_);
  const Grid& g = grid_;
  const auto& a11 = s.prod_hat[0];
  const auto& a12 = s.prod_hat[1];
  const auto& a22 = s.prod_hat[2];
  const auto& w = s.prod_hat[3];
  for (int r = 0; r < g.rows(); ++r) {
    const Complex i1(0.0, g.xi1_odd(r));
    for (int c = 0; c < g.cols(); ++c) {
      const std::size_t k = g.index(r, c);
      if (!s.keep[k]) {
        out.u[0].coeffs[k] = out.u[1].coeffs[k] = 0.0;
        out.h[0].coeffs[k] = out.h[1].coeffs[k] = 0.0;
        continue;
      }
      const Complex i2(0.0, g.xi2_odd(c));
      out.u[0].coeffs[k] = -(i1 * a11[k] + i2 * a12[k]);
      out.u[1].coeffs[k] = -(i1 * a12[k] + i2 * a22[k]);
      out.h[0].coeffs[k] = i2 * w[k];
      out.h[1].coeffs[k] = -i1 * w[k];
    }
  }
  kernels::leray_project(g, out.u[0].coeffs, out.u[1].coeffs);
  kernels::leray_project(g, out.h[0].coeffs, out.h[1].coeffs);
  out.u.divergence_free = true;
  out.h.divergence_free = true;
}

Tendency NonlinearOperator::operator()(const VectorField& u, const VectorField& h) {
  Tendency t{VectorField(grid_), VectorField(grid_)};
  evaluate(u, h, t);
  return t;
}

double NonlinearOperator::max_speed(const VectorField& u, const VectorField& h) {
  Scratch& s = *scratch_;
  double total = 0.0;
  for (const VectorField* f : {&u, &h}) {
    s.to_physical((*f)[0], s.phys[0]);
    s.to_physical((*f)[1], s.phys[1]);
    double peak = 0.0;
    for (std::size_t j = 0; j < s.phys[0].size(); ++j) {
      peak = std::max(peak, std::hypot(s.phys[0][j], s.phys[1][j]));
    }
    total += peak;
  }
  return total;
}

Tendency nonlinear_rhs(const SpectralState& state) {
  if (state.frame != Frame::rescaled) {
    throw std::invalid_argument("nonlinear_rhs: state must be in the rescaled frame");
  }
  NonlinearOperator op(state.grid());
  return op(state.u, state.h);
}

namespace {

// y += a x, componentwise on both fields.
void axpy(double a, const VectorField& x, VectorField& y) {
  for (int i = 0; i < 2; ++i) {
    auto& dst = y[i].coeffs;
    const auto& src = x[i].coeffs;
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += a * src[k];
  }
}

double norm0_sq(const VectorField& u, const VectorField& h) {
  double e = 0.0;
  for (int i = 0; i < 2; ++i) e += spectral_l2_sq(u[i]) + spectral_l2_sq(h[i]);
  return e;
}

}  // namespace

Integrator::Integrator(const Grid& grid, const PropagatorParams& linear, bool nonlinear)
    : grid_(grid), linear_(linear), nonlinear_(nonlinear), op_(grid) {}

const MultiplierTable& Integrator::half_step_table(double dt) {
  if (!half_ || half_->time() != 0.5 * dt) half_.emplace(grid_, 0.5 * dt, linear_);
  return *half_;
}

void Integrator::step(SpectralState& state, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  const MultiplierTable& e2 = half_step_table(dt);
  const double before = norm0_sq(state.u, state.h);

  if (!nonlinear_) {
    VectorField u = state.u, h = state.h;
    e2.apply(u, h);
    e2.apply(u, h);
    state.u = std::move(u);
    state.h = std::move(h);
    state.time += dt;
    return;
  }

  const VectorField& u0 = state.u;
  const VectorField& h0 = state.h;
  op_.evaluate(u0, h0, k1_);

  // E U
  VectorField eu = u0, eh = h0;
  e2.apply(eu, eh);

  // k2 = N(E(U + dt/2 k1))
  VectorField su = u0, sh = h0;
  axpy(0.5 * dt, k1_.u, su);
  axpy(0.5 * dt, k1_.h, sh);
  e2.apply(su, sh);
  op_.evaluate(su, sh, k2_);

  // k3 = N(E U + dt/2 k2)
  su = eu;
  sh = eh;
  axpy(0.5 * dt, k2_.u, su);
  axpy(0.5 * dt, k2_.h, sh);
  op_.evaluate(su, sh, k3_);

  // k4 = N(E(E U + dt k3))
  su = eu;
  sh = eh;
  axpy(dt, k3_.u, su);
  axpy(dt, k3_.h, sh);
  e2.apply(su, sh);
  op_.evaluate(su, sh, k4_);

  // U+ = E(E(U + dt/6 k1) + dt/3 (k2 + k3)) + dt/6 k4
  VectorField nu = u0, nh = h0;
  axpy(dt / 6.0, k1_.u, nu);
  axpy(dt / 6.0, k1_.h, nh);
  e2.apply(nu, nh);
  axpy(dt / 3.0, k2_.u, nu);
  axpy(dt / 3.0, k2_.h, nh);
  axpy(dt / 3.0, k3_.u, nu);
  axpy(dt / 3.0, k3_.h, nh);
  e2.apply(nu, nh);
  axpy(dt / 6.0, k4_.u, nu);
  axpy(dt / 6.0, k4_.h, nh);

  const double after = norm0_sq(nu, nh);
  if (!std::isfinite(after) || after > 100.0 * before + 1e-300) {
    throw NumericalAbort("step: instability detected at t = " + std::to_string(state.time));
  }
  nu.divergence_free = u0.divergence_free;
  nh.divergence_free = h0.divergence_free;
  state.u = std::move(nu);
  state.h = std::move(nh);
  state.time += dt;
}

SpectralState step(const SpectralState& state, double dt, bool nonlinear) {
  if (state.frame != Frame::rescaled && nonlinear) {
    throw std::invalid_argument("step: nonlinear steps run in the rescaled frame");
  }
  Integrator integ(state.grid(), linear_params(state), nonlinear);
  SpectralState out = state;
  integ.step(out, dt);
  return out;
}

}  // namespace alfven
