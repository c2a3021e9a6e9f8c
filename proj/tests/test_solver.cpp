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

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "alfven/fft.hpp"
#include "alfven/spectral_ops.hpp"
#include "alfven/state.hpp"
#include "test_util.hpp"

namespace alfven {
namespace {

constexpr double kPi = std::numbers::pi;

// Random divergence-free field confined to |k| <= n/6 so that quadratic
// products are represented without aliasing.
VectorField low_band(const Grid& g, std::uint64_t seed) {
  VectorField w = testing::random_vector(g, seed);
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c)
      if (6 * std::abs(g.k1(r)) > g.n1 || 6 * g.k2(c) > g.n2) w[0].at(r, c) = w[1].at(r, c) = 0.0;
  return leray_project(w);
}

// a.grad b computed in physical space from spectral derivatives.
VectorField advect(const VectorField& a, const VectorField& b) {
  const Grid& g = a.grid();
  const auto a1 = transform_inverse(a[0]);
  const auto a2 = transform_inverse(a[1]);
  VectorField out(g);
  for (int i = 0; i < 2; ++i) {
    const auto d1 = transform_inverse(derivative(b[i], 1, 0));
    const auto d2 = transform_inverse(derivative(b[i], 0, 1));
    std::vector<double> p(g.physical_size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = a1[k] * d1[k] + a2[k] * d2[k];
    out[i] = transform_forward(g, p);
  }
  return out;
}

TEST(NonlinearRhs, ZeroState) {
  const Grid g = make_grid(16, 2.0 * kPi);
  SpectralState s;
  s.u = VectorField(g);
  s.h = VectorField(g);
  const Tendency t = nonlinear_rhs(s);
  EXPECT_EQ(testing::max_abs(t.u), 0.0);
  EXPECT_EQ(testing::max_abs(t.h), 0.0);
}

TEST(NonlinearRhs, AlignedStateIsStationary) {
  const Grid g = make_grid(32, 2.0 * kPi);
  SpectralState s;
  s.u = low_band(g, 1);
  s.h = s.u;
  const Tendency t = nonlinear_rhs(s);
  EXPECT_LT(testing::max_abs(t.u), 1e-14 * testing::max_abs(s.u));
  EXPECT_LT(testing::max_abs(t.h), 1e-14 * testing::max_abs(s.u));
}

TEST(NonlinearRhs, TwoModeFlowAgainstHandProducts) {
  // psi = cos x1 + cos 2 x2, u = (-2 sin 2x2, sin x1), u.grad u =
  // (-4 sin x1 cos 2x2, -2 cos x1 sin 2x2).
  const Grid g = make_grid(32, 2.0 * kPi);
  std::vector<double> u1(g.physical_size()), u2(u1), w1(u1), w2(u1);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double x = g.x1(i), y = g.x2(j);
      const std::size_t k = g.physical_index(i, j);
      u1[k] = -2.0 * std::sin(2 * y);
      u2[k] = std::sin(x);
      w1[k] = -4.0 * std::sin(x) * std::cos(2 * y);
      w2[k] = -2.0 * std::cos(x) * std::sin(2 * y);
    }
  SpectralState s;
  s.u = VectorField(g);
  s.u[0] = transform_forward(g, u1);
  s.u[1] = transform_forward(g, u2);
  s.h = VectorField(g);
  VectorField w(g);
  w[0] = transform_forward(g, w1);
  w[1] = transform_forward(g, w2);
  const VectorField want = -1.0 * leray_project(w);
  const Tendency t = nonlinear_rhs(s);
  EXPECT_GT(testing::max_abs(want), 1.0);
  EXPECT_LT(testing::max_abs_diff(t.u, want), 1e-12 * testing::max_abs(want));
  EXPECT_LT(testing::max_abs(t.h), 1e-13);
}

TEST(NonlinearRhs, MatchesAdvectiveForm) {
  const Grid g = make_grid(64, 32, 4.0 * kPi, 2.0 * kPi);
  SpectralState s;
  s.u = low_band(g, 3);
  s.h = low_band(g, 4);
  const Tendency t = nonlinear_rhs(s);
  const VectorField want_u = leray_project(advect(s.h, s.h) - advect(s.u, s.u));
  const VectorField want_h = leray_project(advect(s.h, s.u) - advect(s.u, s.h));
  EXPECT_LT(testing::max_abs_diff(t.u, want_u), 1e-11 * testing::max_abs(want_u));
  EXPECT_LT(testing::max_abs_diff(t.h, want_h), 1e-11 * testing::max_abs(want_h));
  EXPECT_LE(max_divergence(t.h), 1e-10 * max_coefficient(t.h));
  EXPECT_LE(max_divergence(t.u), 1e-10 * max_coefficient(t.u));
}

TEST(NonlinearRhs, OutputsAreDealiased) {
  const Grid g = make_grid(32, 2.0 * kPi);
  const SpectralState s = testing::random_state(g, 2, 1.0, 16.0);
  const Tendency t = nonlinear_rhs(s);
  EXPECT_EQ(testing::max_abs_diff(t.u, dealias(t.u)), 0.0);
  EXPECT_EQ(testing::max_abs_diff(t.h, dealias(t.h)), 0.0);
}

TEST(NonlinearRhs, RequiresRescaledFrame) {
  const Grid g = make_grid(16, 1.0);
  SpectralState s = testing::random_state(g, 1, 0.5);
  s.frame = Frame::original;
  EXPECT_THROW(nonlinear_rhs(s), std::invalid_argument);
}

TEST(NonlinearOperator, NonFiniteProductAborts) {
  const Grid g = make_grid(16, 1.0);
  SpectralState s = testing::random_state(g, 1, 0.5);
  s.u[0].at(1, 1) = Complex(std::numeric_limits<double>::infinity(), 0.0);
  NonlinearOperator op(g);
  Tendency t;
  EXPECT_THROW(op.evaluate(s.u, s.h, t), NumericalAbort);
}

TEST(Step, LinearOnlyEqualsPropagator) {
  const Grid g = make_grid(32, 8.0 * kPi);
  const SpectralState s0 = testing::random_state(g, 6, 0.25);
  const SpectralState a = step(s0, 0.3, false);
  const SpectralState b = apply_propagator(s0, 0.3, linear_params(s0));
  EXPECT_LT(testing::max_abs_diff(a.u, b.u), 1e-12 * testing::max_abs(b.u));
  EXPECT_LT(testing::max_abs_diff(a.h, b.h), 1e-12 * testing::max_abs(b.h));
  EXPECT_NEAR(a.time, 0.3, 1e-15);
}

TEST(Step, PreservesDivergence) {
  const Grid g = make_grid(32, 8.0 * kPi);
  SpectralState s = testing::random_state(g, 7, 0.5, 2.0, 5.0);
  Integrator it(g, linear_params(s), true);
  for (int k = 0; k < 20; ++k) it.step(s, 0.05);
  EXPECT_LE(max_divergence(s.u), 1e-12 * max_coefficient(s.u));
  EXPECT_LE(max_divergence(s.h), 1e-12 * max_coefficient(s.h));
}

TEST(Step, FourthOrder) {
  const Grid g = make_grid(16, 2.0 * kPi);
  const SpectralState s0 = testing::random_state(g, 8, 1.0, 2.0, 2.0);
  auto run = [&](int n) {
    SpectralState s = s0;
    Integrator it(g, linear_params(s), true);
    for (int k = 0; k < n; ++k) it.step(s, 0.5 / n);
    return s;
  };
  const SpectralState ref = run(256);
  const double e1 = testing::max_abs_diff(run(8).u, ref.u);
  const double e2 = testing::max_abs_diff(run(16).u, ref.u);
  EXPECT_NEAR(std::log2(e1 / e2), 4.0, 0.4);
}

TEST(Step, BlowupAbortsAndLeavesStateUntouched) {
  const Grid g = make_grid(16, 2.0 * kPi);
  SpectralState s = testing::random_state(g, 9, 1.0, 4.0, 1e6);
  s.params = {1.0, 1e-9, 1e-9};
  const SpectralState before = s;
  Integrator it(g, linear_params(s), true);
  EXPECT_THROW(it.step(s, 0.5), NumericalAbort);
  EXPECT_EQ(s.u[0].coeffs, before.u[0].coeffs);
  EXPECT_EQ(s.time, before.time);
}

}  // namespace
}  // namespace alfven
