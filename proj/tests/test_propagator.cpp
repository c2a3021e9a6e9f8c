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

#include "alfven/propagator.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "alfven/expm.hpp"
#include "alfven/fft.hpp"
#include "alfven/spectral_ops.hpp"
#include "alfven/state.hpp"
#include "test_util.hpp"

namespace alfven {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Psi, ReferenceValues) {
  EXPECT_EQ(psi(0.0), 1.0);
  EXPECT_NEAR(psi(1.0), 1.1752011936438014, 1e-15);
  EXPECT_NEAR(psi(-kPi * kPi), 0.0, 1e-15);
  EXPECT_NEAR(psi(-1.0), std::sin(1.0), 1e-15);
}

TEST(Psi, TaylorWindowIsSeamless) {
  for (double z : {0.99e-4, 1.01e-4, -0.99e-4, -1.01e-4}) {
    const double s = std::sqrt(std::abs(z));
    const double exact = z > 0 ? std::sinh(s) / s : std::sin(s) / s;
    EXPECT_NEAR(psi(z), exact, 1e-15) << z;
    const double c = z > 0 ? std::cosh(s) : std::cos(s);
    EXPECT_NEAR(cosh_of_square(z), c, 1e-15) << z;
  }
}

TEST(SymbolBlock, ZeroWavevectorIsIdentity) {
  const MultiplierBlock b = symbol_block(0.0, 0.0, 3.0, {1.0, 2.0, 5.0});
  EXPECT_EQ(b.b11, 1.0);
  EXPECT_EQ(b.b22, 1.0);
  EXPECT_EQ(b.b12_over_i, 0.0);
}

TEST(SymbolBlock, DecoupledHeatFlows) {
  for (double kappa : {0.0, 1.0, 100.0}) {
    const MultiplierBlock b = symbol_block(0.0, 1.0, 1.0, {2.0, 1.0, kappa});
    EXPECT_NEAR(b.b11, std::exp(-2.0), 1e-15);
    EXPECT_NEAR(b.b22, std::exp(-1.0), 1e-15);
    EXPECT_EQ(b.b12_over_i, 0.0);
  }
}

TEST(SymbolBlock, EqualDiffusivitiesAtHalfTurn) {
  const MultiplierBlock b = symbol_block(1.0, 1.0, kPi, {1.0, 1.0, 1.0});
  EXPECT_EQ(b.branch, Branch::trigonometric);
  EXPECT_NEAR(b.b11, -std::exp(-kPi), 1e-15);
  EXPECT_NEAR(b.b22, -std::exp(-kPi), 1e-15);
  EXPECT_NEAR(b.b12_over_i, 0.0, 1e-15);
  Matrix2c gen = symbol_generator(1.0, 1.0, kPi, 1.0, 1.0, 1.0);
  const Matrix2c e = matrix_exponential_oracle(gen);
  EXPECT_NEAR(e[0][0].real(), b.b11, 1e-14);
  EXPECT_NEAR(e[0][1].imag(), b.b12_over_i, 1e-14);
}

TEST(SymbolBlock, EqualDiffusivityReduction) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    const double a = 0.1 + std::abs(u(rng));
    const double kappa = u(rng);
    const double x1 = u(rng), x2 = u(rng), t = std::abs(u(rng));
    const double q = x1 * x1 + x2 * x2;
    const MultiplierBlock b = symbol_block(x1, q, t, {a, a, kappa});
    const double env = std::exp(-a * t * q);
    EXPECT_NEAR(b.b11, env * std::cos(kappa * t * x1), 1e-12);
    EXPECT_NEAR(b.b22, env * std::cos(kappa * t * x1), 1e-12);
    EXPECT_NEAR(b.b12_over_i, env * std::sin(kappa * t * x1), 1e-12);
  }
}

TEST(SymbolBlock, MatchesOracleAcrossBranches) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    const PropagatorParams p{0.05 + 2 * u(rng), 0.05 + 2 * u(rng), 10 * u(rng) - 5};
    const double x1 = 8 * u(rng) - 4, x2 = 8 * u(rng) - 4;
    const double q = x1 * x1 + x2 * x2;
    const double t = 20.0 * u(rng) / std::max(q, 1e-3);
    const MultiplierBlock b = symbol_block(x1, q, t, p);
    const Matrix2c e = matrix_exponential_oracle(symbol_generator(x1, q, t, p.a, p.b, p.kappa));
    const double tol = 1e-10;
    EXPECT_NEAR(b.b11, e[0][0].real(), tol * std::max(std::abs(b.b11), 1e-2));
    EXPECT_NEAR(b.b22, e[1][1].real(), tol * std::max(std::abs(b.b22), 1e-2));
    EXPECT_NEAR(b.b12_over_i, e[0][1].imag(), tol * std::max(std::abs(b.b12_over_i), 1e-2));
    EXPECT_EQ(b.branch, discriminant(x1, q, p) >= 0 ? Branch::hyperbolic : Branch::trigonometric);
  }
}

TEST(SymbolBlock, FiniteWhereFactorsOverflow) {
  // |a - b| t |xi|^2 / 2 far beyond 700.
  const MultiplierBlock b = symbol_block(1e-3, 1e4, 1.0, {1.0, 0.5, 1.0});
  EXPECT_TRUE(std::isfinite(b.b11));
  EXPECT_TRUE(std::isfinite(b.b22));
  EXPECT_TRUE(std::isfinite(b.b12_over_i));
  EXPECT_LE(std::abs(b.b22), decay_envelope(1e4, 1.0, {1.0, 0.5, 1.0}) * 1.01);
}

TEST(SymbolBlock, BranchPointContinuity) {
  // delta = 0 at ((a-b)|xi|^2)^2 = 4 kappa^2 xi1^2.
  const double a = 1.0, b = 0.5, q = 2.0;
  const double x1_star = (a - b) * q / 2.0;
  for (double d : {1e-8, -1e-8}) {
    const MultiplierBlock lo = symbol_block(x1_star * (1 + d), q, 1.5, {a, b, 1.0});
    const MultiplierBlock hi = symbol_block(x1_star * (1 - d), q, 1.5, {a, b, 1.0});
    EXPECT_NE(lo.branch, hi.branch);
    EXPECT_NEAR(lo.b11, hi.b11, 1e-6);
    EXPECT_NEAR(lo.b22, hi.b22, 1e-6);
    EXPECT_NEAR(lo.b12_over_i, hi.b12_over_i, 1e-6);
  }
}

TEST(SymbolBlock, NegativeTimeRejected) {
  EXPECT_THROW(symbol_block(1.0, 1.0, -1.0, {}), std::invalid_argument);
}

TEST(DecayEnvelope, Values) {
  EXPECT_EQ(decay_envelope(0.0, 5.0, {1.0, 2.0, 1.0}), 1.0);
  EXPECT_NEAR(decay_envelope(1.0, 1.0, {1.0, 3.0, 1.0}), 2.0 / std::exp(1.0), 1e-15);
}

class ApplyPropagator : public ::testing::Test {
 protected:
  Grid g = make_grid(32, 4.0 * kPi);
  PropagatorParams p{0.3, 0.1, 2.0};
  SpectralState s = testing::random_state(g, 5, 0.5);
};

TEST_F(ApplyPropagator, ZeroTimeUnchanged) {
  const SpectralState t = apply_propagator(s, 0.0, p);
  EXPECT_LT(testing::max_abs_diff(t.u, s.u), 1e-14 * testing::max_abs(s.u));
  EXPECT_LT(testing::max_abs_diff(t.h, s.h), 1e-14 * testing::max_abs(s.h));
}

TEST_F(ApplyPropagator, SemigroupLaw) {
  const SpectralState a = apply_propagator(apply_propagator(s, 0.7, p), 1.3, p);
  const SpectralState b = apply_propagator(s, 2.0, p);
  EXPECT_NEAR(a.time, 2.0, 1e-15);
  EXPECT_LT(testing::max_abs_diff(a.u, b.u), 1e-10 * testing::max_abs(b.u));
  EXPECT_LT(testing::max_abs_diff(a.h, b.h), 1e-10 * testing::max_abs(b.h));
}

TEST_F(ApplyPropagator, SingleModeMatchesOracle) {
  SpectralState one;
  one.u = VectorField(g);
  one.h = VectorField(g);
  const int r = 3, c = 2;
  // xi = (k1, k2)/2; divergence-free amplitude along (xi2, -xi1).
  one.u[0].at(r, c) = g.xi2(c);
  one.u[1].at(r, c) = -g.xi1(r);
  one.h[0].at(r, c) = Complex(0.0, 0.5) * g.xi2(c);
  one.h[1].at(r, c) = Complex(0.0, -0.5) * g.xi1(r);
  const double t = 1.7;
  const SpectralState out = apply_propagator(one, t, p);
  const Matrix2c e = matrix_exponential_oracle(
      symbol_generator(g.xi1(r), g.xi_sq(r, c), t, p.a, p.b, p.kappa));
  for (int i = 0; i < 2; ++i) {
    const Complex u0 = one.u[i].at(r, c), h0 = one.h[i].at(r, c);
    const Complex u = e[0][0] * u0 + e[0][1] * h0;
    const Complex h = e[1][0] * u0 + e[1][1] * h0;
    EXPECT_LT(std::abs(out.u[i].at(r, c) - u), 1e-10 * std::abs(u) + 1e-14);
    EXPECT_LT(std::abs(out.h[i].at(r, c) - h), 1e-10 * std::abs(h) + 1e-14);
  }
}

TEST_F(ApplyPropagator, RealFieldsStayReal) {
  const SpectralState t = apply_propagator(s, 1.0, p);
  Fft fft(g);
  // A real field round-trips through c2r/r2c without loss only if Hermitian.
  for (const VectorField* f : {&t.u, &t.h}) {
    for (int i = 0; i < 2; ++i) {
      const ScalarField back = fft.forward(fft.inverse((*f)[i]));
      EXPECT_LT(testing::max_abs_diff(back, (*f)[i]), 1e-12 * testing::max_abs((*f)[i]));
    }
  }
}

TEST_F(ApplyPropagator, PreservesDivergenceFree) {
  const SpectralState t = apply_propagator(s, 3.0, p);
  EXPECT_LE(max_divergence(t.u), 1e-12 * max_coefficient(t.u));
  EXPECT_LE(max_divergence(t.h), 1e-12 * max_coefficient(t.h));
}

TEST(MultiplierTable, NyquistRowDecoupled) {
  const Grid g = make_grid(16, 2.0 * kPi);
  const MultiplierTable table(g, 1.0, {0.5, 0.5, 3.0});
  const auto e = table.entries();
  for (int c = 0; c < g.cols(); ++c) EXPECT_EQ(e[g.index(g.n1 / 2, c)].beta, 0.0);
  EXPECT_NE(e[g.index(1, 0)].beta, 0.0);
}

}  // namespace
}  // namespace alfven
