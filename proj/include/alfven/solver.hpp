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

#include <memory>
#include <optional>

#include "alfven/errors.hpp"
#include "alfven/propagator.hpp"
#include "alfven/state.hpp"

namespace alfven {

struct Tendency {
  VectorField u;
  VectorField h;
};

/// Quadratic part of the rescaled system in conservative form:
///   tendency_u = -P div(u (x) u - h (x) h),
///   tendency_h = P (d2 W, -d1 W) with W = u1 h2 - u2 h1,
/// which equals h.grad u - u.grad h for divergence-free fields. Inputs are
/// truncated by the 2/3 rule, products formed on the grid, outputs truncated
/// again. Owns its transform plans and scratch; one instance per worker.
class NonlinearOperator {
 public:
  explicit NonlinearOperator(const Grid& grid);
  ~NonlinearOperator();
  NonlinearOperator(NonlinearOperator&&) noexcept;
  NonlinearOperator& operator=(NonlinearOperator&&) noexcept;

  const Grid& grid() const { return grid_; }

  /// Throws NumericalAbort if a product is not finite.
  void evaluate(const VectorField& u, const VectorField& h, Tendency& out);
  Tendency operator()(const VectorField& u, const VectorField& h);

  /// max |u| + max |h| over the grid (pointwise Euclidean magnitudes).
  double max_speed(const VectorField& u, const VectorField& h);

 private:
  struct Scratch;
  Grid grid_;
  std::unique_ptr<Scratch> scratch_;
};

Tendency nonlinear_rhs(const SpectralState& state);

/// Lawson-type integrating-factor RK4. The exponential factor is the exact
/// propagator at dt/2, applied only with nonnegative times:
///   k1 = N(U), k2 = N(E(U + dt/2 k1)), k3 = N(E U + dt/2 k2),
///   k4 = N(E(E U + dt k3)),
///   U+ = E(E(U + dt/6 k1) + dt/3 (k2 + k3)) + dt/6 k4,
/// with E = B(dt/2).
class Integrator {
 public:
  Integrator(const Grid& grid, const PropagatorParams& linear, bool nonlinear);

  /// Advances in place. Throws NumericalAbort when ||(u, h)||_0 grows by more
  /// than 10x or becomes non-finite; the state is left untouched in that case.
  void step(SpectralState& state, double dt);

  bool nonlinear() const { return nonlinear_; }
  NonlinearOperator& op() { return op_; }

 private:
  const MultiplierTable& half_step_table(double dt);

  Grid grid_;
  PropagatorParams linear_;
  bool nonlinear_;
  NonlinearOperator op_;
  std::optional<MultiplierTable> half_;
  Tendency k1_, k2_, k3_, k4_;
};

SpectralState step(const SpectralState& state, double dt, bool nonlinear = true);

}  // namespace alfven
