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

#include <vector>

#include "alfven/field.hpp"
#include "alfven/kernels.hpp"

namespace alfven {

/// Linear operator [[a Delta, kappa d1], [kappa d1, b Delta]] acting on a
/// pair of fields. The rescaled problem uses (eps mu, eps nu, 1); the
/// original-frame problem uses (mu, nu, 1/eps).
struct PropagatorParams {
  double a = 1.0;
  double b = 1.0;
  double kappa = 1.0;
};

enum class Branch { hyperbolic, trigonometric };

/// Entries of the per-mode semigroup B(xi, t). The off-diagonal entries are
/// equal and purely imaginary; b12_over_i stores their common value / i.
struct MultiplierBlock {
  double b11 = 1.0;
  double b22 = 1.0;
  double b12_over_i = 0.0;
  Branch branch = Branch::hyperbolic;
  double delta = 0.0;
};

/// Width of the Taylor window around s^2 = 0 used by psi and cosh.
inline constexpr double kPsiTaylorWindow = 1e-4;

/// psi(s) = sinh(s)/s as a function of s^2; negative arguments give
/// sin(y)/y with y^2 = -s2_signed.
double psi(double s2_signed);

/// cosh(s) as a function of s^2 (cos(y) for negative arguments).
double cosh_of_square(double s2_signed);

/// Closed-form matrix exponential of t A(xi) with
/// A = [[-a|xi|^2, i kappa xi1], [i kappa xi1, -b|xi|^2]].
/// Exponential factors are folded so no intermediate overflows.
MultiplierBlock symbol_block(double xi1, double xi_sq, double t, const PropagatorParams& p);

/// Discriminant ((a-b)|xi|^2)^2 - 4 kappa^2 xi1^2.
double discriminant(double xi1, double xi_sq, const PropagatorParams& p);

/// exp(-min(a,b) t |xi|^2) (t |xi|^2 + 1).
double decay_envelope(double xi_sq, double t, const PropagatorParams& p);

/// Table of per-mode blocks for one grid and one time. The coupling uses the
/// odd-order wavenumber (zero at the k1 Nyquist index) so real fields stay real.
class MultiplierTable {
 public:
  MultiplierTable() = default;
  MultiplierTable(const Grid& grid, double t, const PropagatorParams& p);

  const Grid& grid() const { return grid_; }
  double time() const { return t_; }
  const PropagatorParams& params() const { return params_; }
  std::span<const kernels::BlockEntry> entries() const { return entries_; }

  /// In-place (u, h) -> B (u, h).
  void apply(VectorField& u, VectorField& h) const;

 private:
  Grid grid_{};
  double t_ = 0.0;
  PropagatorParams params_{};
  std::vector<kernels::BlockEntry> entries_;
};

}  // namespace alfven
