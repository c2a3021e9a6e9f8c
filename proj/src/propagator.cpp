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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alfven {

double psi(double z) {
  if (std::abs(z) <= kPsiTaylorWindow) {
    return 1.0 + z / 6.0 * (1.0 + z / 20.0 * (1.0 + z / 42.0));
  }
  if (z > 0.0) {
    const double s = std::sqrt(z);
    return std::sinh(s) / s;
  }
  const double y = std::sqrt(-z);
  return std::sin(y) / y;
}

double cosh_of_square(double z) {
  if (std::abs(z) <= kPsiTaylorWindow) {
    return 1.0 + z / 2.0 * (1.0 + z / 12.0 * (1.0 + z / 30.0));
  }
  if (z > 0.0) return std::cosh(std::sqrt(z));
  return std::cos(std::sqrt(-z));
}

double discriminant(double xi1, double xi_sq, const PropagatorParams& p) {
  const double d = (p.a - p.b) * xi_sq;
  return d * d - 4.0 * p.kappa * p.kappa * xi1 * xi1;
}

MultiplierBlock symbol_block(double xi1, double xi_sq, double t, const PropagatorParams& p) {
  if (t < 0.0) throw std::invalid_argument("symbol_block: negative time");
  MultiplierBlock out;
  out.delta = discriminant(xi1, xi_sq, p);
  out.branch = out.delta >= 0.0 ? Branch::hyperbolic : Branch::trigonometric;

  const double s = t * xi_sq;
  const double decay = 0.5 * (p.a + p.b) * s;
  // Half-trace shift c and the coupling term w; (Lambda/2)^2 = c^2 - w.
  const double c = 0.5 * (p.a - p.b) * s;
  const double coupling = p.kappa * t * xi1;
  const double w = coupling * coupling;
  const double z = c * c - w;

  if (z > 0.0 && z > kPsiTaylorWindow && std::sqrt(z) >= 1.0) {
    // cosh y -/+ c sinh(y)/y = (e^y (1 -/+ c/y) + e^-y (1 +/- c/y)) / 2. The
    // factors 1 - |c|/y are rewritten as -w / (y (y + |c|)) to avoid
    // cancellation, and the decay is folded into both exponentials.
    const double y = std::sqrt(z);
    const double ep = std::exp(y - decay);
    const double em = std::exp(-y - decay);
    const double small = -w / (y * (y + std::abs(c)));
    const double large = 1.0 + std::abs(c) / y;
    const double g_minus = c > 0.0 ? small : large;  // 1 - c/y
    const double g_plus = c > 0.0 ? large : small;   // 1 + c/y
    out.b11 = 0.5 * (ep * g_minus + em * g_plus);
    out.b22 = 0.5 * (ep * g_plus + em * g_minus);
    out.b12_over_i = coupling * (ep - em) / (2.0 * y);
    return out;
  }

  const double e = std::exp(-decay);
  const double ch = cosh_of_square(z);
  const double ps = psi(z);
  out.b11 = e * (ch - c * ps);
  out.b22 = e * (ch + c * ps);
  out.b12_over_i = e * coupling * ps;
  return out;
}

double decay_envelope(double xi_sq, double t, const PropagatorParams& p) {
  const double s = t * xi_sq;
  return std::exp(-std::min(p.a, p.b) * s) * (s + 1.0);
}

MultiplierTable::MultiplierTable(const Grid& grid, double t, const PropagatorParams& p)
    : grid_(grid), t_(t), params_(p), entries_(grid.spectral_size()) {
  if (t < 0.0) throw std::invalid_argument("propagator: negative time");
  for (int r = 0; r < grid.rows(); ++r) {
    const double xi1 = grid.xi1_odd(r);
    for (int c = 0; c < grid.cols(); ++c) {
      const MultiplierBlock b = symbol_block(xi1, grid.xi_sq(r, c), t, p);
      entries_[grid.index(r, c)] = {b.b11, b.b22, b.b12_over_i};
    }
  }
}

void MultiplierTable::apply(VectorField& u, VectorField& h) const {
  if (!(u.grid() == grid_) || !(h.grid() == grid_)) {
    throw std::invalid_argument("propagator: grid mismatch");
  }
  kernels::apply_block(entries_, {u[0].coeffs, u[1].coeffs, h[0].coeffs, h[1].coeffs});
}

}  // namespace alfven
