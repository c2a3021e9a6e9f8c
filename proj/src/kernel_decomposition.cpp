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

#include "alfven/kernel_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "alfven/fft.hpp"

namespace alfven {

KernelExponents kernel_exponents(double theta, int n_dim) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument("kernel_exponents: theta must lie in (0, 1)");
  }
  if (n_dim < 1) throw std::invalid_argument("kernel_exponents: n_dim must be positive");
  const double d1 = (1.0 - theta) / 6.0;
  return {d1, theta + (n_dim - 1) * d1};
}

double RegionSplit::radius() const { return c_tilde * std::pow(eps, -exponents.d1); }

KernelRegion RegionSplit::classify(double xi1, double xi_norm) const {
  if (xi_norm > radius()) return KernelRegion::high;
  if (c_tilde * std::abs(xi1) >= std::pow(eps, exponents.d2)) return KernelRegion::low_oblique;
  return KernelRegion::low_transverse;
}

double KernelBlock::max_abs() const {
  return std::max({std::abs(k11), std::abs(k12), std::abs(k22)});
}

KernelBlock KernelPartials::total() const {
  KernelBlock t;
  for (const auto& p : parts) t += p;
  return t;
}

PropagatorParams kernel_params(const KernelQuery& q) { return {q.mu, q.nu, 1.0 / q.eps}; }

double kernel_resolution_floor(const Grid& grid, const KernelQuery& q) {
  const KernelExponents ex = kernel_exponents(q.theta, 2);
  return std::pow(q.c_tilde / grid.max_resolved_wavenumber(), 1.0 / ex.d1);
}

namespace {

RegionSplit make_split(const Grid& grid, const KernelQuery& q) {
  if (!(q.eps > 0.0 && q.eps < 1.0)) throw std::invalid_argument("kernel: eps must lie in (0, 1)");
  if (!(q.t > 0.0)) throw std::invalid_argument("kernel: t must be positive");
  RegionSplit split{q.eps, kernel_exponents(q.theta, 2), q.c_tilde};
  if (split.radius() > grid.max_resolved_wavenumber()) {
    std::ostringstream msg;
    msg << "kernel: grid too coarse; c*eps^-d1 = " << split.radius()
        << " exceeds the resolved wavenumber " << grid.max_resolved_wavenumber()
        << "; eps must be >= " << kernel_resolution_floor(grid, q);
    throw std::domain_error(msg.str());
  }
  return split;
}

int region_index(KernelRegion r) { return static_cast<int>(r); }

}  // namespace

KernelPartials kernel_partials(double x1, double x2, const Grid& grid, const KernelQuery& q) {
  const RegionSplit split = make_split(grid, q);
  const PropagatorParams p = kernel_params(q);
  KernelPartials out;
  const double inv_area = 1.0 / grid.area();
  // Full lattice k in [-n/2, n/2 - 1] per axis.
  for (int a = -grid.n1 / 2; a < grid.n1 / 2; ++a) {
    const double xi1_full = 2.0 * std::numbers::pi * a / grid.length1;
    const double xi1 = (a == -grid.n1 / 2) ? 0.0 : xi1_full;
    for (int b = -grid.n2 / 2; b < grid.n2 / 2; ++b) {
      const double xi2 = 2.0 * std::numbers::pi * b / grid.length2;
      const double xi_sq = xi1_full * xi1_full + xi2 * xi2;
      const MultiplierBlock blk = symbol_block(xi1, xi_sq, q.t, p);
      const double phase = xi1_full * x1 + xi2 * x2;
      const double cs = std::cos(phase);
      const double sn = std::sin(phase);
      KernelBlock& dst = out.parts[region_index(split.classify(xi1_full, std::sqrt(xi_sq)))];
      dst.k11 += blk.b11 * cs * inv_area;
      dst.k22 += blk.b22 * cs * inv_area;
      // Re(i beta e^{i phase}) = -beta sin(phase).
      dst.k12 -= blk.b12_over_i * sn * inv_area;
    }
  }
  return out;
}

KernelFieldSet kernel_fields(const Grid& grid, const KernelQuery& q) {
  const RegionSplit split = make_split(grid, q);
  const PropagatorParams p = kernel_params(q);
  // Coefficients c = B / sqrt(area) reproduce (1/area) sum B e^{i xi x}.
  const double scale = 1.0 / std::sqrt(grid.area());
  std::array<std::array<ScalarField, 3>, 3> spec;
  for (auto& region : spec) {
    for (auto& f : region) f = ScalarField(grid);
  }
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      const double xi_sq = grid.xi_sq(r, c);
      const MultiplierBlock blk = symbol_block(grid.xi1_odd(r), xi_sq, q.t, p);
      const int k = region_index(split.classify(grid.xi1(r), std::sqrt(xi_sq)));
      spec[k][0].at(r, c) = blk.b11 * scale;
      spec[k][1].at(r, c) = Complex(0.0, blk.b12_over_i * scale);
      spec[k][2].at(r, c) = blk.b22 * scale;
    }
  }
  KernelFieldSet out{grid, {}};
  Fft fft(grid);
  for (int k = 0; k < 3; ++k) {
    for (int e = 0; e < 3; ++e) out.fields[k][e] = fft.inverse(spec[k][e]);
  }
  return out;
}

}  // namespace alfven
