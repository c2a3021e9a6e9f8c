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

#include <array>
#include <vector>

#include "alfven/grid.hpp"
#include "alfven/propagator.hpp"

namespace alfven {

/// Frequency-splitting exponents with theta = d2 - d1 (n - 1) and 2 d1 + d2 < 1.
struct KernelExponents {
  double d1 = 0.0;
  double d2 = 0.0;
};

KernelExponents kernel_exponents(double theta, int n_dim);

enum class KernelRegion { low_oblique, low_transverse, high };

/// Frequency regions of the fundamental solution:
///   low_oblique    |xi| <= c eps^-d1 and c |xi1| >= eps^d2,
///   low_transverse |xi| <= c eps^-d1 and c |xi1| <  eps^d2,
///   high           |xi| >  c eps^-d1.
struct RegionSplit {
  double eps = 0.5;
  KernelExponents exponents{};
  double c_tilde = 0.1;

  KernelRegion classify(double xi1, double xi_norm) const;
  double radius() const;
};

/// Distinct entries of a 2x2 real kernel block (k21 = k12).
struct KernelBlock {
  double k11 = 0.0;
  double k12 = 0.0;
  double k22 = 0.0;

  KernelBlock& operator+=(const KernelBlock& o) {
    k11 += o.k11;
    k12 += o.k12;
    k22 += o.k22;
    return *this;
  }
  double max_abs() const;
};

struct KernelPartials {
  std::array<KernelBlock, 3> parts{};
  KernelBlock total() const;
};

struct KernelQuery {
  double t = 1.0;
  double eps = 0.5;
  double theta = 0.5;
  double mu = 1.0;
  double nu = 0.5;
  double c_tilde = 0.1;
};

/// Original-frame parameters (mu, nu, 1/eps).
PropagatorParams kernel_params(const KernelQuery& q);

/// Lattice sums K_k(x) = (1/(L1 L2)) sum_{xi in D_k} B(xi, t) e^{i xi.x}.
/// Throws std::domain_error when the grid cannot resolve the high region;
/// the message names the smallest eps the grid supports.
KernelPartials kernel_partials(double x1, double x2, const Grid& grid, const KernelQuery& q);

/// Whole-grid kernels, one physical array per region and entry, computed by
/// inverse transform. Sample (i, j) is K at x = (i dx1, j dx2) modulo the box.
struct KernelFieldSet {
  Grid grid;
  /// [region][entry] with entry 0 = k11, 1 = k12, 2 = k22.
  std::array<std::array<std::vector<double>, 3>, 3> fields;
};

KernelFieldSet kernel_fields(const Grid& grid, const KernelQuery& q);

/// Smallest eps for which c eps^-d1 stays within the resolved wavenumbers.
double kernel_resolution_floor(const Grid& grid, const KernelQuery& q);

}  // namespace alfven
