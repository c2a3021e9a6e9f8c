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

#include <cstdint>
#include <optional>
#include <utility>

#include "alfven/field.hpp"

namespace alfven {

struct InitialDataRecipe {
  std::uint64_t seed = 1;
  double spectrum_width = 1.0;
  double target_norm = 1.0;
  int m = 3;
  /// When set, data is confined to the slab |x1 - L1/2| < support_radius.
  std::optional<double> support_radius;
};

/// Truncated Gaussian exp(-18 (d/R)^2) for |d| < R, zero otherwise, where
/// d = x1 - L1/2. Its value at the cutoff is below 2e-8.
double slab_bump(double x1, double length1, double radius);

/// Divergence-free pair (v0, H0) built from two random stream functions with
/// Gaussian coefficients damped by exp(-|xi|^2 / width^2), rescaled so that
/// sqrt(||v0||_m^2 + ||H0||_m^2) = target_norm. Deterministic given the seed.
std::pair<VectorField, VectorField> random_divfree_pair(const Grid& grid,
                                                        const InitialDataRecipe& recipe);

/// Velocity of a stream function: (d2 psi, -d1 psi).
VectorField curl_of_stream(const ScalarField& psi);

}  // namespace alfven
