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

#include "alfven/field.hpp"
#include "alfven/propagator.hpp"

namespace alfven {

/// rescaled: unit coupling, diffusion (eps mu, eps nu), data of size eps.
/// original: coupling 1/eps, diffusion (mu, nu), data of unit size.
enum class Frame { rescaled, original };

struct PhysicalParams {
  double eps = 0.5;
  double mu = 1.0;
  double nu = 0.5;
};

struct SpectralState {
  VectorField u;
  VectorField h;
  double time = 0.0;
  PhysicalParams params{};
  Frame frame = Frame::rescaled;

  const Grid& grid() const { return u.grid(); }
};

/// Throws std::invalid_argument unless 0 < eps <= 1, mu > 0, nu > 0.
void validate(const PhysicalParams& p);

/// (eps mu, eps nu, 1) in the rescaled frame and (mu, nu, 1/eps) in the original one.
PropagatorParams linear_params(const PhysicalParams& p, Frame frame);
PropagatorParams linear_params(const SpectralState& s);

/// Exact linear evolution over t >= 0; time advances by t.
SpectralState apply_propagator(const SpectralState& state, double t, const PropagatorParams& p);

/// ||u||_0^2 + ||h||_0^2.
double energy(const SpectralState& s);

}  // namespace alfven
