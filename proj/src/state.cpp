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

#include "alfven/state.hpp"

#include <stdexcept>

#include "alfven/fft.hpp"

namespace alfven {

void validate(const PhysicalParams& p) {
  if (!(p.eps > 0.0 && p.eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
  if (!(p.mu > 0.0)) throw std::invalid_argument("mu must be positive");
  if (!(p.nu > 0.0)) throw std::invalid_argument("nu must be positive");
}

PropagatorParams linear_params(const PhysicalParams& p, Frame frame) {
  if (frame == Frame::rescaled) return {p.eps * p.mu, p.eps * p.nu, 1.0};
  return {p.mu, p.nu, 1.0 / p.eps};
}

PropagatorParams linear_params(const SpectralState& s) { return linear_params(s.params, s.frame); }

SpectralState apply_propagator(const SpectralState& state, double t, const PropagatorParams& p) {
  if (t < 0.0) throw std::invalid_argument("apply_propagator: negative time");
  SpectralState out = state;
  const MultiplierTable table(state.grid(), t, p);
  table.apply(out.u, out.h);
  out.time += t;
  return out;
}

double energy(const SpectralState& s) {
  double e = 0.0;
  for (int i = 0; i < 2; ++i) e += spectral_l2_sq(s.u[i]) + spectral_l2_sq(s.h[i]);
  return e;
}

}  // namespace alfven
