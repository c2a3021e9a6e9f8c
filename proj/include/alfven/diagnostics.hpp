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

#include <optional>
#include <utility>
#include <vector>

#include "alfven/simulate.hpp"

namespace alfven {

/// (sum (1 + |xi|^2)^m |f(xi)|^2)^{1/2} over all components.
double sobolev_norm(const ScalarField& f, int m);
double sobolev_norm(const VectorField& f, int m);
double sobolev_norm(const VectorField& u, const VectorField& h, int m);
/// ||grad f||_{H^m}.
double gradient_norm(const VectorField& f, int m);

/// (u + h, u - h).
std::pair<VectorField, VectorField> elsasser(const SpectralState& s);

/// Squared slice norms sum_{|alpha| <= j} ||d^alpha g(x1, .)||^2_{L^2(x2)} for every
/// grid line x1 = i dx1, where g = f, or g = grad f (all d_k f_i) when
/// `gradient` is set. Derivatives range over both variables.
std::vector<double> anisotropic_profile_sq(const VectorField& f, int j, bool gradient = false);
/// The same quantity (square-rooted) on one grid line. Throws std::out_of_range
/// for a bad index and std::invalid_argument for j < 0.
double anisotropic_norm(const VectorField& f, int j, int x1_index, bool gradient = false);

enum class BilinearVariant { gradient_pair, mixed_pair };

/// L^2 over (t, x1) of the slice-norm products
///   gradient_pair: |grad L+|_{m-2} |grad L-|_{m-1} + |grad L-|_{m-2} |grad L+|_{m-1},
///   mixed_pair: |L+|_{m-1} |grad L-|_{m-1} + |L-|_{m-1} |grad L+|_{m-1},
/// with L+- the Elsasser fields. Trapezoid in t, Riemann sum in x1.
double bilinear_quantity(const Trajectory& traj, int m, BilinearVariant variant);
double bilinear_quantity(const std::vector<SpectralState>& states, int m,
                         BilinearVariant variant);

/// Right side S^2 + S (S + eps)^{1/2} G with S = sup ||(u, h)||_m and G the
/// L^2_t H^m norm of grad (u, h) at the final snapshot.
double bilinear_bound(const Trajectory& traj);

/// max over steps of |E(t) + 2 eps int (mu ||grad u||^2 + nu ||grad h||^2) - E(0)| / E(0)
/// in the rescaled frame. Zero data gives 0.
double energy_residual(const Trajectory& traj);
/// Residual series evaluated at every step record.
std::vector<double> energy_residual_series(const Trajectory& traj);

/// grad q = (I - P)(h.grad h - u.grad u), from dealiased products.
VectorField pressure_gradient(const SpectralState& s);
/// ||grad q||_i / (||h||_i ||grad h||_i + ||u||_i ||grad u||_i); empty when the
/// denominator vanishes. Throws std::invalid_argument for i < 0.
std::optional<double> pressure_ratio(const SpectralState& s, int i);

/// max of |(u, h)| over grid points with |x1 - L1/2| < l R. An infinite l R
/// selects the whole box. Throws std::invalid_argument when l R >= L1/2.
double sup_norm_slab(const VectorField& u, const VectorField& h, double l, double radius);
double sup_norm_slab(const VectorField& f, double l, double radius);

struct ErrorPoint {
  double t = 0.0;
  double grad_norm = 0.0;       // ||grad (u^d, h^d)||_{m-2}
  double dissipation_cum = 0.0;  // eps int ||grad^2 (u^d, h^d)||^2_{H^{m-2}} dt
};

/// Nonlinear minus linear trajectory at matching snapshots.
std::vector<ErrorPoint> error_norms(const Trajectory& nonlinear, const Trajectory& linear, int m);

struct DiagnosticsRecord {
  double time = 0.0;
  double sobolev_m = 0.0;
  double dissipation_cum = 0.0;
  double energy_residual = 0.0;
  double div_max = 0.0;
  double linf_slab = 0.0;
  double bilinear_Q = 0.0;
  double pressure_ratio = 0.0;
};

struct DiagnosticsOptions {
  double slab_l = 2.0;
  double slab_radius = 0.0;  // 0 means whole box
  int pressure_index = 2;
};

std::vector<DiagnosticsRecord> diagnostics_records(const Trajectory& traj,
                                                   const DiagnosticsOptions& opt = {});

}  // namespace alfven
