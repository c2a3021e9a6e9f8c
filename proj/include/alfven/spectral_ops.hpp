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

namespace alfven {

/// Multiplies coefficients by (i xi1)^alpha1 (i xi2)^alpha2. Nyquist indices
/// are zeroed along an axis whose derivative order is odd.
ScalarField derivative(const ScalarField& f, int alpha1, int alpha2);

/// Per mode w -> (I - xi xi^T / |xi|^2) w; the zero mode is left unchanged.
/// Uses the odd-order wavevector, so the discrete divergence of the result
/// vanishes to rounding.
VectorField leray_project(const VectorField& w);

/// 2/3 rule: zero every coefficient with |k1| > n1/3 or |k2| > n2/3.
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& w);
bool is_dealiased(int k1, int k2, const Grid& g);

/// Discrete divergence coefficients xi . w (without the factor i).
ScalarField divergence(const VectorField& w);
/// max_xi |xi . w(xi)| and max_xi |w(xi)|.
double max_divergence(const VectorField& w);
double max_coefficient(const VectorField& w);
/// max |xi . w| / max |w|; zero for the zero field.
double relative_divergence(const VectorField& w);

/// Largest violation of f(-xi) = conj(f(xi)) on the self-mirrored columns.
double hermitian_defect(const ScalarField& f);

}  // namespace alfven
