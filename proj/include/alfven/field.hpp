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
#include <complex>
#include <vector>

#include "alfven/grid.hpp"

namespace alfven {

using Complex = std::complex<double>;

/// Spectral coefficients of a real scalar field in the half layout of Grid.
struct ScalarField {
  Grid grid;
  std::vector<Complex> coeffs;

  ScalarField() = default;
  explicit ScalarField(const Grid& g) : grid(g), coeffs(g.spectral_size()) {}

  Complex& at(int row, int col) { return coeffs[grid.index(row, col)]; }
  const Complex& at(int row, int col) const { return coeffs[grid.index(row, col)]; }
};

/// Two-component field on a 2D grid.
struct VectorField {
  std::array<ScalarField, 2> comp;
  bool divergence_free = false;

  VectorField() = default;
  explicit VectorField(const Grid& g) : comp{ScalarField(g), ScalarField(g)} {}

  const Grid& grid() const { return comp[0].grid; }
  ScalarField& operator[](int i) { return comp[i]; }
  const ScalarField& operator[](int i) const { return comp[i]; }
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double s, const VectorField& a);

}  // namespace alfven
