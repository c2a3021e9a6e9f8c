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

#include "alfven/expm.hpp"

#include <cmath>
#include <stdexcept>

namespace alfven {

Matrix2c multiply(const Matrix2c& x, const Matrix2c& y) {
  Matrix2c r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return r;
}

Matrix2c matrix_exponential_oracle(const Matrix2c& a) {
  double norm = 0.0;
  for (int i = 0; i < 2; ++i) {
    double row = 0.0;
    for (int j = 0; j < 2; ++j) row += std::abs(a[i][j]);
    norm = std::max(norm, row);
  }
  if (!std::isfinite(norm) || norm > 1e6) {
    throw std::overflow_error("matrix_exponential_oracle: norm too large");
  }
  int squarings = 0;
  while (norm > 0.25) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  Matrix2c x{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) x[i][j] = a[i][j] * scale;
  }
  // Taylor to degree 18; remainder below 0.25^19 / 19!.
  Matrix2c sum{{{Complex(1.0), Complex(0.0)}, {Complex(0.0), Complex(1.0)}}};
  Matrix2c term = sum;
  for (int k = 1; k <= 18; ++k) {
    term = multiply(term, x);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        term[i][j] /= static_cast<double>(k);
        sum[i][j] += term[i][j];
      }
    }
  }
  for (int s = 0; s < squarings; ++s) sum = multiply(sum, sum);
  return sum;
}

Matrix2c symbol_generator(double xi1, double xi_sq, double t, double a, double b, double kappa) {
  const Complex off(0.0, t * kappa * xi1);
  return Matrix2c{{{Complex(-a * t * xi_sq), off}, {off, Complex(-b * t * xi_sq)}}};
}

}  // namespace alfven
