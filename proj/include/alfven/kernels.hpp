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

#include <span>

#include "alfven/field.hpp"

namespace alfven::kernels {

/// Per-mode entries of the 2x2 block multiplier [[b11, i*beta], [i*beta, b22]].
struct BlockEntry {
  double b11 = 1.0;
  double b22 = 1.0;
  double beta = 0.0;
};

/// Four spectral component arrays (u1, u2, h1, h2) updated in place.
struct ModeSpans {
  std::span<Complex> u1, u2, h1, h2;
};

/// Physical-space inputs and outputs of the quadratic nonlinearity.
///   a11 = u1 u1 - h1 h1, a12 = u1 u2 - h1 h2, a22 = u2 u2 - h2 h2,
///   w = u1 h2 - u2 h1.
struct ProductSpans {
  std::span<const double> u1, u2, h1, h2;
  std::span<double> a11, a12, a22, w;
};

// The serial namespace is the reference implementation; omp must agree with it
// bit for bit on elementwise kernels and to rounding on reductions.
namespace serial {
void apply_block(std::span<const BlockEntry> table, ModeSpans m);
void quadratic_products(ProductSpans p);
void leray_project(const Grid& grid, std::span<Complex> w1, std::span<Complex> w2);
double weighted_norm_sq(const Grid& grid, std::span<const Complex> c, int sobolev_m,
                        int gradient_power);
double max_abs(std::span<const double> x);
}  // namespace serial

namespace omp {
void apply_block(std::span<const BlockEntry> table, ModeSpans m);
void quadratic_products(ProductSpans p);
void leray_project(const Grid& grid, std::span<Complex> w1, std::span<Complex> w2);
double weighted_norm_sq(const Grid& grid, std::span<const Complex> c, int sobolev_m,
                        int gradient_power);
double max_abs(std::span<const double> x);
}  // namespace omp

// Production entry points.
using omp::apply_block;
using omp::leray_project;
using omp::max_abs;
using omp::quadratic_products;
using omp::weighted_norm_sq;

}  // namespace alfven::kernels
