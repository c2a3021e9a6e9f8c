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

#include "alfven/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace alfven::kernels {

namespace {

inline void block_at(const BlockEntry& e, Complex& u, Complex& h) {
  const Complex ib(0.0, e.beta);
  const Complex nu = e.b11 * u + ib * h;
  const Complex nh = ib * u + e.b22 * h;
  u = nu;
  h = nh;
}

inline void products_at(const ProductSpans& p, std::size_t j) {
  const double u1 = p.u1[j], u2 = p.u2[j], h1 = p.h1[j], h2 = p.h2[j];
  p.a11[j] = u1 * u1 - h1 * h1;
  p.a12[j] = u1 * u2 - h1 * h2;
  p.a22[j] = u2 * u2 - h2 * h2;
  p.w[j] = u1 * h2 - u2 * h1;
}

inline void leray_at(const Grid& g, int r, int c, Complex& w1, Complex& w2) {
  const double k1 = g.xi1_odd(r);
  const double k2 = g.xi2_odd(c);
  const double kk = k1 * k1 + k2 * k2;
  if (kk == 0.0) return;
  const Complex dot = (k1 * w1 + k2 * w2) / kk;
  w1 -= k1 * dot;
  w2 -= k2 * dot;
}

inline double sobolev_weight(double xi_sq, int m, int p) {
  double w = 1.0;
  const double base = 1.0 + xi_sq;
  for (int i = 0; i < m; ++i) w *= base;
  for (int i = 0; i < p; ++i) w *= xi_sq;
  return w;
}

}  // namespace

namespace serial {

void apply_block(std::span<const BlockEntry> table, ModeSpans m) {
  for (std::size_t k = 0; k < table.size(); ++k) {
    block_at(table[k], m.u1[k], m.h1[k]);
    block_at(table[k], m.u2[k], m.h2[k]);
  }
}

void quadratic_products(ProductSpans p) {
  for (std::size_t j = 0; j < p.u1.size(); ++j) products_at(p, j);
}

void leray_project(const Grid& grid, std::span<Complex> w1, std::span<Complex> w2) {
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      const std::size_t k = grid.index(r, c);
      leray_at(grid, r, c, w1[k], w2[k]);
    }
  }
}

double weighted_norm_sq(const Grid& grid, std::span<const Complex> c, int sobolev_m,
                        int gradient_power) {
  double acc = 0.0;
  for (int r = 0; r < grid.rows(); ++r) {
    for (int col = 0; col < grid.cols(); ++col) {
      const double w = grid.mode_weight(col) *
                       sobolev_weight(grid.xi_sq(r, col), sobolev_m, gradient_power);
      acc += w * std::norm(c[grid.index(r, col)]);
    }
  }
  return acc;
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace serial

namespace omp {

void apply_block(std::span<const BlockEntry> table, ModeSpans m) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(table.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    block_at(table[k], m.u1[k], m.h1[k]);
    block_at(table[k], m.u2[k], m.h2[k]);
  }
}

void quadratic_products(ProductSpans p) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(p.u1.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) products_at(p, static_cast<std::size_t>(j));
}

void leray_project(const Grid& grid, std::span<Complex> w1, std::span<Complex> w2) {
  const int rows = grid.rows();
  const int cols = grid.cols();
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const std::size_t k = grid.index(r, c);
      leray_at(grid, r, c, w1[k], w2[k]);
    }
  }
}

double weighted_norm_sq(const Grid& grid, std::span<const Complex> c, int sobolev_m,
                        int gradient_power) {
  const int rows = grid.rows();
  const int cols = grid.cols();
  double acc = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
  for (int r = 0; r < rows; ++r) {
    double row_acc = 0.0;
    for (int col = 0; col < cols; ++col) {
      const double w = grid.mode_weight(col) *
                       sobolev_weight(grid.xi_sq(r, col), sobolev_m, gradient_power);
      row_acc += w * std::norm(c[grid.index(r, col)]);
    }
    acc += row_acc;
  }
  return acc;
}

double max_abs(std::span<const double> x) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (std::ptrdiff_t j = 0; j < n; ++j) m = std::max(m, std::abs(x[j]));
  return m;
}

}  // namespace omp

}  // namespace alfven::kernels
