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

#include "alfven/initial_data.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "alfven/fft.hpp"
#include "alfven/kernels.hpp"
#include "alfven/spectral_ops.hpp"

namespace alfven {

double slab_bump(double x1, double length1, double radius) {
  const double d = x1 - 0.5 * length1;
  if (std::abs(d) >= radius) return 0.0;
  const double r = d / radius;
  return std::exp(-18.0 * r * r);
}

VectorField curl_of_stream(const ScalarField& psi) {
  const Grid& g = psi.grid;
  VectorField v(g);
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      const Complex p = psi.at(r, c);
      v[0].at(r, c) = Complex(0.0, g.xi2_odd(c)) * p;
      v[1].at(r, c) = -Complex(0.0, g.xi1_odd(r)) * p;
    }
  }
  v.divergence_free = true;
  return v;
}

namespace {

ScalarField random_stream(const Grid& g, std::mt19937_64& rng, const InitialDataRecipe& recipe,
                          Fft& fft) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> noise(g.physical_size());
  for (auto& x : noise) x = normal(rng);
  ScalarField psi = fft.forward(noise);
  const double w2 = recipe.spectrum_width * recipe.spectrum_width;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if ((r == 0 && c == 0) || g.nyquist_row(r) || g.nyquist_col(c)) {
        psi.at(r, c) = 0.0;
      } else {
        psi.at(r, c) *= std::exp(-g.xi_sq(r, c) / w2);
      }
    }
  }
  if (recipe.support_radius) {
    std::vector<double> phys = fft.inverse(psi);
    for (int i = 0; i < g.n1; ++i) {
      const double b = slab_bump(g.x1(i), g.length1, *recipe.support_radius);
      for (int j = 0; j < g.n2; ++j) phys[g.physical_index(i, j)] *= b;
    }
    psi = fft.forward(phys);
  }
  return psi;
}

double pair_norm_sq(const VectorField& v, const VectorField& h, int m) {
  double acc = 0.0;
  for (int i = 0; i < 2; ++i) {
    acc += kernels::weighted_norm_sq(v.grid(), v[i].coeffs, m, 0);
    acc += kernels::weighted_norm_sq(h.grid(), h[i].coeffs, m, 0);
  }
  return acc;
}

}  // namespace

std::pair<VectorField, VectorField> random_divfree_pair(const Grid& grid,
                                                        const InitialDataRecipe& recipe) {
  if (!(recipe.target_norm > 0.0)) throw std::invalid_argument("initial data: target_norm <= 0");
  if (!(recipe.spectrum_width > 0.0)) {
    throw std::invalid_argument("initial data: spectrum_width <= 0");
  }
  if (recipe.m < 0) throw std::invalid_argument("initial data: negative m");
  if (recipe.support_radius &&
      !(*recipe.support_radius > 0.0 && *recipe.support_radius < 0.5 * grid.length1)) {
    throw std::invalid_argument("initial data: support_radius must lie in (0, L1/2)");
  }

  Fft fft(grid);
  constexpr int kMaxDraws = 8;
  for (int attempt = 0; attempt <= kMaxDraws; ++attempt) {
    std::mt19937_64 rng(recipe.seed + static_cast<std::uint64_t>(attempt));
    VectorField v = curl_of_stream(random_stream(grid, rng, recipe, fft));
    VectorField h = curl_of_stream(random_stream(grid, rng, recipe, fft));
    if (recipe.support_radius) {
      v = leray_project(v);
      h = leray_project(h);
    }
    const double norm = std::sqrt(pair_norm_sq(v, h, recipe.m));
    if (!(norm > 0.0) || !std::isfinite(norm)) continue;
    const double s = recipe.target_norm / norm;
    v = s * v;
    h = s * h;
    v.divergence_free = h.divergence_free = true;
    return {std::move(v), std::move(h)};
  }
  throw std::runtime_error("initial data: degenerate all-zero draw after re-seeding");
}

}  // namespace alfven
