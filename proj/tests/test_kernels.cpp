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
#include <array>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "alfven/propagator.hpp"
#include "test_util.hpp"

namespace alfven {
namespace {

std::vector<Complex> random_coeffs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<Complex> c(n);
  for (auto& z : c) z = Complex(d(rng), d(rng));
  return c;
}

class SerialVsOmp : public ::testing::TestWithParam<int> {
 protected:
  Grid g() const { return make_grid(GetParam(), std::max(16, GetParam() / 2), 7.0, 3.0); }
};

TEST_P(SerialVsOmp, ApplyBlockBitExact) {
  const Grid grid = g();
  const MultiplierTable table(grid, 0.8, {0.2, 0.05, 3.0});
  const std::size_t n = grid.spectral_size();
  std::array<std::vector<Complex>, 4> a{random_coeffs(n, 1), random_coeffs(n, 2),
                                        random_coeffs(n, 3), random_coeffs(n, 4)};
  auto b = a;
  kernels::serial::apply_block(table.entries(), {a[0], a[1], a[2], a[3]});
  kernels::omp::apply_block(table.entries(), {b[0], b[1], b[2], b[3]});
  for (int i = 0; i < 4; ++i) EXPECT_EQ(a[i], b[i]);
}

TEST_P(SerialVsOmp, QuadraticProductsBitExact) {
  const Grid grid = g();
  std::array<std::vector<double>, 4> in{testing::random_samples(grid, 1), testing::random_samples(grid, 2),
                                        testing::random_samples(grid, 3), testing::random_samples(grid, 4)};
  const std::size_t n = grid.physical_size();
  std::array<std::vector<double>, 4> s, o;
  for (int i = 0; i < 4; ++i) {
    s[i].assign(n, 0.0);
    o[i].assign(n, 0.0);
  }
  kernels::serial::quadratic_products({in[0], in[1], in[2], in[3], s[0], s[1], s[2], s[3]});
  kernels::omp::quadratic_products({in[0], in[1], in[2], in[3], o[0], o[1], o[2], o[3]});
  for (int i = 0; i < 4; ++i) EXPECT_EQ(s[i], o[i]);
  EXPECT_DOUBLE_EQ(s[0][5], in[0][5] * in[0][5] - in[2][5] * in[2][5]);
  EXPECT_DOUBLE_EQ(s[3][5], in[0][5] * in[3][5] - in[1][5] * in[2][5]);
}

TEST_P(SerialVsOmp, LerayBitExact) {
  const Grid grid = g();
  const std::size_t n = grid.spectral_size();
  auto a1 = random_coeffs(n, 5), a2 = random_coeffs(n, 6);
  auto b1 = a1, b2 = a2;
  kernels::serial::leray_project(grid, a1, a2);
  kernels::omp::leray_project(grid, b1, b2);
  EXPECT_EQ(a1, b1);
  EXPECT_EQ(a2, b2);
}

TEST_P(SerialVsOmp, ReductionsAgreeToRounding) {
  const Grid grid = g();
  const auto c = random_coeffs(grid.spectral_size(), 7);
  for (int m : {0, 1, 3}) {
    for (int p : {0, 1, 2}) {
      const double s = kernels::serial::weighted_norm_sq(grid, c, m, p);
      const double o = kernels::omp::weighted_norm_sq(grid, c, m, p);
      EXPECT_NEAR(o, s, 1e-13 * s) << m << " " << p;
    }
  }
  const auto x = testing::random_samples(grid, 8);
  EXPECT_EQ(kernels::serial::max_abs(x), kernels::omp::max_abs(x));
}

INSTANTIATE_TEST_SUITE_P(Sizes, SerialVsOmp, ::testing::Values(16, 64, 256));

TEST(Kernels, WeightedNormOfSingleMode) {
  const Grid grid = make_grid(16, 2.0 * std::numbers::pi);
  std::vector<Complex> c(grid.spectral_size());
  c[grid.index(1, 0)] = 2.0;  // |xi|^2 = 1, k2 = 0 column counted once
  EXPECT_DOUBLE_EQ(kernels::weighted_norm_sq(grid, c, 3, 0), 4.0 * 8.0);
  EXPECT_DOUBLE_EQ(kernels::weighted_norm_sq(grid, c, 3, 1), 4.0 * 8.0);
  c[grid.index(1, 0)] = 0.0;
  c[grid.index(0, 2)] = 1.0;  // |xi|^2 = 4, interior column counted twice
  EXPECT_DOUBLE_EQ(kernels::weighted_norm_sq(grid, c, 1, 1), 2.0 * 5.0 * 4.0);
}

}  // namespace
}  // namespace alfven
