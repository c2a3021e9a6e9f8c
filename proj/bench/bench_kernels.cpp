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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "alfven/kernels.hpp"
#include "alfven/propagator.hpp"
#include "alfven/solver.hpp"
#include "alfven/initial_data.hpp"

using namespace alfven;

namespace {

std::vector<Complex> random_modes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<Complex> v(n);
  for (auto& c : v) c = {d(rng), d(rng)};
  return v;
}

std::vector<double> random_samples(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

template <bool Omp>
void BM_ApplyBlock(benchmark::State& state) {
  const Grid g = make_grid(static_cast<int>(state.range(0)), 32.0);
  const MultiplierTable table(g, 0.1, {0.05, 0.025, 1.0});
  auto u1 = random_modes(g.spectral_size(), 1), u2 = random_modes(g.spectral_size(), 2);
  auto h1 = random_modes(g.spectral_size(), 3), h2 = random_modes(g.spectral_size(), 4);
  for (auto _ : state) {
    kernels::ModeSpans m{u1, u2, h1, h2};
    if constexpr (Omp) {
      kernels::omp::apply_block(table.entries(), m);
    } else {
      kernels::serial::apply_block(table.entries(), m);
    }
    benchmark::DoNotOptimize(u1.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.spectral_size()));
}

template <bool Omp>
void BM_QuadraticProducts(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0) * state.range(0));
  const auto u1 = random_samples(n, 1), u2 = random_samples(n, 2);
  const auto h1 = random_samples(n, 3), h2 = random_samples(n, 4);
  std::vector<double> a(n), b(n), c(n), w(n);
  for (auto _ : state) {
    kernels::ProductSpans p{u1, u2, h1, h2, a, b, c, w};
    if constexpr (Omp) {
      kernels::omp::quadratic_products(p);
    } else {
      kernels::serial::quadratic_products(p);
    }
    benchmark::DoNotOptimize(w.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

template <bool Omp>
void BM_Leray(benchmark::State& state) {
  const Grid g = make_grid(static_cast<int>(state.range(0)), 32.0);
  auto w1 = random_modes(g.spectral_size(), 5), w2 = random_modes(g.spectral_size(), 6);
  for (auto _ : state) {
    if constexpr (Omp) {
      kernels::omp::leray_project(g, w1, w2);
    } else {
      kernels::serial::leray_project(g, w1, w2);
    }
    benchmark::DoNotOptimize(w1.data());
  }
}

template <bool Omp>
void BM_WeightedNorm(benchmark::State& state) {
  const Grid g = make_grid(static_cast<int>(state.range(0)), 32.0);
  const auto c = random_modes(g.spectral_size(), 7);
  for (auto _ : state) {
    double v = Omp ? kernels::omp::weighted_norm_sq(g, c, 3, 1)
                   : kernels::serial::weighted_norm_sq(g, c, 3, 1);
    benchmark::DoNotOptimize(v);
  }
}

void BM_NonlinearRhs(benchmark::State& state) {
  const Grid g = make_grid(static_cast<int>(state.range(0)), 32.0);
  auto [u, h] = random_divfree_pair(g, {});
  NonlinearOperator op(g);
  Tendency t{VectorField(g), VectorField(g)};
  for (auto _ : state) {
    op.evaluate(u, h, t);
    benchmark::DoNotOptimize(t.u[0].coeffs.data());
  }
}

}  // namespace

BENCHMARK(BM_ApplyBlock<false>)->Name("apply_block/serial")->Arg(128)->Arg(512);
BENCHMARK(BM_ApplyBlock<true>)->Name("apply_block/omp")->Arg(128)->Arg(512);
BENCHMARK(BM_QuadraticProducts<false>)->Name("quadratic_products/serial")->Arg(128)->Arg(512);
BENCHMARK(BM_QuadraticProducts<true>)->Name("quadratic_products/omp")->Arg(128)->Arg(512);
BENCHMARK(BM_Leray<false>)->Name("leray_project/serial")->Arg(128)->Arg(512);
BENCHMARK(BM_Leray<true>)->Name("leray_project/omp")->Arg(128)->Arg(512);
BENCHMARK(BM_WeightedNorm<false>)->Name("weighted_norm_sq/serial")->Arg(128)->Arg(512);
BENCHMARK(BM_WeightedNorm<true>)->Name("weighted_norm_sq/omp")->Arg(128)->Arg(512);
BENCHMARK(BM_NonlinearRhs)->Name("nonlinear_rhs")->Arg(128)->Arg(256);

BENCHMARK_MAIN();
