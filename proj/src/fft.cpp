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

#include "alfven/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace alfven {

namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct Fft::Impl {
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  double forward_scale = 1.0;
  double inverse_scale = 1.0;

  explicit Impl(const Grid& g) {
    real = fftw_alloc_real(g.physical_size());
    spec = fftw_alloc_complex(g.spectral_size());
    if (real == nullptr || spec == nullptr) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    r2c = fftw_plan_dft_r2c_2d(g.n1, g.n2, real, spec, FFTW_ESTIMATE);
    c2r = fftw_plan_dft_c2r_2d(g.n1, g.n2, spec, real, FFTW_ESTIMATE);
    const double n = static_cast<double>(g.physical_size());
    forward_scale = std::sqrt(g.area()) / n;
    inverse_scale = 1.0 / std::sqrt(g.area());
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    if (r2c) fftw_destroy_plan(r2c);
    if (c2r) fftw_destroy_plan(c2r);
    fftw_free(real);
    fftw_free(spec);
  }
};

Fft::Fft(const Grid& grid) : grid_(grid), impl_(std::make_unique<Impl>(grid)) {}
Fft::~Fft() = default;
Fft::Fft(Fft&&) noexcept = default;
Fft& Fft::operator=(Fft&&) noexcept = default;

void Fft::forward(std::span<const double> physical, std::span<Complex> spectral) {
  if (physical.size() != grid_.physical_size() || spectral.size() != grid_.spectral_size()) {
    throw std::invalid_argument("fft forward: sample count does not match grid");
  }
  std::memcpy(impl_->real, physical.data(), physical.size_bytes());
  fftw_execute(impl_->r2c);
  const double s = impl_->forward_scale;
  for (std::size_t k = 0; k < spectral.size(); ++k) {
    spectral[k] = Complex(impl_->spec[k][0] * s, impl_->spec[k][1] * s);
  }
}

void Fft::inverse(std::span<const Complex> spectral, std::span<double> physical) {
  if (physical.size() != grid_.physical_size() || spectral.size() != grid_.spectral_size()) {
    throw std::invalid_argument("fft inverse: coefficient count does not match grid");
  }
  const double s = impl_->inverse_scale;
  for (std::size_t k = 0; k < spectral.size(); ++k) {
    impl_->spec[k][0] = spectral[k].real() * s;
    impl_->spec[k][1] = spectral[k].imag() * s;
  }
  fftw_execute(impl_->c2r);
  std::memcpy(physical.data(), impl_->real, physical.size_bytes());
}

ScalarField Fft::forward(std::span<const double> physical) {
  ScalarField out(grid_);
  forward(physical, out.coeffs);
  return out;
}

std::vector<double> Fft::inverse(const ScalarField& field) {
  if (!(field.grid == grid_)) throw std::invalid_argument("fft inverse: grid mismatch");
  std::vector<double> out(grid_.physical_size());
  inverse(field.coeffs, out);
  return out;
}

namespace {

Fft& cached_plan(const Grid& grid) {
  thread_local std::map<std::pair<std::pair<int, int>, std::pair<double, double>>, Fft> cache;
  const auto key = std::make_pair(std::make_pair(grid.n1, grid.n2),
                                  std::make_pair(grid.length1, grid.length2));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, Fft(grid)).first;
  return it->second;
}

}  // namespace

ScalarField transform_forward(const Grid& grid, std::span<const double> samples) {
  if (samples.size() != grid.physical_size()) {
    throw std::invalid_argument("transform_forward: sample count does not match grid");
  }
  return cached_plan(grid).forward(samples);
}

std::vector<double> transform_inverse(const ScalarField& field) {
  return cached_plan(field.grid).inverse(field);
}

double physical_l2_sq(const Grid& grid, std::span<const double> samples) {
  double acc = 0.0;
  for (double v : samples) acc += v * v;
  return acc * grid.cell_area();
}

double spectral_l2_sq(const ScalarField& field) {
  const Grid& g = field.grid;
  double acc = 0.0;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) acc += g.mode_weight(c) * std::norm(field.at(r, c));
  }
  return acc;
}

}  // namespace alfven
