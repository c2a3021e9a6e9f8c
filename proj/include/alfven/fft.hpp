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

#include <memory>
#include <span>
#include <vector>

#include "alfven/field.hpp"

namespace alfven {

/// FFTW-backed real 2D transform pair with owned, aligned scratch buffers.
///
/// Normalization: coefficients c_k = sqrt(L1 L2) / (n1 n2) * DFT(f)_k, so the
/// cell-area-weighted squared L2 norm of the samples equals the sum of |c_k|^2
/// over the full lattice. Executing a plan is thread safe only across distinct
/// Fft objects; use one per worker.
class Fft {
 public:
  explicit Fft(const Grid& grid);
  ~Fft();
  Fft(Fft&&) noexcept;
  Fft& operator=(Fft&&) noexcept;
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  const Grid& grid() const { return grid_; }

  void forward(std::span<const double> physical, std::span<Complex> spectral);
  void inverse(std::span<const Complex> spectral, std::span<double> physical);

  ScalarField forward(std::span<const double> physical);
  std::vector<double> inverse(const ScalarField& field);

 private:
  struct Impl;
  Grid grid_;
  std::unique_ptr<Impl> impl_;
};

/// Convenience transforms using a per-thread cached plan.
ScalarField transform_forward(const Grid& grid, std::span<const double> samples);
std::vector<double> transform_inverse(const ScalarField& field);

/// Weighted sum of squares of physical samples: cell_area * sum |f_j|^2.
double physical_l2_sq(const Grid& grid, std::span<const double> samples);
/// Sum of |c|^2 over the full lattice represented by the half spectrum.
double spectral_l2_sq(const ScalarField& field);

}  // namespace alfven
