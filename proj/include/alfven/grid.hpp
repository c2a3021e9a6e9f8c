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

#include <cstddef>
#include <numbers>

namespace alfven {

/// Periodic box [0, L1) x [0, L2) sampled with n1 x n2 points.
///
/// Spectral coefficients use the real-to-complex half layout: n1 rows (all
/// signed k1) by n2/2 + 1 columns (k2 >= 0). Row r holds k1 = r for
/// r < n1/2 and k1 = r - n1 otherwise, so row n1/2 is the Nyquist index
/// k1 = -n1/2. Column n2/2 is the k2 Nyquist index.
struct Grid {
  int n1 = 0;
  int n2 = 0;
  double length1 = 0.0;
  double length2 = 0.0;

  int rows() const { return n1; }
  int cols() const { return n2 / 2 + 1; }
  std::size_t physical_size() const { return static_cast<std::size_t>(n1) * n2; }
  std::size_t spectral_size() const { return static_cast<std::size_t>(rows()) * cols(); }

  int k1(int row) const { return row < n1 / 2 ? row : row - n1; }
  int k2(int col) const { return col; }
  bool nyquist_row(int row) const { return row == n1 / 2; }
  bool nyquist_col(int col) const { return col == n2 / 2; }

  double xi1(int row) const { return 2.0 * std::numbers::pi * k1(row) / length1; }
  double xi2(int col) const { return 2.0 * std::numbers::pi * k2(col) / length2; }
  double xi_sq(int row, int col) const {
    const double a = xi1(row);
    const double b = xi2(col);
    return a * a + b * b;
  }
  /// Wavenumbers used by odd-order multipliers: the Nyquist index is zeroed.
  double xi1_odd(int row) const { return nyquist_row(row) ? 0.0 : xi1(row); }
  double xi2_odd(int col) const { return nyquist_col(col) ? 0.0 : xi2(col); }

  /// Number of full-lattice modes represented by one stored half-spectrum entry.
  double mode_weight(int col) const { return (col == 0 || nyquist_col(col)) ? 1.0 : 2.0; }

  double dx1() const { return length1 / n1; }
  double dx2() const { return length2 / n2; }
  double cell_area() const { return dx1() * dx2(); }
  double area() const { return length1 * length2; }
  double x1(int i) const { return i * dx1(); }
  double x2(int j) const { return j * dx2(); }

  /// Largest wavenumber magnitude resolved along both axes.
  double max_resolved_wavenumber() const;

  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * cols() + col;
  }
  std::size_t physical_index(int i, int j) const {
    return static_cast<std::size_t>(i) * n2 + j;
  }

  bool operator==(const Grid&) const = default;
};

/// Square grid; n_points must be a power of two >= 16 and box_length > 0.
Grid make_grid(int n_points, double box_length);

/// Rectangular grid with the same per-axis preconditions.
Grid make_grid(int n1, int n2, double length1, double length2);

}  // namespace alfven
