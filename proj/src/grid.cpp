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

#include "alfven/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace alfven {

namespace {

void check_points(int n, const char* axis) {
  const bool pow2 = n > 0 && (n & (n - 1)) == 0;
  if (!pow2 || n < 16) {
    throw std::invalid_argument(std::string("grid: n_points along ") + axis +
                                " must be a power of two >= 16, got " + std::to_string(n));
  }
}

void check_length(double length, const char* axis) {
  if (!(length > 0.0)) {
    throw std::invalid_argument(std::string("grid: box length along ") + axis +
                                " must be positive");
  }
}

}  // namespace

double Grid::max_resolved_wavenumber() const {
  return std::min(std::numbers::pi * n1 / length1, std::numbers::pi * n2 / length2);
}

Grid make_grid(int n_points, double box_length) {
  return make_grid(n_points, n_points, box_length, box_length);
}

Grid make_grid(int n1, int n2, double length1, double length2) {
  check_points(n1, "x1");
  check_points(n2, "x2");
  check_length(length1, "x1");
  check_length(length2, "x2");
  return Grid{n1, n2, length1, length2};
}

}  // namespace alfven
