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

#include <array>

#include "alfven/field.hpp"

namespace alfven {

using Matrix2c = std::array<std::array<Complex, 2>, 2>;

Matrix2c multiply(const Matrix2c& x, const Matrix2c& y);

/// exp(A) by scaling and squaring with a truncated Taylor series. Independent
/// of the closed-form symbol; used as its oracle. Throws std::overflow_error
/// when the norm is too large to scale safely.
Matrix2c matrix_exponential_oracle(const Matrix2c& a);

/// t A(xi) for the linear MHD symbol with parameters (a, b, kappa).
Matrix2c symbol_generator(double xi1, double xi_sq, double t, double a, double b, double kappa);

}  // namespace alfven
