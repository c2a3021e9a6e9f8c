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

#include "alfven/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "alfven/kernels.hpp"

namespace alfven {

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField out = a;
  for (int i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < out[i].coeffs.size(); ++k) out[i].coeffs[k] += b[i].coeffs[k];
  }
  out.divergence_free = a.divergence_free && b.divergence_free;
  return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  VectorField out = a;
  for (int i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < out[i].coeffs.size(); ++k) out[i].coeffs[k] -= b[i].coeffs[k];
  }
  out.divergence_free = a.divergence_free && b.divergence_free;
  return out;
}

VectorField operator*(double s, const VectorField& a) {
  VectorField out = a;
  for (int i = 0; i < 2; ++i) {
    for (auto& c : out[i].coeffs) c *= s;
  }
  return out;
}

namespace {

Complex ipow(double xi, int n) {
  // (i xi)^n
  Complex r(1.0, 0.0);
  const Complex base(0.0, xi);
  for (int j = 0; j < n; ++j) r *= base;
  return r;
}

}  // namespace

ScalarField derivative(const ScalarField& f, int alpha1, int alpha2) {
  if (alpha1 < 0 || alpha2 < 0) throw std::invalid_argument("derivative: negative order");
  const Grid& g = f.grid;
  ScalarField out(g);
  for (int r = 0; r < g.rows(); ++r) {
    const Complex m1 = (alpha1 % 2 == 1 && g.nyquist_row(r)) ? Complex(0.0)
                                                             : ipow(g.xi1(r), alpha1);
    for (int c = 0; c < g.cols(); ++c) {
      const Complex m2 = (alpha2 % 2 == 1 && g.nyquist_col(c)) ? Complex(0.0)
                                                               : ipow(g.xi2(c), alpha2);
      out.at(r, c) = m1 * m2 * f.at(r, c);
    }
  }
  return out;
}

VectorField leray_project(const VectorField& w) {
  VectorField out = w;
  kernels::leray_project(w.grid(), out[0].coeffs, out[1].coeffs);
  out.divergence_free = true;
  return out;
}

bool is_dealiased(int k1, int k2, const Grid& g) {
  return 3 * std::abs(k1) <= g.n1 && 3 * std::abs(k2) <= g.n2;
}

ScalarField dealias(const ScalarField& f) {
  const Grid& g = f.grid;
  ScalarField out = f;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (!is_dealiased(g.k1(r), g.k2(c), g)) out.at(r, c) = 0.0;
    }
  }
  return out;
}

VectorField dealias(const VectorField& w) {
  VectorField out = w;
  out[0] = dealias(w[0]);
  out[1] = dealias(w[1]);
  return out;
}

ScalarField divergence(const VectorField& w) {
  const Grid& g = w.grid();
  ScalarField out(g);
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      out.at(r, c) = g.xi1_odd(r) * w[0].at(r, c) + g.xi2_odd(c) * w[1].at(r, c);
    }
  }
  return out;
}

double max_divergence(const VectorField& w) {
  const ScalarField d = divergence(w);
  double m = 0.0;
  for (const auto& c : d.coeffs) m = std::max(m, std::abs(c));
  return m;
}

double max_coefficient(const VectorField& w) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (const auto& c : w[i].coeffs) m = std::max(m, std::abs(c));
  }
  return m;
}

double relative_divergence(const VectorField& w) {
  const double top = max_coefficient(w);
  return top == 0.0 ? 0.0 : max_divergence(w) / top;
}

double hermitian_defect(const ScalarField& f) {
  const Grid& g = f.grid;
  double defect = 0.0;
  for (int c : {0, g.n2 / 2}) {
    for (int r = 0; r < g.rows(); ++r) {
      const int mirror = (g.n1 - r) % g.n1;
      defect = std::max(defect, std::abs(f.at(mirror, c) - std::conj(f.at(r, c))));
    }
  }
  return defect;
}

}  // namespace alfven
