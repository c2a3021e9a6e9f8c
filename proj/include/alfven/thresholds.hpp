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

// Acceptance thresholds and frozen regression constants.

namespace alfven::thresholds {

// Propagator against the matrix-exponential oracle.
inline constexpr double kOracleRelative = 1e-10;
inline constexpr double kContinuityGap = 1e-6;
inline constexpr double kSemigroupRelative = 1e-10;
inline constexpr int kOracleSamples = 200;

// Multiplier decay constant, two disjoint samples.
inline constexpr int kDecaySamples = 100000;
inline constexpr double kDecayStability = 0.10;

// Energy identity over the reference run.
inline constexpr double kEnergyResidual = 1e-6;

// Stability sweep: max / min of sup_t ||(u, h)||_m / eps.
inline constexpr double kStabilitySpread = 3.0;

// Vanishing nonlinear interaction.
inline constexpr double kErrorExponent = 1.25;
inline constexpr double kErrorSlope = kErrorExponent - 0.15;
inline constexpr double kErrorR2 = 0.95;
inline constexpr double kOriginalErrorExponent = 0.25;
inline constexpr double kOriginalErrorSlope = kOriginalErrorExponent - 0.1;

// Slab limits.
inline constexpr double kLinearLimitSlope = 0.5;
inline constexpr double kLinearLimitR2 = 0.9;
inline constexpr double kNonlinearLimitSlope = 2.0 / 16.0;

// Pressure ratio: two seeds within 20%.
inline constexpr double kPressureStability = 0.20;
inline constexpr int kPressureSamples = 100;

// Integrator.
inline constexpr double kOrder = 4.0;
inline constexpr double kOrderTolerance = 0.3;
inline constexpr double kLinearExactness = 1e-10;

// Regression constants, frozen from the first verified runs with headroom.
inline constexpr double kDecayConstantMax = 1.05;
inline constexpr double kPressureRatioMax = 0.015;
inline constexpr double kBilinearRatioMax = 0.15;
inline constexpr double kStabilityConstantMax = 1.3;

}  // namespace alfven::thresholds
