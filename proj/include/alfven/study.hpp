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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "alfven/simulate.hpp"

namespace alfven {

enum class StudyKind {
  stability,
  error,
  limit_linear,
  limit_nonlinear,
  kernel,
  propagator_verify,
  energy,
  pressure,
};

std::string to_string(StudyKind k);
/// Accepts the names printed by to_string; throws std::invalid_argument otherwise.
StudyKind parse_study_kind(const std::string& s);
/// Kinds whose rows are indexed by eps and need an eps list.
bool sweeps_eps(StudyKind k);

struct StudyConfig {
  std::string name = "study";
  StudyKind kind = StudyKind::stability;
  SimConfig base{};
  std::vector<double> eps_list{0.25, 0.125, 0.0625, 0.03125, 0.015625, 0.0078125};
  // Kernel decomposition.
  double theta = 0.5;
  double c_tilde = 0.1;
  double t0 = 1.0;
  // Slab observable S_{lR} at original time t1; R is base.recipe.support_radius.
  double slab_l = 2.0;
  double t1 = 1.0;
  // Sampled studies (propagator-verify, pressure).
  int samples = 200;
  int decay_samples = 100000;
  std::vector<std::uint64_t> sample_seeds{1, 2};
  int pressure_index = 2;
  int workers = 1;
  /// Write wall_ms = 0 so repeated runs produce identical bytes.
  bool deterministic = false;
  std::optional<std::string> output;

  /// Throws std::invalid_argument on an invalid combination.
  void validate() const;
};

struct StudyRecord {
  std::string study;
  std::string kind;
  double eps = 0.0;
  std::string observable;
  double value = 0.0;
  std::uint64_t seed = 0;
  int n = 0;
  double length = 0.0;
  double dt = 0.0;
  double wall_ms = 0.0;

  bool operator==(const StudyRecord&) const = default;
};

using StudyTable = std::vector<StudyRecord>;

/// Runs every eps (or sample set) of the study. Rows are ordered by the eps
/// list, independent of completion order. A failed run yields one row with
/// observable "run_failed" and the sweep continues. When study.output is set,
/// rows are appended to that CSV as soon as every earlier eps has finished.
StudyTable run_study(const StudyConfig& study);

/// Observable names used by the runners.
namespace observable {
inline constexpr const char* kSupNormOverEps = "sup_norm_m_over_eps";
inline constexpr const char* kEnergyResidual = "energy_residual";
inline constexpr const char* kSmallness = "smallness";
inline constexpr const char* kBoxContamination = "box_contamination";
inline constexpr const char* kDivRelative = "div_relative_max";
inline constexpr const char* kSupGradError = "sup_grad_error";
inline constexpr const char* kSupGradErrorOriginal = "sup_grad_error_original";
inline constexpr const char* kErrorDissipation = "error_dissipation";
inline constexpr const char* kBilinearMixed = "bilinear_mixed";
inline constexpr const char* kBilinearGradient = "bilinear_gradient";
inline constexpr const char* kBilinearBound = "bilinear_bound";
inline constexpr const char* kBilinearRatio = "bilinear_ratio";
inline constexpr const char* kSlabSup = "slab_sup";
inline constexpr const char* kSlabSupInitial = "slab_sup_initial";
inline constexpr const char* kKernelLinf = "kernel_linf";
inline constexpr const char* kKernelLinf1 = "kernel_linf_d1";
inline constexpr const char* kKernelLinf2 = "kernel_linf_d2";
inline constexpr const char* kKernelLinf3 = "kernel_linf_d3";
inline constexpr const char* kOracleError = "oracle_error";
inline constexpr const char* kContinuityGap = "continuity_gap";
inline constexpr const char* kSemigroupError = "semigroup_error";
inline constexpr const char* kDecayConstant = "decay_constant";
inline constexpr const char* kPressureRatioMax = "pressure_ratio_max";
inline constexpr const char* kRunFailed = "run_failed";
}  // namespace observable

/// Header: study,kind,eps,observable,value,seed,N,L,dt,wall_ms. Reals are
/// written with 17 significant digits, LF line endings.
void emit_csv(const StudyTable& table, const std::string& path);
void emit_csv(const StudyTable& table, std::ostream& out);
std::string csv_header();
std::string csv_row(const StudyRecord& r);
/// Throws std::runtime_error naming the line number of a malformed row.
StudyTable load_csv(const std::string& path);
StudyTable load_csv(std::istream& in);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int used = 0;
  int excluded = 0;  // nonpositive or non-finite pairs
};

/// Least squares of log y on log x. Throws std::invalid_argument with fewer
/// than 4 usable pairs.
SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y);
/// Pairs (eps, value) of one observable, in table order.
std::pair<std::vector<double>, std::vector<double>> select(const StudyTable& t,
                                                           const std::string& observable);
SlopeFit fit_slope(const StudyTable& t, const std::string& observable);

/// Sampled propagator checks; each returns the statistics written by the
/// propagator-verify study.
struct PropagatorCheck {
  double oracle_error = 0.0;     // max |closed - oracle| / max(|oracle|, 1e-2)
  double continuity_gap = 0.0;   // max entry gap across delta = +-1e-8
  double semigroup_error = 0.0;  // max |B(t+s) - B(t) B(s)| / max(|B(t+s)|, 1e-2)
  int skipped = 0;               // oracle overflow
};
PropagatorCheck check_propagator(int samples, std::uint64_t seed);
/// max over samples of max |b_ij| / decay_envelope.
double decay_constant(int samples, std::uint64_t seed);
/// max pressure_ratio over `samples` random states drawn from base.
double pressure_ratio_max(const SimConfig& base, int samples, std::uint64_t seed, int index);

}  // namespace alfven
