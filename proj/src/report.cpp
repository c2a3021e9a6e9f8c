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

#include "alfven/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "alfven/thresholds.hpp"

namespace alfven {

namespace th = thresholds;

StudyTable rows_of_kind(const StudyTable& t, const std::string& kind) {
  StudyTable out;
  for (const auto& r : t) {
    if (r.kind == kind) out.push_back(r);
  }
  return out;
}

namespace {

std::vector<double> values_of(const StudyTable& t, const std::string& obs) {
  return select(t, obs).second;
}

double max_of(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  return m;
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

CriterionResult start(const char* id, const char* title, StudyKind kind, const StudyTable& t) {
  CriterionResult r{id, title, to_string(kind), !t.empty(), false, "", {}};
  if (!r.evaluated) r.detail = "no rows of kind " + r.kind;
  return r;
}

// Fails the criterion when a run failed or the observable is missing.
bool usable(CriterionResult& r, const StudyTable& t, const std::vector<double>& v,
            std::size_t min_count = 1) {
  const auto failed = values_of(t, observable::kRunFailed);
  if (!failed.empty()) {
    r.detail = std::to_string(failed.size()) + " run(s) failed";
    r.values.emplace_back("failed_runs", static_cast<double>(failed.size()));
    return false;
  }
  if (v.size() < min_count) {
    r.detail = "too few rows";
    return false;
  }
  if (!all_finite(v)) {
    r.detail = "non-finite values";
    return false;
  }
  return true;
}

void add_fit(CriterionResult& r, const std::string& prefix, const SlopeFit& f) {
  r.values.emplace_back(prefix + "slope", f.slope);
  r.values.emplace_back(prefix + "r2", f.r2);
  r.values.emplace_back(prefix + "pairs", f.used);
  r.values.emplace_back(prefix + "excluded", f.excluded);
}

}  // namespace

CriterionResult evaluate_propagator(const StudyTable& t) {
  CriterionResult r = start("C1", "propagator oracle equivalence", StudyKind::propagator_verify, t);
  if (!r.evaluated) return r;
  const auto o = values_of(t, observable::kOracleError);
  const auto c = values_of(t, observable::kContinuityGap);
  const auto s = values_of(t, observable::kSemigroupError);
  if (!usable(r, t, o) || !usable(r, t, c) || !usable(r, t, s)) return r;
  r.values = {{"oracle_error", max_of(o)},          {"oracle_threshold", th::kOracleRelative},
              {"continuity_gap", max_of(c)},        {"continuity_threshold", th::kContinuityGap},
              {"semigroup_error", max_of(s)},       {"semigroup_threshold", th::kSemigroupRelative}};
  r.pass = max_of(o) <= th::kOracleRelative && max_of(c) <= th::kContinuityGap &&
           max_of(s) <= th::kSemigroupRelative;
  return r;
}

CriterionResult evaluate_decay(const StudyTable& t) {
  CriterionResult r = start("C2", "multiplier decay bound", StudyKind::propagator_verify, t);
  if (!r.evaluated) return r;
  const auto v = values_of(t, observable::kDecayConstant);
  if (!usable(r, t, v, 2)) return r;
  const double hi = max_of(v);
  const double lo = *std::min_element(v.begin(), v.end());
  const double spread = (hi - lo) / hi;
  r.values = {{"c_star_max", hi},
              {"c_star_min", lo},
              {"relative_spread", spread},
              {"spread_threshold", th::kDecayStability},
              {"frozen_c_star", th::kDecayConstantMax}};
  r.pass = spread <= th::kDecayStability && hi <= th::kDecayConstantMax;
  return r;
}

CriterionResult evaluate_energy(const StudyTable& t) {
  CriterionResult r = start("C3", "energy identity", StudyKind::energy, t);
  if (!r.evaluated) return r;
  const auto v = values_of(t, observable::kEnergyResidual);
  if (!usable(r, t, v)) return r;
  r.values = {{"residual_max", max_of(v)}, {"threshold", th::kEnergyResidual}};
  r.pass = max_of(v) <= th::kEnergyResidual;
  return r;
}

CriterionResult evaluate_stability(const StudyTable& t) {
  CriterionResult r = start("C4", "stability scaling", StudyKind::stability, t);
  if (!r.evaluated) return r;
  const auto v = values_of(t, observable::kSupNormOverEps);
  if (!usable(r, t, v, 2)) return r;
  const double hi = max_of(v);
  const double lo = *std::min_element(v.begin(), v.end());
  r.values = {{"max", hi},
              {"min", lo},
              {"spread", hi / lo},
              {"spread_threshold", th::kStabilitySpread},
              {"frozen_c_stab", th::kStabilityConstantMax}};
  r.pass = lo > 0.0 && hi / lo <= th::kStabilitySpread && hi <= th::kStabilityConstantMax;
  return r;
}

CriterionResult evaluate_error(const StudyTable& t) {
  CriterionResult r = start("C5", "vanishing nonlinear interaction", StudyKind::error, t);
  if (!r.evaluated) return r;
  const auto v = values_of(t, observable::kSupGradError);
  if (!usable(r, t, v, 4)) return r;
  try {
    const SlopeFit f = fit_slope(t, observable::kSupGradError);
    const SlopeFit g = fit_slope(t, observable::kSupGradErrorOriginal);
    add_fit(r, "rescaled_", f);
    add_fit(r, "original_", g);
    r.values.emplace_back("asserted_exponent", th::kErrorExponent);
    r.values.emplace_back("slope_threshold", th::kErrorSlope);
    r.values.emplace_back("r2_threshold", th::kErrorR2);
    r.values.emplace_back("original_asserted_exponent", th::kOriginalErrorExponent);
    r.values.emplace_back("original_slope_threshold", th::kOriginalErrorSlope);
    r.pass = f.slope >= th::kErrorSlope && f.r2 >= th::kErrorR2 &&
             g.slope >= th::kOriginalErrorSlope;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

CriterionResult evaluate_linear_limit(const StudyTable& t) {
  CriterionResult r = start("C6", "linear small Alfven number limit", StudyKind::limit_linear, t);
  if (!r.evaluated) return r;
  const auto v = values_of(t, observable::kSlabSup);
  if (!usable(r, t, v, 4)) return r;
  try {
    const SlopeFit f = fit_slope(t, observable::kSlabSup);
    add_fit(r, "", f);
    r.values.emplace_back("slope_threshold", th::kLinearLimitSlope);
    r.values.emplace_back("r2_threshold", th::kLinearLimitR2);
    r.pass = f.slope >= th::kLinearLimitSlope && f.r2 >= th::kLinearLimitR2;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

CriterionResult evaluate_nonlinear_limit(const StudyTable& t) {
  CriterionResult r =
      start("C7", "nonlinear small Alfven number limit", StudyKind::limit_nonlinear, t);
  if (!r.evaluated) return r;
  const auto [eps, v] = select(t, observable::kSlabSup);
  if (!usable(r, t, v, 4)) return r;
  bool monotone = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    // Rows follow the decreasing eps list.
    if (!(eps[i] < eps[i - 1] && v[i] < v[i - 1])) monotone = false;
  }
  try {
    const SlopeFit f = fit_slope(eps, v);
    add_fit(r, "", f);
    r.values.emplace_back("monotone", monotone ? 1.0 : 0.0);
    r.values.emplace_back("asserted_exponent", th::kNonlinearLimitSlope);
    r.values.emplace_back("slope_threshold", th::kNonlinearLimitSlope);
    r.pass = monotone && f.slope >= th::kNonlinearLimitSlope;
    if (!monotone) r.detail = "not monotone along the sweep";
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

CriterionResult evaluate_pressure(const StudyTable& t) {
  CriterionResult r = start("C8", "pressure estimate", StudyKind::pressure, t);
  if (!r.evaluated) return r;
  const auto v = values_of(t, observable::kPressureRatioMax);
  if (!usable(r, t, v, 2)) return r;
  const double hi = max_of(v);
  const double lo = *std::min_element(v.begin(), v.end());
  const double spread = (hi - lo) / hi;
  r.values = {{"ratio_max", hi},
              {"ratio_min", lo},
              {"relative_spread", spread},
              {"spread_threshold", th::kPressureStability},
              {"frozen_c_pr", th::kPressureRatioMax}};
  r.pass = hi > 0.0 && spread <= th::kPressureStability && hi <= th::kPressureRatioMax;
  return r;
}

CriterionResult evaluate_bilinear(const StudyTable& t) {
  CriterionResult r = start("C9", "bilinear estimate consistency", StudyKind::error, t);
  if (!r.evaluated) return r;
  const auto v = values_of(t, observable::kBilinearRatio);
  if (!usable(r, t, v)) return r;
  r.values = {{"ratio_max", max_of(v)}, {"frozen_c_bil", th::kBilinearRatioMax}};
  r.pass = max_of(v) <= th::kBilinearRatioMax;
  return r;
}

std::vector<CriterionResult> evaluate_criteria(const StudyTable& table) {
  const auto kind = [&](StudyKind k) { return rows_of_kind(table, to_string(k)); };
  const StudyTable pv = kind(StudyKind::propagator_verify);
  const StudyTable err = kind(StudyKind::error);
  return {evaluate_propagator(pv),
          evaluate_decay(pv),
          evaluate_energy(kind(StudyKind::energy)),
          evaluate_stability(kind(StudyKind::stability)),
          evaluate_error(err),
          evaluate_linear_limit(kind(StudyKind::limit_linear)),
          evaluate_nonlinear_limit(kind(StudyKind::limit_nonlinear)),
          evaluate_pressure(kind(StudyKind::pressure)),
          evaluate_bilinear(err)};
}

bool all_pass(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return !r.evaluated || r.pass; });
}

std::string report_json(const std::vector<CriterionResult>& results,
                        const std::vector<std::string>& inputs) {
  nlohmann::ordered_json j;
  j["schema"] = "alfven-report-1";
  j["inputs"] = inputs;
  nlohmann::ordered_json crit = nlohmann::ordered_json::array();
  std::vector<std::string> missing;
  for (const auto& r : results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["title"] = r.title;
    c["kind"] = r.kind;
    c["evaluated"] = r.evaluated;
    c["pass"] = r.evaluated && r.pass;
    c["detail"] = r.detail;
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.values) {
      if (std::isfinite(v)) {
        vals[k] = v;
      } else {
        vals[k] = nullptr;
      }
    }
    c["values"] = vals;
    crit.push_back(c);
    if (!r.evaluated) missing.push_back(r.id);
  }
  j["criteria"] = crit;
  j["missing"] = missing;
  j["all_pass"] = all_pass(results);
  return j.dump(2) + "\n";
}

void emit_report(const std::vector<CriterionResult>& results,
                 const std::vector<std::string>& inputs, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << report_json(results, inputs);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace alfven
