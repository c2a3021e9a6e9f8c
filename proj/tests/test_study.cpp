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

#include "alfven/study.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

namespace alfven {
namespace {

std::vector<double> eps_grid() { return {0.25, 0.125, 0.0625, 0.03125, 0.015625, 0.0078125}; }

TEST(FitSlope, PlantedPowerLaw) {
  const auto x = eps_grid();
  std::vector<double> y;
  for (double e : x) y.push_back(std::pow(e, 1.25));
  const SlopeFit f = fit_slope(x, y);
  EXPECT_NEAR(f.slope, 1.25, 1e-12);
  EXPECT_NEAR(f.intercept, 0.0, 1e-12);
  EXPECT_NEAR(f.r2, 1.0, 1e-12);
  EXPECT_EQ(f.used, 6);
}

TEST(FitSlope, ConstantHasZeroSlope) {
  const auto x = eps_grid();
  const SlopeFit f = fit_slope(x, std::vector<double>(x.size(), 3.0));
  EXPECT_NEAR(f.slope, 0.0, 1e-12);
}

TEST(FitSlope, NoisyQuadratic) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 0.01);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = eps_grid();
    std::vector<double> y;
    for (double e : x) y.push_back(3.0 * e * e * (1.0 + noise(rng)));
    EXPECT_NEAR(fit_slope(x, y).slope, 2.0, 0.05);
  }
}

TEST(FitSlope, ExcludesNonPositiveAndNeedsFour) {
  const std::vector<double> x{0.5, 0.25, 0.125, 0.0625, 0.03125};
  const std::vector<double> y{0.25, 0.0625, 0.0, 0.00390625, -1.0};
  EXPECT_THROW(fit_slope(x, y), std::invalid_argument);
  const std::vector<double> y2{0.25, 0.0625, 0.015625, 0.0, 0.0009765625};
  const SlopeFit f = fit_slope(x, y2);
  EXPECT_EQ(f.used, 4);
  EXPECT_EQ(f.excluded, 1);
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
}

StudyTable synthetic(int n) {
  StudyTable t;
  for (int i = 0; i < n; ++i) {
    t.push_back({"s", "error", std::ldexp(1.0, -(i % 7) - 1), "obs" + std::to_string(i % 3),
                 0.1 * (i + 1) / 3.0, static_cast<std::uint64_t>(i), 128, 100.53096491487338, 1e-3,
                 i * 1.5});
  }
  return t;
}

TEST(Csv, EmptyTableIsHeaderOnly) {
  std::ostringstream o;
  emit_csv(StudyTable{}, o);
  EXPECT_EQ(o.str(), "study,kind,eps,observable,value,seed,N,L,dt,wall_ms\n");
}

TEST(Csv, RoundTripHundredRows) {
  const StudyTable t = synthetic(100);
  std::stringstream buf;
  emit_csv(t, buf);
  EXPECT_EQ(load_csv(buf), t);
}

TEST(Csv, TenthSurvivesBitExactly) {
  StudyTable t = synthetic(1);
  t[0].value = 0.1;
  std::stringstream buf;
  emit_csv(t, buf);
  EXPECT_EQ(load_csv(buf)[0].value, 0.1);
  EXPECT_NE(buf.str().find("0.10000000000000001"), std::string::npos);
}

TEST(Csv, MalformedRowNamesLine) {
  std::stringstream in(csv_header() + "\ns,error,0.5,x,1,1,128,1,0,0\ns,error,zz,x\n");
  try {
    load_csv(in);
    FAIL() << "expected error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(StudyKinds, NamesRoundTrip) {
  for (StudyKind k : {StudyKind::stability, StudyKind::error, StudyKind::limit_linear,
                      StudyKind::limit_nonlinear, StudyKind::kernel, StudyKind::propagator_verify,
                      StudyKind::energy, StudyKind::pressure})
    EXPECT_EQ(parse_study_kind(to_string(k)), k);
  EXPECT_EQ(to_string(StudyKind::limit_linear), "limit-linear");
  EXPECT_THROW(parse_study_kind("bogus"), std::invalid_argument);
}

TEST(StudyConfig, Validation) {
  StudyConfig s;
  s.eps_list = {0.1, 0.2};
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.eps_list = {0.5, 1.0};
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.eps_list = {0.5, 0.25};
  EXPECT_NO_THROW(s.validate());
  s.kind = StudyKind::limit_linear;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.base.recipe.support_radius = 30.0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
}

StudyConfig small_study() {
  StudyConfig s;
  s.name = "unit";
  s.kind = StudyKind::stability;
  s.base.n1 = s.base.n2 = 16;
  s.base.length1 = s.base.length2 = 4.0 * std::numbers::pi;
  s.base.t_end = 0.2;
  s.base.snapshot_count = 2;
  s.base.dt = 0.05;
  s.eps_list = {0.5, 0.25, 0.125};
  s.deterministic = true;
  return s;
}

TEST(RunStudy, DeterministicBytesAndOrder) {
  StudyConfig s = small_study();
  std::ostringstream a, b;
  const StudyTable ta = run_study(s);
  emit_csv(ta, a);
  s.workers = 3;
  const StudyTable tb = run_study(s);
  emit_csv(tb, b);
  EXPECT_EQ(a.str(), b.str());
  ASSERT_EQ(ta.size(), 15u);
  EXPECT_EQ(ta.front().eps, 0.5);
  EXPECT_EQ(ta.back().eps, 0.125);
  for (const auto& r : ta) EXPECT_EQ(r.wall_ms, 0.0);
}

TEST(RunStudy, OutputFlushedIncrementally) {
  StudyConfig s = small_study();
  const auto path = std::filesystem::temp_directory_path() / "alfven_study_test.csv";
  s.output = path.string();
  const StudyTable t = run_study(s);
  EXPECT_EQ(load_csv(path.string()), t);
  std::filesystem::remove(path);
}

TEST(RunStudy, FailedRunRecordedAndSweepContinues) {
  StudyConfig s = small_study();
  s.kind = StudyKind::kernel;
  s.eps_list = {0.5, 0.25, 1e-30};
  const StudyTable t = run_study(s);
  const auto failed = select(t, observable::kRunFailed);
  ASSERT_EQ(failed.first.size(), 1u);
  EXPECT_EQ(failed.first[0], 1e-30);
  EXPECT_EQ(select(t, observable::kKernelLinf).first, (std::vector<double>{0.5, 0.25}));
}

TEST(PropagatorChecks, SmallSamplesPass) {
  const PropagatorCheck c = check_propagator(50, 3);
  EXPECT_LT(c.oracle_error, 1e-10);
  EXPECT_LT(c.continuity_gap, 1e-6);
  EXPECT_LT(c.semigroup_error, 1e-10);
  const double d = decay_constant(2000, 3);
  EXPECT_GT(d, 0.5);
  EXPECT_LT(d, 1.5);
}

}  // namespace
}  // namespace alfven
