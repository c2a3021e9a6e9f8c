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

#include <string>
#include <vector>

#include "alfven/study.hpp"

namespace alfven {

struct CriterionResult {
  std::string id;
  std::string title;
  std::string kind;  // study kind the criterion reads
  bool evaluated = false;
  bool pass = false;
  std::string detail;
  /// Observed statistics and thresholds, flat name/value pairs.
  std::vector<std::pair<std::string, double>> values;
};

/// Evaluates every criterion whose study kind is present in `table`. Criteria
/// for absent kinds are returned with evaluated = false.
std::vector<CriterionResult> evaluate_criteria(const StudyTable& table);

CriterionResult evaluate_propagator(const StudyTable& t);
CriterionResult evaluate_decay(const StudyTable& t);
CriterionResult evaluate_energy(const StudyTable& t);
CriterionResult evaluate_stability(const StudyTable& t);
CriterionResult evaluate_error(const StudyTable& t);
CriterionResult evaluate_linear_limit(const StudyTable& t);
CriterionResult evaluate_nonlinear_limit(const StudyTable& t);
CriterionResult evaluate_pressure(const StudyTable& t);
CriterionResult evaluate_bilinear(const StudyTable& t);

/// Rows whose kind column equals `kind`.
StudyTable rows_of_kind(const StudyTable& t, const std::string& kind);

/// JSON summary, schema in docs/report_schema.md. Returns the text written.
std::string report_json(const std::vector<CriterionResult>& results,
                        const std::vector<std::string>& inputs);
void emit_report(const std::vector<CriterionResult>& results,
                 const std::vector<std::string>& inputs, const std::string& path);

/// True when every evaluated criterion passes.
bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace alfven
