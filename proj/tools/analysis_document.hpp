// Copyright 2026 The qsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qsep::cli {

struct CriterionEntry {
  std::string id;
  double value = 0.0;
  double threshold = 0.0;
  double margin = 0.0;
  bool entangled = false;
  std::string status = "ok";

  bool operator==(const CriterionEntry&) const = default;
};

struct MeasureEntry {
  std::string measure;
  std::string kind;
  std::string source;
  double value = 0.0;
  double raw = 0.0;
  bool swapped = false;

  bool operator==(const MeasureEntry&) const = default;
};

struct FnfSummary {
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;
  std::vector<CriterionEntry> criteria;
  std::vector<MeasureEntry> measures;

  bool operator==(const FnfSummary&) const = default;
};

/// Everything `analyze` reports about one state.
struct AnalysisDocument {
  std::string state;  // name from the file metadata, else the path
  int dim_a = 0;
  int dim_b = 0;
  std::vector<CriterionEntry> criteria;
  std::vector<MeasureEntry> measures;
  std::optional<FnfSummary> fnf;
  std::string tool_version;
  std::optional<std::string> timestamp;

  bool operator==(const AnalysisDocument&) const = default;
};

/// Shortest decimal form that parses back to the same double ("nan", "inf"
/// for non-finite values).
std::string format_number(double x);

std::string to_json(const AnalysisDocument& doc);
AnalysisDocument parse_json(const std::string& text);
std::string to_csv(const AnalysisDocument& doc);
std::string to_text(const AnalysisDocument& doc);

}  // namespace qsep::cli
