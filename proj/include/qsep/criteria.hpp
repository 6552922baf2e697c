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

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qsep/error.hpp"
#include "qsep/linalg.hpp"

namespace qsep {

enum class CriterionId { kPpt, kCcnr, kCmTrace, kCmHs };

inline constexpr std::array<CriterionId, 4> kAllCriteria = {
    CriterionId::kPpt, CriterionId::kCcnr, CriterionId::kCmTrace,
    CriterionId::kCmHs};

std::string_view to_string(CriterionId id) noexcept;
std::optional<CriterionId> parse_criterion(std::string_view name) noexcept;

inline constexpr double kDefaultDetectionTolerance = 1e-9;

/// value vs. threshold for one separability test. A state is reported
/// entangled only when margin = value - threshold exceeds the detection
/// tolerance, so borderline values read as "undetected".
struct CriterionReport {
  CriterionId id = CriterionId::kPpt;
  double value = 0.0;
  double threshold = 0.0;
  double margin = 0.0;
  bool entangled = false;
  /// Set when the evaluation itself failed; the numeric fields are then NaN.
  std::optional<ErrorCode> error;
  std::string error_message;
};

/// sqrt(MN(M-1)(N-1)/4), the separable bound on ||T||_tr and ||T||_HS.
double cm_threshold(int dim_a, int dim_b);

CriterionReport make_report(CriterionId id, double value, double threshold,
                            double detection_tol = kDefaultDetectionTolerance);

CriterionReport ppt_report(const DensityMatrix& rho,
                           double detection_tol = kDefaultDetectionTolerance);
CriterionReport ccnr_report(const DensityMatrix& rho,
                            double detection_tol = kDefaultDetectionTolerance);
CriterionReport cm_report(const DensityMatrix& rho,
                          double detection_tol = kDefaultDetectionTolerance);
CriterionReport cm_hs_report(const DensityMatrix& rho,
                             double detection_tol = kDefaultDetectionTolerance);

CriterionReport evaluate(CriterionId id, const DensityMatrix& rho,
                         double detection_tol = kDefaultDetectionTolerance);

/// All four criteria in the order PPT, CCNR, CM_TRACE, CM_HS. A failure in
/// one criterion is recorded in that report and does not stop the others.
std::array<CriterionReport, 4> full_report(
    const DensityMatrix& rho, double detection_tol = kDefaultDetectionTolerance);

}  // namespace qsep
