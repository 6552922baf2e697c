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

#include "qsep/criteria.hpp"

#include <cmath>
#include <limits>

#include "qsep/bloch.hpp"

namespace qsep {

std::string_view to_string(CriterionId id) noexcept {
  switch (id) {
    case CriterionId::kPpt: return "PPT";
    case CriterionId::kCcnr: return "CCNR";
    case CriterionId::kCmTrace: return "CM_TRACE";
    case CriterionId::kCmHs: return "CM_HS";
  }
  return "UNKNOWN";
}

std::optional<CriterionId> parse_criterion(std::string_view name) noexcept {
  if (name == "PPT" || name == "ppt") return CriterionId::kPpt;
  if (name == "CCNR" || name == "ccnr") return CriterionId::kCcnr;
  if (name == "CM_TRACE" || name == "cm") return CriterionId::kCmTrace;
  if (name == "CM_HS" || name == "cm_hs") return CriterionId::kCmHs;
  return std::nullopt;
}

double cm_threshold(int dim_a, int dim_b) {
  const double m = dim_a;
  const double n = dim_b;
  return std::sqrt(m * n * (m - 1.0) * (n - 1.0) / 4.0);
}

CriterionReport make_report(CriterionId id, double value, double threshold,
                            double detection_tol) {
  CriterionReport rep;
  rep.id = id;
  rep.value = value;
  rep.threshold = threshold;
  rep.margin = value - threshold;
  rep.entangled = rep.margin > detection_tol;
  return rep;
}

CriterionReport ppt_report(const DensityMatrix& rho, double detection_tol) {
  return make_report(CriterionId::kPpt, trace_norm(partial_transpose_a(rho)),
                     1.0, detection_tol);
}

CriterionReport ccnr_report(const DensityMatrix& rho, double detection_tol) {
  return make_report(CriterionId::kCcnr, trace_norm(realign(rho)), 1.0,
                     detection_tol);
}

CriterionReport cm_report(const DensityMatrix& rho, double detection_tol) {
  const RealMatrix t = correlation_matrix(rho);
  return make_report(CriterionId::kCmTrace, trace_norm(t.cast<Complex>()),
                     cm_threshold(rho.dim_a(), rho.dim_b()), detection_tol);
}

CriterionReport cm_hs_report(const DensityMatrix& rho, double detection_tol) {
  const RealMatrix t = correlation_matrix(rho);
  return make_report(CriterionId::kCmHs, hs_norm(t),
                     cm_threshold(rho.dim_a(), rho.dim_b()), detection_tol);
}

CriterionReport evaluate(CriterionId id, const DensityMatrix& rho,
                         double detection_tol) {
  switch (id) {
    case CriterionId::kPpt: return ppt_report(rho, detection_tol);
    case CriterionId::kCcnr: return ccnr_report(rho, detection_tol);
    case CriterionId::kCmTrace: return cm_report(rho, detection_tol);
    case CriterionId::kCmHs: return cm_hs_report(rho, detection_tol);
  }
  throw Error(ErrorCode::kDomain, "unknown criterion");
}

std::array<CriterionReport, 4> full_report(const DensityMatrix& rho,
                                           double detection_tol) {
  std::array<CriterionReport, 4> out;
  for (std::size_t k = 0; k < kAllCriteria.size(); ++k) {
    try {
      out[k] = evaluate(kAllCriteria[k], rho, detection_tol);
    } catch (const Error& e) {
      constexpr double nan = std::numeric_limits<double>::quiet_NaN();
      out[k] = CriterionReport{kAllCriteria[k], nan, nan, nan, false, e.code(), e.what()};
    }
  }
  return out;
}

}  // namespace qsep
