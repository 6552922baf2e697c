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

#include "qsep/sweep.hpp"

#include <vector>

#include "qsep/error.hpp"
#include "qsep/states.hpp"

namespace qsep {

SweepResult sweep_noise(const DensityMatrix& state, CriterionId id,
                        const SweepOptions& opts) {
  if (opts.resolution < 1 || !(opts.bisect_tol > 0.0)) {
    throw Error(ErrorCode::kDomain, "sweep needs resolution >= 1 and bisect_tol > 0");
  }
  SweepResult result;
  result.id = id;

  auto eval = [&](double p) {
    ++result.evaluations;
    return evaluate(id, white_noise_mix(state, p).mixed, opts.detection_tol);
  };

  constexpr double kMonotoneSlack = 1e-12;
  std::optional<int> first_hit;
  double previous_value = 0.0;
  for (int k = 0; k <= opts.resolution; ++k) {
    const double p = static_cast<double>(k) / opts.resolution;
    const CriterionReport rep = eval(p);
    if (k > 0 && rep.value < previous_value - kMonotoneSlack) result.monotone = false;
    previous_value = rep.value;
    if (rep.entangled && !first_hit) first_hit = k;
  }
  if (!first_hit) return result;
  if (*first_hit == 0) {
    result.threshold = 0.0;
    return result;
  }

  double lo = static_cast<double>(*first_hit - 1) / opts.resolution;  // undetected
  double hi = static_cast<double>(*first_hit) / opts.resolution;      // detected
  while (hi - lo > opts.bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eval(mid).entangled) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.threshold = hi;
  return result;
}

}  // namespace qsep
