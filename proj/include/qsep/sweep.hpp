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

#include "qsep/criteria.hpp"
#include "qsep/linalg.hpp"

namespace qsep {

struct SweepOptions {
  int resolution = 100;      // pre-scan grid: p = k / resolution
  double bisect_tol = 1e-6;  // bracket width at which bisection stops
  double detection_tol = kDefaultDetectionTolerance;
};

struct SweepResult {
  CriterionId id = CriterionId::kPpt;
  /// Smallest p in [0, 1] at which the criterion detects p*state + (1-p)*I/MN,
  /// or nullopt if it never does on the grid.
  std::optional<double> threshold;
  /// False if the criterion value decreased somewhere along the grid, in which
  /// case the crossing found by bisection need not be unique.
  bool monotone = true;
  int evaluations = 0;
};

/// Locates the white-noise robustness threshold of one criterion: grid
/// pre-scan to bracket the first detection, then bisection.
SweepResult sweep_noise(const DensityMatrix& state, CriterionId id,
                        const SweepOptions& opts = {});

}  // namespace qsep
