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

#include <string_view>
#include <vector>

#include "qsep/linalg.hpp"

namespace qsep {

enum class MeasureId { kConcurrence, kTangle, kMnb };
enum class EstimateKind { kExactPure, kLowerBound, kUpperBound, kExactClosedForm };
enum class BoundSource {
  kPureReduction,  // C = sqrt(2 (1 - Tr rho_A^2))
  kPureBloch,      // tau from |r|
  kPureCm,         // tau from |T|_HS
  kCaf,            // max(|T_A|, |R|) concurrence bound
  kCmTraceBound,   // |T|_tr concurrence bound
  kHsTangleBound,  // |T|_HS tangle bound
  kBlochUpper,     // tangle upper bound from |r|, |s|
  kMnbDef,         // MNB measure, defining formula
  kMnbCm,          // MNB measure via |T|_HS
  kWootters,       // exact two-qubit concurrence
};

std::string_view to_string(MeasureId id) noexcept;
std::string_view to_string(EstimateKind kind) noexcept;
std::string_view to_string(BoundSource source) noexcept;

/// One number about C, tau or E together with what kind of statement it is.
/// Lower bounds are clamped into [0, max]; `raw` keeps the unclamped formula
/// value. `swapped` is set when the formula used dim_b as the smaller
/// dimension M.
struct MeasureEstimate {
  MeasureId measure = MeasureId::kConcurrence;
  EstimateKind kind = EstimateKind::kExactPure;
  BoundSource source = BoundSource::kPureReduction;
  double value = 0.0;
  double raw = 0.0;
  bool swapped = false;
};

/// sqrt(2(M-1)/M) and 2(M-1)/M with M = min(dim_a, dim_b).
double max_concurrence(int dim_a, int dim_b);
double max_tangle(int dim_a, int dim_b);

MeasureEstimate pure_concurrence(const PureState& psi);
MeasureEstimate pure_tangle_bloch(const PureState& psi);
MeasureEstimate pure_tangle_cm(const PureState& psi);

MeasureEstimate concurrence_lower_caf(const DensityMatrix& rho);
MeasureEstimate concurrence_lower_cm(const DensityMatrix& rho);
MeasureEstimate tangle_lower_hs(const DensityMatrix& rho);
MeasureEstimate tangle_upper(const DensityMatrix& rho);

/// Two-qubit only (kDomain otherwise).
MeasureEstimate mnb_measure(const DensityMatrix& rho);
MeasureEstimate mnb_from_cm(const DensityMatrix& rho);
MeasureEstimate wootters_concurrence(const DensityMatrix& rho);

/// Every estimate that applies to rho: exact pure-state values when rho is
/// pure (purity within 1e-10 of 1), the four bounds, and the two-qubit
/// closed forms when rho is 2x2.
std::vector<MeasureEstimate> all_estimates(const DensityMatrix& rho);

}  // namespace qsep
