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

#include "qsep/linalg.hpp"

namespace qsep {

struct FnfOptions {
  double tol = 1e-9;      // stop once max(|r|, |s|) <= tol
  int max_iter = 10000;   // full A+B sweeps
  double eps = 0.0;       // regularizer for the whitening step only
};

struct FilterResult {
  DensityMatrix rho_tilde;
  ComplexMatrix f_a;  // M x M, det 1
  ComplexMatrix f_b;  // N x N, det 1
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;  // max(|r|, |s|) of rho_tilde
};

/// (F_A (x) F_B) rho (F_A (x) F_B)^dagger, normalized to unit trace.
/// Throws kSingularFilter for a non-invertible filter or vanishing trace.
DensityMatrix apply_filter(const DensityMatrix& rho, const ComplexMatrix& f_a,
                           const ComplexMatrix& f_b);

/// Filter normal form by alternating whitening of the reductions:
/// G_A = det(rho_A)^{1/2M} rho_A^{-1/2} applied on A, then the same on B,
/// until both local Bloch vectors vanish. Running out of iterations is not an
/// error; the result then has converged = false. A singular reduction with
/// eps = 0 throws kSingularReduction.
FilterResult filter_normal_form(const DensityMatrix& rho, const FnfOptions& opts = {});

/// max(|r|, |s|) of rho.
double local_residual(const DensityMatrix& rho);

struct FnfInvariantReport {
  double ppt_value_before = 0.0;  // ||T_A(rho)||_tr
  double ppt_value_after = 0.0;   // ||T_A(rho_tilde)||_tr
  bool ppt_preserved = false;     // both within 1e-8 of 1, or both above
  double reconstruction_residual = 0.0;  // max |apply_filter(rho) - rho_tilde|
  double reduction_residual_a = 0.0;     // ||rho_A(rho_tilde) - I/M||_HS
  double reduction_residual_b = 0.0;     // ||rho_B(rho_tilde) - I/N||_HS
  double det_defect_a = 0.0;             // |det F_A - 1|
  double det_defect_b = 0.0;
};

FnfInvariantReport fnf_invariant_check(const DensityMatrix& rho,
                                       const FilterResult& result);

}  // namespace qsep
