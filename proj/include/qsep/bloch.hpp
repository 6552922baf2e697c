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

#include <memory>
#include <vector>

#include "qsep/linalg.hpp"

namespace qsep {

/// Traceless Hermitian generators of SU(d), normalized Tr(l_i l_j) = 2 delta_ij.
///
/// Order: symmetric |j><k| + |k><j| for j < k (lexicographic), then
/// antisymmetric -i(|j><k| - |k><j|) for j < k, then the diagonal family
/// sqrt(2 / (l (l + 1))) (sum_{m<l} |m><m| - l |l><l|) for l = 1 .. d-1.
/// For d = 2 this is (sigma_x, sigma_y, sigma_z).
struct GeneratorBasis {
  int dim = 0;
  std::vector<ComplexMatrix> generators;
};

GeneratorBasis su_generators(int d);

/// Memoized su_generators(d); safe to call from several threads.
std::shared_ptr<const GeneratorBasis> cached_su_generators(int d);

/// Fano form coefficients of a bipartite state:
///   rho = (I + sum r_i l_i (x) I + sum s_j I (x) l_j + sum t_ij l_i (x) l_j) / MN
struct BlochDecomposition {
  int dim_a = 0;
  int dim_b = 0;
  RealVector r;  // M^2 - 1
  RealVector s;  // N^2 - 1
  RealMatrix t;  // (M^2 - 1) x (N^2 - 1), the correlation matrix
};

/// Throws kNumerical if any defining trace carries an imaginary part > 1e-8.
BlochDecomposition decompose(const DensityMatrix& rho);

/// Only the correlation matrix; avoids computing r and s.
RealMatrix correlation_matrix(const DensityMatrix& rho);

/// Inverse of decompose. The result is Hermitian with unit trace; positivity
/// is only checked when validate_psd is set (kValidation on failure, message
/// carries the minimum eigenvalue).
DensityMatrix reconstruct(const BlochDecomposition& b, bool validate_psd = false);

/// Norm of the local Bloch vector of a single-subsystem state, computed as
/// (d / sqrt 2) ||rho_local - I/d||_HS, which avoids the cancellation in the
/// purity route.
double local_bloch_norm(const ComplexMatrix& reduced);

struct PurityResiduals {
  double reduction_purity;   // |Tr rho_A^2 - (M + 2|r|^2) / M^2|
  double equal_spectra;      // |(M + 2|r|^2)/M^2 - (N + 2|s|^2)/N^2|
  double global_purity;      // |N|r|^2 + M|s|^2 + 2|T|^2_HS - MN(MN-1)/2|
};

/// Residuals of the three pure-state relations between r, s and T.
PurityResiduals purity_relations_check(const PureState& psi);

}  // namespace qsep
