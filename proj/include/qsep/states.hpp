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

#include <cstdint>
#include <vector>

#include "qsep/linalg.hpp"

namespace qsep {

/// The GenTiles2 unextendible product basis on C^M (x) C^N:
/// |F>, then |S_j> for j = 0..M-1, then |L_jk> for j = 0..M-1, k = 1..N-3.
struct UpbFamily {
  int dim_a = 0;
  int dim_b = 0;
  std::vector<PureState> vectors;
};

/// Requires m >= 3, n > 3, m <= n.
UpbFamily gentiles2_upb(int m, int n);

/// (I - sum of UPB projectors) / (2M - 1); PPT and entangled.
DensityMatrix gentiles2_state(int m, int n);

/// (1/sqrt d) sum_i |ii>.
PureState max_entangled(int d);

struct NoiseMixture {
  DensityMatrix base;
  double p;
  DensityMatrix mixed;  // p base + (1 - p) I / MN
};

NoiseMixture white_noise_mix(const DensityMatrix& base, double p);

/// Complex-normal amplitudes, normalized. Deterministic per seed.
PureState random_pure(int m, int n, std::uint64_t seed);

/// Mixture of `rank` random pure projectors with uniform-simplex weights.
DensityMatrix random_mixed(int m, int n, int rank, std::uint64_t seed);

/// Mixture of `terms` random product projectors with uniform-simplex weights.
DensityMatrix random_separable(int m, int n, int terms, std::uint64_t seed);

/// Haar-random unitary (QR of a complex Ginibre matrix, phases fixed).
ComplexMatrix random_unitary(int d, std::uint64_t seed);

}  // namespace qsep
