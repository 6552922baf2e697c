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

#include <complex>
#include <cstddef>
#include <optional>

#include <Eigen/Dense>

namespace qsep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Validation thresholds for DensityMatrix / PureState construction.
struct Tolerances {
  double hermitian = 1e-12;  // max |rho_ij - conj(rho_ji)|
  double trace = 1e-12;      // |Tr rho - 1|
  double psd = -1e-10;       // smallest admissible eigenvalue
  double norm = 1e-12;       // |<psi|psi> - 1|
};

/// Largest row or column count kron() will produce.
inline constexpr Eigen::Index kDefaultMaxDimension = 4096;

/// A bipartite density matrix on C^M (x) C^N. The composite basis index of
/// |i j> is i * N + j (subsystem B fastest). Construction validates
/// Hermiticity, unit trace, and positivity; the object is immutable afterwards.
class DensityMatrix {
 public:
  DensityMatrix(int dim_a, int dim_b, ComplexMatrix matrix,
                const Tolerances& tol = {});

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  int dim() const noexcept { return dim_a_ * dim_b_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  /// I_{MN} / (MN).
  static DensityMatrix maximally_mixed(int dim_a, int dim_b);

 private:
  int dim_a_;
  int dim_b_;
  ComplexMatrix matrix_;
};

/// A normalized vector on C^M (x) C^N, same index convention as DensityMatrix.
class PureState {
 public:
  PureState(int dim_a, int dim_b, ComplexVector amplitudes,
            const Tolerances& tol = {});

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

  DensityMatrix projector() const;

  /// The amplitudes reshaped as an M x N matrix psi_{ij}.
  ComplexMatrix coefficient_matrix() const;

 private:
  int dim_a_;
  int dim_b_;
  ComplexVector amplitudes_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index max_dimension = kDefaultMaxDimension);

/// rho_A = Tr_B rho (M x M).
ComplexMatrix partial_trace_b(const DensityMatrix& rho);
/// rho_B = Tr_A rho (N x N).
ComplexMatrix partial_trace_a(const DensityMatrix& rho);

/// T_A(rho)_{ij,kl} = rho_{kj,il}.
ComplexMatrix partial_transpose_a(const DensityMatrix& rho);

/// R(rho)_{(i,j),(k,l)} = rho_{ik,jl}; an M^2 x N^2 matrix whose row index is
/// i * M + j and column index k * N + l.
ComplexMatrix realign(const DensityMatrix& rho);

/// Same state with the roles of A and B exchanged.
DensityMatrix swap_subsystems(const DensityMatrix& rho);

/// Singular values in decreasing order. Throws kNumerical if the SVD fails or
/// returns non-finite values.
RealVector singular_values(const ComplexMatrix& x);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& x);

/// Frobenius norm.
double hs_norm(const ComplexMatrix& x);
double hs_norm(const RealMatrix& x);

/// (m + eps I)^{-1/2} for Hermitian PSD m. When det_out is given it receives
/// det(m + eps I).
ComplexMatrix inv_sqrt_psd(const ComplexMatrix& m, double eps,
                           double* det_out = nullptr,
                           double hermitian_tol = 1e-12);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// max |x_ij - conj(x_ji)|; infinity for non-square input.
double hermiticity_defect(const ComplexMatrix& x);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& hermitian);

/// Dominant eigenvector when Tr(rho^2) is within tol of 1, otherwise nullopt.
std::optional<PureState> as_pure_state(const DensityMatrix& rho,
                                       double tol = 1e-10);

}  // namespace qsep
