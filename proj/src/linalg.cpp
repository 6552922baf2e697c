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

#include "qsep/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qsep/error.hpp"

namespace qsep {
namespace {

void require_dims(int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) {
    throw Error(ErrorCode::kDimension,
                "subsystem dimensions must be positive, got " +
                    std::to_string(dim_a) + "x" + std::to_string(dim_b));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(int dim_a, int dim_b, ComplexMatrix matrix,
                             const Tolerances& tol)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
  require_dims(dim_a, dim_b);
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw Error(ErrorCode::kDimension,
                "density matrix must be " + std::to_string(n) + "x" +
                    std::to_string(n) + ", got " +
                    std::to_string(matrix_.rows()) + "x" +
                    std::to_string(matrix_.cols()));
  }
  if (!matrix_.allFinite()) {
    throw Error(ErrorCode::kValidation, "density matrix has non-finite entries");
  }
  const double herm = hermiticity_defect(matrix_);
  if (herm > tol.hermitian) {
    throw Error(ErrorCode::kValidation,
                "density matrix is not Hermitian (defect " +
                    std::to_string(herm) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.trace) {
    throw Error(ErrorCode::kValidation,
                "density matrix trace is " + std::to_string(tr.real()) +
                    ", expected 1");
  }
  const double lo = min_eigenvalue(matrix_);
  if (lo < tol.psd) {
    throw Error(ErrorCode::kValidation,
                "density matrix is not positive semidefinite (min eigenvalue " +
                    std::to_string(lo) + ")");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim_a, int dim_b) {
  require_dims(dim_a, dim_b);
  const int n = dim_a * dim_b;
  return DensityMatrix(dim_a, dim_b,
                       ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

PureState::PureState(int dim_a, int dim_b, ComplexVector amplitudes,
                     const Tolerances& tol)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
  require_dims(dim_a, dim_b);
  if (amplitudes_.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw Error(ErrorCode::kDimension, "amplitude vector length must be M*N");
  }
  if (!amplitudes_.allFinite()) {
    throw Error(ErrorCode::kValidation, "amplitudes have non-finite entries");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol.norm) {
    throw Error(ErrorCode::kValidation,
                "pure state is not normalized (norm^2 = " +
                    std::to_string(norm2) + ")");
  }
}

DensityMatrix PureState::projector() const {
  ComplexMatrix p = amplitudes_ * amplitudes_.adjoint();
  p = 0.5 * (p + p.adjoint()).eval();
  return DensityMatrix(dim_a_, dim_b_, std::move(p));
}

ComplexMatrix PureState::coefficient_matrix() const {
  ComplexMatrix c(dim_a_, dim_b_);
  for (int i = 0; i < dim_a_; ++i)
    for (int j = 0; j < dim_b_; ++j) c(i, j) = amplitudes_(i * dim_b_ + j);
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index max_dimension) {
  const Eigen::Index p = b.rows();
  const Eigen::Index q = b.cols();
  const Eigen::Index rows = a.rows() * p;
  const Eigen::Index cols = a.cols() * q;
  if (rows > max_dimension || cols > max_dimension) {
    throw Error(ErrorCode::kDimension,
                "kron result " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " exceeds maximum dimension " +
                    std::to_string(max_dimension));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * p, j * q, p, q) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace_b(const DensityMatrix& rho) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const ComplexMatrix& x = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < n; ++j) out(i, k) += x(i * n + j, k * n + j);
  return out;
}

ComplexMatrix partial_trace_a(const DensityMatrix& rho) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const ComplexMatrix& x = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < m; ++i) out(j, l) += x(i * n + j, i * n + l);
  return out;
}

ComplexMatrix partial_transpose_a(const DensityMatrix& rho) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const ComplexMatrix& x = rho.matrix();
  ComplexMatrix out(rho.dim(), rho.dim());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l)
          out(i * n + j, k * n + l) = x(k * n + j, i * n + l);
  return out;
}

ComplexMatrix realign(const DensityMatrix& rho) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const ComplexMatrix& x = rho.matrix();
  ComplexMatrix out(m * m, n * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i * m + j, k * n + l) = x(i * n + k, j * n + l);
  return out;
}

DensityMatrix swap_subsystems(const DensityMatrix& rho) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const ComplexMatrix& x = rho.matrix();
  ComplexMatrix out(rho.dim(), rho.dim());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l)
          out(j * m + i, l * m + k) = x(i * n + j, k * n + l);
  return DensityMatrix(n, m, std::move(out));
}

RealVector singular_values(const ComplexMatrix& x) {
  if (x.size() == 0) return RealVector();
  if (!x.allFinite()) {
    throw Error(ErrorCode::kNumerical, "SVD input has non-finite entries");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  if (svd.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumerical, "singular value decomposition failed");
  }
  RealVector sv = svd.singularValues();
  if (!sv.allFinite()) {
    throw Error(ErrorCode::kNumerical, "SVD produced non-finite values");
  }
  return sv;
}

double trace_norm(const ComplexMatrix& x) { return singular_values(x).sum(); }

double hs_norm(const ComplexMatrix& x) { return x.norm(); }
double hs_norm(const RealMatrix& x) { return x.norm(); }

ComplexMatrix inv_sqrt_psd(const ComplexMatrix& m, double eps,
                           double* det_out, double hermitian_tol) {
  if (hermiticity_defect(m) > hermitian_tol) {
    throw Error(ErrorCode::kValidation, "inv_sqrt_psd requires a Hermitian matrix");
  }
  if (eps < 0.0) {
    throw Error(ErrorCode::kDomain, "inv_sqrt_psd regularization must be >= 0");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumerical, "eigendecomposition failed");
  }
  RealVector w = es.eigenvalues().array() + eps;
  if (w.minCoeff() <= 0.0) {
    throw Error(ErrorCode::kSingularReduction,
                "matrix is singular; (m + eps I)^{-1/2} undefined (min eigenvalue " +
                    std::to_string(w.minCoeff()) + ")");
  }
  if (det_out) *det_out = w.prod();
  const RealVector d = w.cwiseSqrt().cwiseInverse();
  const ComplexMatrix& u = es.eigenvectors();
  ComplexMatrix out = u * d.cast<Complex>().asDiagonal() * u.adjoint();
  return 0.5 * (out + out.adjoint());
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

double hermiticity_defect(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) return std::numeric_limits<double>::infinity();
  return (x - x.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian,
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumerical, "eigendecomposition failed");
  }
  return es.eigenvalues().minCoeff();
}

std::optional<PureState> as_pure_state(const DensityMatrix& rho, double tol) {
  if (std::abs(purity(rho) - 1.0) > tol) return std::nullopt;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumerical, "eigendecomposition failed");
  }
  ComplexVector v = es.eigenvectors().col(rho.dim() - 1);
  v.normalize();
  return PureState(rho.dim_a(), rho.dim_b(), std::move(v));
}

}  // namespace qsep
