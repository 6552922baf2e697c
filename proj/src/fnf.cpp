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

#include "qsep/fnf.hpp"

#include <cmath>
#include <string>

#include "qsep/bloch.hpp"
#include "qsep/error.hpp"

namespace qsep {
namespace {

constexpr double kSingularEigenvalue = 1e-14;
constexpr double kMinSingularValue = 1e-12;

// Hermitian part, renormalized. Filtering is exact up to rounding; this keeps
// the iterate inside DensityMatrix's validation tolerances.
ComplexMatrix tidy(ComplexMatrix x) {
  x = 0.5 * (x + x.adjoint()).eval();
  const double tr = x.trace().real();
  if (!(tr > 0.0) || !std::isfinite(tr)) {
    throw Error(ErrorCode::kSingularFilter,
                "filtered operator has vanishing trace " + std::to_string(tr));
  }
  return x / tr;
}

// (G (x) I) X (G (x) I)^dagger acting blockwise; X is MN x MN.
ComplexMatrix filter_a(const ComplexMatrix& x, const ComplexMatrix& g, int n) {
  const auto m = g.rows();
  ComplexMatrix tmp = ComplexMatrix::Zero(x.rows(), x.cols());
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      if (g(a, b) != Complex(0.0, 0.0))
        tmp.middleRows(a * n, n) += g(a, b) * x.middleRows(b * n, n);
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      if (g(a, b) != Complex(0.0, 0.0))
        out.middleCols(a * n, n) += std::conj(g(a, b)) * tmp.middleCols(b * n, n);
  return out;
}

// (I (x) G) X (I (x) G)^dagger.
ComplexMatrix filter_b(const ComplexMatrix& x, const ComplexMatrix& g, int m) {
  const auto n = g.rows();
  ComplexMatrix out(x.rows(), x.cols());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out.block(a * n, b * n, n, n) = g * x.block(a * n, b * n, n, n) * g.adjoint();
  return out;
}

ComplexMatrix whitening_filter(const ComplexMatrix& reduced, double eps) {
  if (eps == 0.0) {
    const double lo = min_eigenvalue(reduced);
    if (lo <= kSingularEigenvalue * reduced.trace().real()) {
      throw Error(ErrorCode::kSingularReduction,
                  "reduced state is singular (min eigenvalue " +
                      std::to_string(lo) +
                      "); rerun the filter normal form with eps > 0");
    }
  }
  double det = 0.0;
  const ComplexMatrix inv_sqrt = inv_sqrt_psd(reduced, eps, &det, 1e-10);
  const double d = static_cast<double>(reduced.rows());
  return std::pow(det, 1.0 / (2.0 * d)) * inv_sqrt;
}

// det(F) = 1 up to rounding; rescale by the principal d-th root of det.
ComplexMatrix unit_determinant(const ComplexMatrix& f) {
  const Complex det = f.determinant();
  if (std::abs(det) == 0.0 || !std::isfinite(std::abs(det))) {
    throw Error(ErrorCode::kSingularFilter, "filter became singular");
  }
  return f / std::pow(det, 1.0 / static_cast<double>(f.rows()));
}

}  // namespace

DensityMatrix apply_filter(const DensityMatrix& rho, const ComplexMatrix& f_a,
                           const ComplexMatrix& f_b) {
  if (f_a.rows() != rho.dim_a() || f_a.cols() != rho.dim_a() ||
      f_b.rows() != rho.dim_b() || f_b.cols() != rho.dim_b()) {
    throw Error(ErrorCode::kDimension, "filter shapes do not match the state");
  }
  if (singular_values(f_a).minCoeff() <= kMinSingularValue ||
      singular_values(f_b).minCoeff() <= kMinSingularValue) {
    throw Error(ErrorCode::kSingularFilter, "filter is not invertible");
  }
  ComplexMatrix x = filter_a(rho.matrix(), f_a, rho.dim_b());
  x = filter_b(x, f_b, rho.dim_a());
  return DensityMatrix(rho.dim_a(), rho.dim_b(), tidy(std::move(x)));
}

double local_residual(const DensityMatrix& rho) {
  return std::max(local_bloch_norm(partial_trace_b(rho)),
                  local_bloch_norm(partial_trace_a(rho)));
}

FilterResult filter_normal_form(const DensityMatrix& rho, const FnfOptions& opts) {
  if (!(opts.tol > 0.0) || opts.max_iter < 0 || opts.eps < 0.0) {
    throw Error(ErrorCode::kDomain, "FNF needs tol > 0, max_iter >= 0, eps >= 0");
  }
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  ComplexMatrix f_a = ComplexMatrix::Identity(m, m);
  ComplexMatrix f_b = ComplexMatrix::Identity(n, n);

  double residual = local_residual(rho);
  if (residual <= opts.tol) {
    return FilterResult{rho, f_a, f_b, 0, true, residual};
  }

  ComplexMatrix x = rho.matrix();
  int iterations = 0;
  bool converged = false;
  while (iterations < opts.max_iter) {
    ++iterations;
    const DensityMatrix current_a(m, n, x, Tolerances{1e-10, 1e-10, -1e-8, 1e-12});
    const ComplexMatrix g_a = whitening_filter(partial_trace_b(current_a), opts.eps);
    x = tidy(filter_a(x, g_a, n));
    f_a = unit_determinant(g_a * f_a);

    const DensityMatrix current_b(m, n, x, Tolerances{1e-10, 1e-10, -1e-8, 1e-12});
    const ComplexMatrix g_b = whitening_filter(partial_trace_a(current_b), opts.eps);
    x = tidy(filter_b(x, g_b, m));
    f_b = unit_determinant(g_b * f_b);

    const DensityMatrix current(m, n, x, Tolerances{1e-10, 1e-10, -1e-8, 1e-12});
    residual = local_residual(current);
    if (residual <= opts.tol) {
      converged = true;
      break;
    }
  }

  DensityMatrix rho_tilde = apply_filter(rho, f_a, f_b);
  residual = local_residual(rho_tilde);
  converged = converged && residual <= opts.tol;
  return FilterResult{std::move(rho_tilde), std::move(f_a), std::move(f_b),
                      iterations, converged, residual};
}

FnfInvariantReport fnf_invariant_check(const DensityMatrix& rho,
                                       const FilterResult& result) {
  FnfInvariantReport rep;
  rep.ppt_value_before = trace_norm(partial_transpose_a(rho));
  rep.ppt_value_after = trace_norm(partial_transpose_a(result.rho_tilde));
  constexpr double kPptTol = 1e-8;
  const bool ppt_before = std::abs(rep.ppt_value_before - 1.0) <= kPptTol;
  const bool ppt_after = std::abs(rep.ppt_value_after - 1.0) <= kPptTol;
  rep.ppt_preserved = ppt_before == ppt_after;

  const DensityMatrix again = apply_filter(rho, result.f_a, result.f_b);
  rep.reconstruction_residual =
      (again.matrix() - result.rho_tilde.matrix()).cwiseAbs().maxCoeff();

  const int m = rho.dim_a();
  const int n = rho.dim_b();
  rep.reduction_residual_a =
      (partial_trace_b(result.rho_tilde) - ComplexMatrix::Identity(m, m) / double(m)).norm();
  rep.reduction_residual_b =
      (partial_trace_a(result.rho_tilde) - ComplexMatrix::Identity(n, n) / double(n)).norm();
  rep.det_defect_a = std::abs(result.f_a.determinant() - Complex(1.0, 0.0));
  rep.det_defect_b = std::abs(result.f_b.determinant() - Complex(1.0, 0.0));
  return rep;
}

}  // namespace qsep
