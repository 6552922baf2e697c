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

#include "qsep/measures.hpp"

#include <algorithm>
#include <cmath>

#include "qsep/bloch.hpp"
#include "qsep/criteria.hpp"
#include "qsep/error.hpp"

namespace qsep {
namespace {

struct Dims {
  double m;  // smaller
  double n;  // larger
  bool swapped;
};

Dims ordered(int dim_a, int dim_b) {
  if (dim_a <= dim_b) return {double(dim_a), double(dim_b), false};
  return {double(dim_b), double(dim_a), true};
}

MeasureEstimate lower_bound(MeasureId id, BoundSource source, double raw,
                            double cap, bool swapped) {
  return MeasureEstimate{id, EstimateKind::kLowerBound, source,
                         std::clamp(raw, 0.0, cap), raw, swapped};
}

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw Error(ErrorCode::kDomain, "two-qubit measure called on a " +
                                        std::to_string(rho.dim_a()) + "x" +
                                        std::to_string(rho.dim_b()) + " state");
  }
}

// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y)
ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  ComplexMatrix sy(2, 2);
  sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  const ComplexMatrix yy = kron(sy, sy);
  return yy * rho.conjugate() * yy;
}

// Tangle / concurrence^2 from the squared HS norm of T:
// 8 / (MN(M+N)) (|T|^2_HS - MN(M-1)(N-1)/4).
double tangle_from_hs2(double t2, double m, double n) {
  return 8.0 / (m * n * (m + n)) * (t2 - m * n * (m - 1.0) * (n - 1.0) / 4.0);
}

}  // namespace

std::string_view to_string(MeasureId id) noexcept {
  switch (id) {
    case MeasureId::kConcurrence: return "CONCURRENCE";
    case MeasureId::kTangle: return "TANGLE";
    case MeasureId::kMnb: return "MNB";
  }
  return "UNKNOWN";
}

std::string_view to_string(EstimateKind kind) noexcept {
  switch (kind) {
    case EstimateKind::kExactPure: return "EXACT_PURE";
    case EstimateKind::kLowerBound: return "LOWER_BOUND";
    case EstimateKind::kUpperBound: return "UPPER_BOUND";
    case EstimateKind::kExactClosedForm: return "EXACT_CLOSED_FORM";
  }
  return "UNKNOWN";
}

std::string_view to_string(BoundSource source) noexcept {
  switch (source) {
    case BoundSource::kPureReduction: return "PURE_REDUCTION";
    case BoundSource::kPureBloch: return "PURE_BLOCH";
    case BoundSource::kPureCm: return "PURE_CM";
    case BoundSource::kCaf: return "CAF";
    case BoundSource::kCmTraceBound: return "CM_TRACE_BOUND";
    case BoundSource::kHsTangleBound: return "HS_TANGLE_BOUND";
    case BoundSource::kBlochUpper: return "BLOCH_UPPER";
    case BoundSource::kMnbDef: return "MNB_DEF";
    case BoundSource::kMnbCm: return "MNB_CM";
    case BoundSource::kWootters: return "WOOTTERS";
  }
  return "UNKNOWN";
}

double max_concurrence(int dim_a, int dim_b) {
  return std::sqrt(max_tangle(dim_a, dim_b));
}

double max_tangle(int dim_a, int dim_b) {
  const double m = std::min(dim_a, dim_b);
  return 2.0 * (m - 1.0) / m;
}

MeasureEstimate pure_concurrence(const PureState& psi) {
  const Dims d = ordered(psi.dim_a(), psi.dim_b());
  const DensityMatrix rho = psi.projector();
  const ComplexMatrix reduced = d.swapped ? partial_trace_a(rho) : partial_trace_b(rho);
  const double raw = std::sqrt(std::max(0.0, 2.0 * (1.0 - reduced.squaredNorm())));
  return MeasureEstimate{MeasureId::kConcurrence, EstimateKind::kExactPure,
                         BoundSource::kPureReduction, raw, raw, d.swapped};
}

MeasureEstimate pure_tangle_bloch(const PureState& psi) {
  const Dims d = ordered(psi.dim_a(), psi.dim_b());
  const DensityMatrix rho = psi.projector();
  const ComplexMatrix reduced = d.swapped ? partial_trace_a(rho) : partial_trace_b(rho);
  const double r = local_bloch_norm(reduced);
  const double raw = 2.0 * (d.m * d.m - d.m - 2.0 * r * r) / (d.m * d.m);
  return MeasureEstimate{MeasureId::kTangle, EstimateKind::kExactPure,
                         BoundSource::kPureBloch, raw, raw, d.swapped};
}

MeasureEstimate pure_tangle_cm(const PureState& psi) {
  const Dims d = ordered(psi.dim_a(), psi.dim_b());
  const double t2 = correlation_matrix(psi.projector()).squaredNorm();
  const double raw = tangle_from_hs2(t2, d.m, d.n);
  return MeasureEstimate{MeasureId::kTangle, EstimateKind::kExactPure,
                         BoundSource::kPureCm, raw, raw, d.swapped};
}

MeasureEstimate concurrence_lower_caf(const DensityMatrix& rho) {
  const Dims d = ordered(rho.dim_a(), rho.dim_b());
  const double best = std::max(trace_norm(partial_transpose_a(rho)),
                               trace_norm(realign(rho)));
  const double raw = std::sqrt(2.0 / (d.m * (d.m - 1.0))) * (best - 1.0);
  return lower_bound(MeasureId::kConcurrence, BoundSource::kCaf, raw,
                     max_concurrence(rho.dim_a(), rho.dim_b()), d.swapped);
}

MeasureEstimate concurrence_lower_cm(const DensityMatrix& rho) {
  const Dims d = ordered(rho.dim_a(), rho.dim_b());
  const double t_tr = trace_norm(correlation_matrix(rho).cast<Complex>());
  const double prefactor =
      std::sqrt(8.0 / (d.m * d.m * d.m * d.n * d.n * (d.m - 1.0)));
  const double raw = prefactor * (t_tr - cm_threshold(rho.dim_a(), rho.dim_b()));
  return lower_bound(MeasureId::kConcurrence, BoundSource::kCmTraceBound, raw,
                     max_concurrence(rho.dim_a(), rho.dim_b()), d.swapped);
}

MeasureEstimate tangle_lower_hs(const DensityMatrix& rho) {
  const Dims d = ordered(rho.dim_a(), rho.dim_b());
  const double raw = tangle_from_hs2(correlation_matrix(rho).squaredNorm(), d.m, d.n);
  return lower_bound(MeasureId::kTangle, BoundSource::kHsTangleBound, raw,
                     max_tangle(rho.dim_a(), rho.dim_b()), d.swapped);
}

MeasureEstimate tangle_upper(const DensityMatrix& rho) {
  const Dims d = ordered(rho.dim_a(), rho.dim_b());
  const double m = rho.dim_a();
  const double n = rho.dim_b();
  const double r = local_bloch_norm(partial_trace_b(rho));
  const double s = local_bloch_norm(partial_trace_a(rho));
  const double raw = 2.0 * std::min((m * m - m - 2.0 * r * r) / (m * m),
                                    (n * n - n - 2.0 * s * s) / (n * n));
  return MeasureEstimate{MeasureId::kTangle, EstimateKind::kUpperBound,
                         BoundSource::kBlochUpper, raw, raw, d.swapped};
}

MeasureEstimate mnb_measure(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const ComplexMatrix& x = rho.matrix();
  const double raw = purity(rho) - 1.0 + (x * spin_flip(x)).trace().real();
  return MeasureEstimate{MeasureId::kMnb, EstimateKind::kExactClosedForm,
                         BoundSource::kMnbDef, std::max(raw, 0.0), raw, false};
}

MeasureEstimate mnb_from_cm(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const double raw = 0.5 * (correlation_matrix(rho).squaredNorm() - 1.0);
  return MeasureEstimate{MeasureId::kMnb, EstimateKind::kExactClosedForm,
                         BoundSource::kMnbCm, std::max(raw, 0.0), raw, false};
}

MeasureEstimate wootters_concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho);
  // Eigenvalues of rho * flip(rho) equal those of sqrt(rho) flip(rho) sqrt(rho),
  // which is Hermitian PSD.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumerical, "eigendecomposition failed");
  }
  const RealVector w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix root =
      es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  ComplexMatrix h = root * spin_flip(rho.matrix()) * root;
  h = 0.5 * (h + h.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> hs(h, Eigen::EigenvaluesOnly);
  if (hs.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumerical, "eigendecomposition failed");
  }
  RealVector mu = hs.eigenvalues().cwiseMax(0.0).cwiseSqrt();  // ascending
  const double raw = mu(3) - mu(2) - mu(1) - mu(0);
  return MeasureEstimate{MeasureId::kConcurrence, EstimateKind::kExactClosedForm,
                         BoundSource::kWootters, std::max(raw, 0.0), raw, false};
}

std::vector<MeasureEstimate> all_estimates(const DensityMatrix& rho) {
  std::vector<MeasureEstimate> out;
  if (const auto psi = as_pure_state(rho)) {
    out.push_back(pure_concurrence(*psi));
    out.push_back(pure_tangle_bloch(*psi));
    out.push_back(pure_tangle_cm(*psi));
  }
  out.push_back(concurrence_lower_caf(rho));
  out.push_back(concurrence_lower_cm(rho));
  out.push_back(tangle_lower_hs(rho));
  out.push_back(tangle_upper(rho));
  if (rho.dim_a() == 2 && rho.dim_b() == 2) {
    out.push_back(mnb_measure(rho));
    out.push_back(mnb_from_cm(rho));
    out.push_back(wootters_concurrence(rho));
  }
  return out;
}

}  // namespace qsep
