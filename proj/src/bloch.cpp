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

#include "qsep/bloch.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "qsep/error.hpp"

namespace qsep {
namespace {

constexpr double kImagResidueLimit = 1e-8;

// Tr(A * B) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.array() * b.transpose().array()).sum();
}

double checked_real(Complex z, const char* what) {
  if (std::abs(z.imag()) > kImagResidueLimit) {
    throw Error(ErrorCode::kNumerical,
                std::string("imaginary residue ") + std::to_string(z.imag()) +
                    " in Bloch coefficient " + what +
                    "; input is not Hermitian");
  }
  return z.real();
}

// Blocks C_i = sum_{a,b} (l_i)_{ba} rho_{ab}, where rho_{ab} is the N x N
// block at block-row a, block-column b. Then Tr(rho (l_i (x) X)) = Tr(C_i X).
std::vector<ComplexMatrix> contract_a(const DensityMatrix& rho,
                                      const GeneratorBasis& basis_a) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const ComplexMatrix& x = rho.matrix();
  std::vector<ComplexMatrix> out;
  out.reserve(basis_a.generators.size());
  for (const auto& g : basis_a.generators) {
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (g(b, a) != Complex(0.0, 0.0)) c += g(b, a) * x.block(a * n, b * n, n, n);
    out.push_back(std::move(c));
  }
  return out;
}

RealMatrix correlations_from_blocks(const std::vector<ComplexMatrix>& blocks,
                                    const GeneratorBasis& basis_b, double scale) {
  const auto rows = static_cast<Eigen::Index>(blocks.size());
  const auto cols = static_cast<Eigen::Index>(basis_b.generators.size());
  RealMatrix t(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      t(i, j) = scale * checked_real(trace_of_product(blocks[i], basis_b.generators[j]), "t");
  return t;
}

}  // namespace

GeneratorBasis su_generators(int d) {
  if (d < 2) {
    throw Error(ErrorCode::kDomain,
                "SU(d) generators need d >= 2, got " + std::to_string(d));
  }
  GeneratorBasis basis;
  basis.dim = d;
  basis.generators.reserve(static_cast<std::size_t>(d) * d - 1);
  const Complex i_unit(0.0, 1.0);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix u = ComplexMatrix::Zero(d, d);
      u(j, k) = 1.0;
      u(k, j) = 1.0;
      basis.generators.push_back(std::move(u));
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix v = ComplexMatrix::Zero(d, d);
      v(j, k) = -i_unit;
      v(k, j) = i_unit;
      basis.generators.push_back(std::move(v));
    }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix w = ComplexMatrix::Zero(d, d);
    const double c = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int m = 0; m < l; ++m) w(m, m) = c;
    w(l, l) = -c * l;
    basis.generators.push_back(std::move(w));
  }
  return basis;
}

std::shared_ptr<const GeneratorBasis> cached_su_generators(int d) {
  static std::shared_mutex mutex;
  static std::map<int, std::shared_ptr<const GeneratorBasis>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const GeneratorBasis>(su_generators(d));
  std::unique_lock lock(mutex);
  return cache.try_emplace(d, std::move(basis)).first->second;
}

RealMatrix correlation_matrix(const DensityMatrix& rho) {
  const auto basis_a = cached_su_generators(rho.dim_a());
  const auto basis_b = cached_su_generators(rho.dim_b());
  const double scale = rho.dim_a() * rho.dim_b() / 4.0;
  return correlations_from_blocks(contract_a(rho, *basis_a), *basis_b, scale);
}

BlochDecomposition decompose(const DensityMatrix& rho) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const auto basis_a = cached_su_generators(m);
  const auto basis_b = cached_su_generators(n);

  BlochDecomposition out;
  out.dim_a = m;
  out.dim_b = n;

  const ComplexMatrix rho_a = partial_trace_b(rho);
  const ComplexMatrix rho_b = partial_trace_a(rho);
  out.r.resize(static_cast<Eigen::Index>(basis_a->generators.size()));
  for (Eigen::Index i = 0; i < out.r.size(); ++i)
    out.r(i) = 0.5 * m * checked_real(trace_of_product(rho_a, basis_a->generators[i]), "r");
  out.s.resize(static_cast<Eigen::Index>(basis_b->generators.size()));
  for (Eigen::Index j = 0; j < out.s.size(); ++j)
    out.s(j) = 0.5 * n * checked_real(trace_of_product(rho_b, basis_b->generators[j]), "s");

  out.t = correlations_from_blocks(contract_a(rho, *basis_a), *basis_b, m * n / 4.0);
  return out;
}

DensityMatrix reconstruct(const BlochDecomposition& b, bool validate_psd) {
  const int m = b.dim_a;
  const int n = b.dim_b;
  if (m < 2 || n < 2) {
    throw Error(ErrorCode::kDimension, "Bloch data needs dimensions >= 2");
  }
  const Eigen::Index ga = static_cast<Eigen::Index>(m) * m - 1;
  const Eigen::Index gb = static_cast<Eigen::Index>(n) * n - 1;
  if (b.r.size() != ga || b.s.size() != gb || b.t.rows() != ga || b.t.cols() != gb) {
    throw Error(ErrorCode::kDimension, "Bloch data sizes inconsistent with dimensions");
  }
  const auto basis_a = cached_su_generators(m);
  const auto basis_b = cached_su_generators(n);
  const ComplexMatrix id_a = ComplexMatrix::Identity(m, m);
  const ComplexMatrix id_b = ComplexMatrix::Identity(n, n);

  // Local parts first, then correlations summed as sum_i l_i (x) (sum_j t_ij l_j).
  ComplexMatrix local_a = id_a;
  for (Eigen::Index i = 0; i < ga; ++i) local_a += b.r(i) * basis_a->generators[i];
  ComplexMatrix local_b = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < gb; ++j) local_b += b.s(j) * basis_b->generators[j];

  ComplexMatrix x = kron(local_a, id_b) + kron(id_a, local_b);
  for (Eigen::Index i = 0; i < ga; ++i) {
    ComplexMatrix mixed = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < gb; ++j) mixed += b.t(i, j) * basis_b->generators[j];
    x += kron(basis_a->generators[i], mixed);
  }
  x /= static_cast<double>(m * n);
  x = 0.5 * (x + x.adjoint()).eval();

  Tolerances tol;
  if (!validate_psd) tol.psd = -std::numeric_limits<double>::infinity();
  try {
    return DensityMatrix(m, n, std::move(x), tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kValidation) {
      throw Error(ErrorCode::kValidation,
                  std::string("reconstructed operator is not a state: ") + e.what());
    }
    throw;
  }
}

double local_bloch_norm(const ComplexMatrix& reduced) {
  const auto d = reduced.rows();
  const ComplexMatrix centered =
      reduced - ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  return static_cast<double>(d) / std::sqrt(2.0) * centered.norm();
}

PurityResiduals purity_relations_check(const PureState& psi) {
  const DensityMatrix rho = psi.projector();
  const BlochDecomposition b = decompose(rho);
  const double m = rho.dim_a();
  const double n = rho.dim_b();
  const double r2 = b.r.squaredNorm();
  const double s2 = b.s.squaredNorm();
  const double t2 = b.t.squaredNorm();
  const double tr_a2 = partial_trace_b(rho).squaredNorm();
  const double lhs_a = (m + 2.0 * r2) / (m * m);
  const double lhs_b = (n + 2.0 * s2) / (n * n);
  return PurityResiduals{
      std::abs(tr_a2 - lhs_a),
      std::abs(lhs_a - lhs_b),
      std::abs(n * r2 + m * s2 + 2.0 * t2 - m * n * (m * n - 1.0) / 2.0),
  };
}

}  // namespace qsep
