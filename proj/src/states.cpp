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

#include "qsep/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qsep/error.hpp"

namespace qsep {
namespace {

ComplexVector basis_vector(int d, int i) {
  ComplexVector v = ComplexVector::Zero(d);
  v(i) = 1.0;
  return v;
}

ComplexVector kron_vec(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexVector random_vector(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v.normalized();
}

std::vector<double> simplex_weights(int k, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(static_cast<std::size_t>(k));
  double sum = 0.0;
  for (auto& x : w) sum += (x = expo(rng));
  for (auto& x : w) x /= sum;
  return w;
}

void require_positive_dims(int m, int n) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::kDomain, "subsystem dimensions must be positive");
  }
}

DensityMatrix finish(int m, int n, ComplexMatrix x) {
  x = 0.5 * (x + x.adjoint()).eval();
  x /= x.trace().real();
  return DensityMatrix(m, n, std::move(x));
}

}  // namespace

UpbFamily gentiles2_upb(int m, int n) {
  if (m < 3 || n <= 3 || m > n) {
    throw Error(ErrorCode::kDomain,
                "GenTiles2 needs M >= 3, N > 3, M <= N; got " +
                    std::to_string(m) + "x" + std::to_string(n));
  }
  UpbFamily family;
  family.dim_a = m;
  family.dim_b = n;
  family.vectors.reserve(static_cast<std::size_t>(1 + m + m * (n - 3)));

  const int mn = m * n;
  family.vectors.emplace_back(
      m, n, ComplexVector::Constant(mn, Complex(1.0 / std::sqrt(double(mn)), 0.0)));

  for (int j = 0; j < m; ++j) {
    ComplexVector a = (basis_vector(m, j) - basis_vector(m, (j + 1) % m)) / std::sqrt(2.0);
    family.vectors.emplace_back(m, n, kron_vec(a, basis_vector(n, j)));
  }

  const double period = n - 2;
  for (int j = 0; j < m; ++j) {
    for (int k = 1; k <= n - 3; ++k) {
      ComplexVector b = ComplexVector::Zero(n);
      for (int l = 0; l <= m - 3; ++l)
        b((l + j + 1) % m) += std::polar(1.0, 2.0 * std::numbers::pi * l * k / period);
      for (int l = m - 2; l <= n - 3; ++l)
        b(l + 2) += std::polar(1.0, 2.0 * std::numbers::pi * l * k / period);
      b /= std::sqrt(period);
      family.vectors.emplace_back(m, n, kron_vec(basis_vector(m, j), b));
    }
  }
  return family;
}

DensityMatrix gentiles2_state(int m, int n) {
  const UpbFamily upb = gentiles2_upb(m, n);
  const int mn = m * n;
  ComplexMatrix x = ComplexMatrix::Identity(mn, mn);
  for (const auto& v : upb.vectors) x -= v.amplitudes() * v.amplitudes().adjoint();
  x /= static_cast<double>(2 * m - 1);
  x = 0.5 * (x + x.adjoint()).eval();
  return DensityMatrix(m, n, std::move(x));
}

PureState max_entangled(int d) {
  if (d < 2) throw Error(ErrorCode::kDomain, "maximally entangled state needs d >= 2");
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(double(d));
  return PureState(d, d, std::move(v));
}

NoiseMixture white_noise_mix(const DensityMatrix& base, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kDomain, "mixing weight p must lie in [0, 1]");
  }
  const int d = base.dim();
  ComplexMatrix x = p * base.matrix() +
                    ((1.0 - p) / d) * ComplexMatrix::Identity(d, d);
  DensityMatrix mixed(base.dim_a(), base.dim_b(), std::move(x));
  return NoiseMixture{base, p, std::move(mixed)};
}

PureState random_pure(int m, int n, std::uint64_t seed) {
  require_positive_dims(m, n);
  std::mt19937_64 rng(seed);
  return PureState(m, n, random_vector(m * n, rng));
}

DensityMatrix random_mixed(int m, int n, int rank, std::uint64_t seed) {
  require_positive_dims(m, n);
  if (rank < 1) throw Error(ErrorCode::kDomain, "rank must be >= 1");
  std::mt19937_64 rng(seed);
  const auto w = simplex_weights(rank, rng);
  const int d = m * n;
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < rank; ++k) {
    const ComplexVector v = random_vector(d, rng);
    x += w[k] * (v * v.adjoint());
  }
  return finish(m, n, std::move(x));
}

DensityMatrix random_separable(int m, int n, int terms, std::uint64_t seed) {
  require_positive_dims(m, n);
  if (terms < 1) throw Error(ErrorCode::kDomain, "terms must be >= 1");
  std::mt19937_64 rng(seed);
  const auto w = simplex_weights(terms, rng);
  const int d = m * n;
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < terms; ++k) {
    const ComplexVector a = random_vector(m, rng);
    const ComplexVector b = random_vector(n, rng);
    const ComplexVector v = kron_vec(a, b);
    x += w[k] * (v * v.adjoint());
  }
  return finish(m, n, std::move(x));
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorCode::kDomain, "unitary dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

}  // namespace qsep
