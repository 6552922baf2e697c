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

#include <cmath>

#include <gtest/gtest.h>

#include "qsep/bloch.hpp"
#include "qsep/criteria.hpp"
#include "qsep/error.hpp"
#include "qsep/fnf.hpp"
#include "qsep/states.hpp"
#include "test_support.hpp"

namespace qsep {
namespace {

using C = Complex;

ComplexMatrix reference_filter_a() {
  ComplexMatrix f(3, 3);
  f << C(-0.2586, -0.4251), C(-0.2586, -0.4251), C(-0.2586, -0.4251),
      C(0.3421, -0.3842), C(0.4402, 0.2817), C(-0.7824, 0.1025),
      C(0.2784, -0.6568), C(-0.5774, 0.4086), C(0.2990, 0.2482);
  return f;
}

ComplexMatrix reference_filter_b() {
  ComplexMatrix f(4, 4);
  f << C(-0.3118, -0.3092), C(-0.3118, -0.3092), C(-0.3118, -0.3092), C(-0.3118, -0.3092),
      C(0.5499, -0.2805), C(0.6414, -0.0813), C(-0.3307, 0.0334), C(-0.4303, 0.1642),
      C(-0.3932, -0.1066), C(0.3198, -0.3909), C(-0.0427, -0.7619), C(0.0580, 0.6297),
      C(0.5358, 0.3605), C(0.1113, -0.5279), C(0.5169, -0.0640), C(-0.5820, 0.1157);
  return f;
}

TEST(ApplyFilterTest, IdentityFilters) {
  const DensityMatrix rho = random_mixed(3, 4, 5, 2);
  const DensityMatrix out =
      apply_filter(rho, ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(4, 4));
  EXPECT_LE((out.matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ApplyFilterTest, UnitaryFiltersPreserveSpectrumAndCm) {
  const DensityMatrix rho = random_mixed(3, 3, 4, 8);
  const DensityMatrix out = apply_filter(rho, random_unitary(3, 1), random_unitary(3, 2));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> a(rho.matrix()), b(out.matrix());
  EXPECT_LE((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(cm_report(rho).value, cm_report(out).value, 1e-9);
}

TEST(ApplyFilterTest, ReferenceFiltersReachNormalForm) {
  const DensityMatrix out =
      apply_filter(gentiles2_state(3, 4), reference_filter_a(), reference_filter_b());
  EXPECT_LE(local_residual(out), 1e-3);
}

TEST(ApplyFilterTest, Errors) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2, 2);
  ComplexMatrix singular = ComplexMatrix::Identity(2, 2);
  singular(1, 1) = 0.0;
  try {
    apply_filter(rho, singular, ComplexMatrix::Identity(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularFilter);
  }
  EXPECT_THROW(apply_filter(rho, ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(2, 2)),
               Error);
}

TEST(FilterNormalFormTest, MaximallyMixedIsFixedPoint) {
  const FilterResult r = filter_normal_form(DensityMatrix::maximally_mixed(3, 4));
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 1);
  EXPECT_LE((r.f_a - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((r.f_b - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FilterNormalFormTest, GenTiles2Norms) {
  const DensityMatrix rho = gentiles2_state(3, 4);
  const FilterResult r = filter_normal_form(rho, {.tol = 1e-9, .max_iter = 10000, .eps = 1e-10});
  ASSERT_TRUE(r.converged);
  EXPECT_LE(r.residual, 1e-9);
  EXPECT_NEAR(cm_report(r.rho_tilde).value, 4.5751, 5e-4);
  EXPECT_NEAR(ccnr_report(r.rho_tilde).value, 1.0512, 5e-4);
  EXPECT_LE(std::abs(r.f_a.determinant() - C(1.0)), 1e-8);
  EXPECT_LE(std::abs(r.f_b.determinant() - C(1.0)), 1e-8);
  EXPECT_LE((apply_filter(rho, r.f_a, r.f_b).matrix() - r.rho_tilde.matrix()).cwiseAbs().maxCoeff(),
            1e-9);
}

TEST(FilterNormalFormTest, NormsMatchReferenceFilters) {
  const DensityMatrix rho = gentiles2_state(3, 4);
  const FilterResult r = filter_normal_form(rho, {.eps = 1e-10});
  const DensityMatrix reference = apply_filter(rho, reference_filter_a(), reference_filter_b());
  EXPECT_NEAR(cm_report(r.rho_tilde).value, cm_report(reference).value, 5e-3);
  EXPECT_NEAR(ccnr_report(r.rho_tilde).value, ccnr_report(reference).value, 5e-3);
}

TEST(FilterNormalFormTest, RandomFullRankStatesConverge) {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DensityMatrix rho = random_mixed(m, n, m * n, 100 * m + 10 * n + seed);
        const FilterResult r = filter_normal_form(rho);
        ASSERT_TRUE(r.converged) << m << "x" << n << " seed " << seed;
        EXPECT_LE(r.residual, 1e-9);
        const FnfInvariantReport inv = fnf_invariant_check(rho, r);
        EXPECT_LE(inv.reduction_residual_a, 1e-9);
        EXPECT_LE(inv.reduction_residual_b, 1e-9);
        EXPECT_LE(inv.reconstruction_residual, 1e-9);
        EXPECT_LE(inv.det_defect_a, 1e-8);
        EXPECT_LE(inv.det_defect_b, 1e-8);
      }
    }
  }
}

TEST(FilterNormalFormTest, Idempotent) {
  const DensityMatrix rho = random_mixed(3, 4, 12, 77);
  const FilterResult first = filter_normal_form(rho);
  const FilterResult second = filter_normal_form(first.rho_tilde);
  EXPECT_TRUE(second.converged);
  EXPECT_LE(second.iterations, 2);
  EXPECT_LE((second.f_a * second.f_a.adjoint() - ComplexMatrix::Identity(3, 3))
                .cwiseAbs()
                .maxCoeff(),
            1e-6);
  EXPECT_LE((second.f_b * second.f_b.adjoint() - ComplexMatrix::Identity(4, 4))
                .cwiseAbs()
                .maxCoeff(),
            1e-6);
  EXPECT_NEAR(cm_report(first.rho_tilde).value, cm_report(second.rho_tilde).value, 1e-8);
}

TEST(FilterNormalFormTest, NormsAreLocalUnitaryInvariant) {
  const DensityMatrix rho = random_mixed(3, 3, 9, 5);
  const DensityMatrix rotated = testing::local_unitary(rho, 19);
  const FilterResult a = filter_normal_form(rho);
  const FilterResult b = filter_normal_form(rotated);
  EXPECT_NEAR(cm_report(a.rho_tilde).value, cm_report(b.rho_tilde).value, 1e-6);
  EXPECT_NEAR(ccnr_report(a.rho_tilde).value, ccnr_report(b.rho_tilde).value, 1e-6);
}

TEST(FilterNormalFormTest, InvariantCheckOnGenTiles2) {
  const DensityMatrix rho = gentiles2_state(3, 4);
  const FnfInvariantReport inv = fnf_invariant_check(rho, filter_normal_form(rho, {.eps = 1e-10}));
  EXPECT_TRUE(inv.ppt_preserved);
  EXPECT_NEAR(inv.ppt_value_before, 1.0, 1e-8);
  EXPECT_NEAR(inv.ppt_value_after, 1.0, 1e-8);
}

TEST(FilterNormalFormTest, SeparableStaysUndetected) {
  const DensityMatrix rho = random_separable(3, 3, 30, 4);
  for (const auto& r : full_report(filter_normal_form(rho).rho_tilde)) {
    EXPECT_FALSE(r.entangled) << to_string(r.id);
  }
}

TEST(FilterNormalFormTest, SingularReductionNeedsEps) {
  const DensityMatrix product = testing::product_zero(2, 2).projector();
  try {
    filter_normal_form(product);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularReduction);
  }
  EXPECT_THROW(filter_normal_form(gentiles2_state(3, 4), {.eps = -1.0}), Error);
}

TEST(FilterNormalFormTest, IterationCapReportsNotConverged) {
  const FilterResult r =
      filter_normal_form(gentiles2_state(3, 4), {.tol = 1e-9, .max_iter = 1, .eps = 1e-10});
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_GT(r.residual, 1e-9);
}

}  // namespace
}  // namespace qsep
