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

#include "oracles.hpp"
#include "qsep/bloch.hpp"
#include "qsep/criteria.hpp"
#include "qsep/states.hpp"
#include "test_support.hpp"

namespace qsep {
namespace {

using testing::bell_state;

TEST(ThresholdTest, ClosedForm) {
  EXPECT_NEAR(cm_threshold(2, 2), 1.0, 1e-15);
  EXPECT_NEAR(cm_threshold(3, 4), std::sqrt(18.0), 1e-14);
  EXPECT_NEAR(cm_threshold(3, 3), 3.0, 1e-14);
  EXPECT_EQ(cm_threshold(4, 3), cm_threshold(3, 4));
}

TEST(ReportTest, MarginAndVerdict) {
  const CriterionReport r = make_report(CriterionId::kCcnr, 1.5, 1.0);
  EXPECT_DOUBLE_EQ(r.margin, 0.5);
  EXPECT_TRUE(r.entangled);
  EXPECT_FALSE(make_report(CriterionId::kCcnr, 1.0 + 5e-10, 1.0).entangled);
  EXPECT_TRUE(make_report(CriterionId::kCcnr, 1.0 + 5e-10, 1.0, 1e-10).entangled);
}

TEST(PptTest, Examples) {
  const CriterionReport sep = ppt_report(random_separable(3, 3, 8, 1));
  EXPECT_NEAR(sep.value, 1.0, 1e-10);
  EXPECT_FALSE(sep.entangled);

  const CriterionReport bell = ppt_report(bell_state());
  EXPECT_NEAR(bell.value, 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(bell.threshold, 1.0);
  EXPECT_TRUE(bell.entangled);

  const CriterionReport gt2 = ppt_report(gentiles2_state(3, 4));
  EXPECT_NEAR(gt2.value, 1.0, 1e-8);
  EXPECT_FALSE(gt2.entangled);
}

TEST(CcnrTest, Examples) {
  const CriterionReport gt2 = ccnr_report(gentiles2_state(3, 4));
  EXPECT_NEAR(gt2.value, 1.0315, 5e-4);
  EXPECT_TRUE(gt2.entangled);

  const CriterionReport mixed = ccnr_report(DensityMatrix::maximally_mixed(3, 4));
  EXPECT_NEAR(mixed.value, 1.0 / std::sqrt(12.0), 1e-13);
  EXPECT_FALSE(mixed.entangled);
}

TEST(CmTest, Examples) {
  const CriterionReport gt2 = cm_report(gentiles2_state(3, 4));
  EXPECT_NEAR(gt2.value, 4.3428, 5e-4);
  EXPECT_NEAR(gt2.threshold, std::sqrt(18.0), 1e-14);
  EXPECT_TRUE(gt2.entangled);

  const CriterionReport bell = cm_report(bell_state());
  EXPECT_NEAR(bell.value, 3.0, 1e-12);
  EXPECT_NEAR(bell.threshold, 1.0, 1e-15);
  EXPECT_TRUE(bell.entangled);
}

TEST(CmHsTest, Examples) {
  const CriterionReport bell = cm_hs_report(bell_state());
  EXPECT_NEAR(bell.value, std::sqrt(3.0), 1e-12);
  EXPECT_TRUE(bell.entangled);

  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 4}}) {
    const CriterionReport prod = cm_hs_report(testing::product_zero(m, n).projector());
    EXPECT_NEAR(prod.value, std::sqrt(double(m * (m - 1) * n * (n - 1))) / 2.0, 1e-12);
    EXPECT_NEAR(prod.margin, 0.0, 1e-12);
    EXPECT_FALSE(prod.entangled);
  }
}

TEST(FullReportTest, GenTilesVerdicts) {
  const auto reports = full_report(gentiles2_state(3, 4));
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0].id, CriterionId::kPpt);
  EXPECT_EQ(reports[1].id, CriterionId::kCcnr);
  EXPECT_EQ(reports[2].id, CriterionId::kCmTrace);
  EXPECT_EQ(reports[3].id, CriterionId::kCmHs);
  EXPECT_FALSE(reports[0].entangled);
  EXPECT_TRUE(reports[1].entangled);
  EXPECT_TRUE(reports[2].entangled);
  EXPECT_TRUE(std::isfinite(reports[3].value));
  for (const auto& r : reports) EXPECT_FALSE(r.error.has_value());
}

TEST(FullReportTest, SeparableMixtureUndetected) {
  for (const auto& r : full_report(random_separable(3, 4, 12, 99))) {
    EXPECT_FALSE(r.entangled) << to_string(r.id);
  }
}

TEST(FullReportTest, CriterionNamesRoundTrip) {
  for (CriterionId id : kAllCriteria) EXPECT_EQ(parse_criterion(to_string(id)), id);
  EXPECT_EQ(parse_criterion("cm"), CriterionId::kCmTrace);
  EXPECT_FALSE(parse_criterion("bogus").has_value());
}

TEST(SoundnessTest, NoFalsePositivesOnSeparableStates) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int m = 2 + seed % 3, n = 2 + (seed / 3) % 3;
    const DensityMatrix rho = random_separable(m, n, 1 + seed % 20, seed + 5000);
    const auto reports = full_report(rho);
    for (const auto& r : reports) {
      ASSERT_FALSE(r.entangled) << to_string(r.id) << " seed " << seed;
    }
    ASSERT_LE(reports[3].value, reports[2].value + 1e-12);
  }
}

TEST(MonotoneTest, HsValueNeverExceedsTraceValue) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int m = 2 + seed % 3, n = 2 + (seed / 3) % 3;
    const DensityMatrix rho = random_mixed(m, n, 1 + seed % 4, seed);
    EXPECT_LE(cm_hs_report(rho).value, cm_report(rho).value + 1e-12);
  }
}

TEST(DisorderedSubsystemsTest, RealignmentIdentity) {
  // Bloch data with r = s = 0 and a small random T; reconstruct and check
  // ||R||_tr = 1/sqrt(MN) + (2/MN) ||T||_tr.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int m = 2 + seed % 3, n = 2 + (seed / 3) % 3;
    BlochDecomposition b{m, n, RealVector::Zero(m * m - 1), RealVector::Zero(n * n - 1),
                         RealMatrix::Zero(m * m - 1, n * n - 1)};
    std::srand(static_cast<unsigned>(seed));
    b.t = RealMatrix::Random(m * m - 1, n * n - 1) * 0.05;
    const DensityMatrix rho = reconstruct(b, true);
    const double lhs = ccnr_report(rho).value;
    const double t_tr = cm_report(rho).value;
    EXPECT_NEAR(lhs, 1.0 / std::sqrt(double(m * n)) + 2.0 / (m * n) * t_tr, 1e-9);
  }
}

TEST(LocalUnitaryTest, AllValuesInvariant) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int m = 2 + seed % 3, n = 2 + (seed / 3) % 3;
    const DensityMatrix rho = random_mixed(m, n, 2, seed);
    const auto before = full_report(rho);
    const auto after = full_report(testing::local_unitary(rho, seed + 11));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(before[k].value, after[k].value, 1e-9);
  }
}

TEST(SymmetryTest, ValuesInvariantUnderSubsystemSwap) {
  const DensityMatrix rho = random_mixed(2, 4, 3, 21);
  const auto a = full_report(rho);
  const auto b = full_report(swap_subsystems(rho));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(a[k].value, b[k].value, 1e-12);
}

}  // namespace
}  // namespace qsep
