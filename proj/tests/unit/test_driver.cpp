#include <cmath>

#include <gtest/gtest.h>

#include "maxtsp/driver.hpp"
#include "maxtsp/error.hpp"
#include "test_support.hpp"

namespace maxtsp {
namespace {

using testing::equilateral;
using testing::random_metric;

TEST(PlanEptas, LargeEpsilonTakesFiveSixths) {
  for (double eps : {1.0 / 6.0, 0.2, 0.5, 0.99}) {
    const EptasPlan plan = plan_eptas(1000, eps, 1.0);
    EXPECT_EQ(plan.branch, Branch::five_sixths);
    EXPECT_FALSE(plan.delta.has_value());
    EXPECT_FALSE(plan.n_threshold.has_value());
  }
}

TEST(PlanEptas, ThresholdValues) {
  const EptasPlan plan = plan_eptas(100, 0.1, 1.0);
  ASSERT_TRUE(plan.delta && plan.n_threshold);
  EXPECT_DOUBLE_EQ(*plan.delta, 0.12 / 1.1);
  EXPECT_NEAR(*plan.delta, 0.10909, 1e-5);
  EXPECT_NEAR(*plan.n_threshold, 166375.0 / 27.0, 1e-9);  // (55/3)^3 ~ 6162.04
  EXPECT_EQ(plan.branch, Branch::exact_dp);
}

TEST(PlanEptas, BranchGrid) {
  for (double dim : {0.0, 0.5, 1.0, 2.0}) {
    for (double eps : {0.01, 0.05, 0.1, 0.15, 1.0 / 6.0, 0.3}) {
      for (std::size_t n : {3u, 10u, 19u, 50u, 1000u, 100000u}) {
        const EptasPlan plan = plan_eptas(n, eps, dim);
        Branch expected = Branch::five_sixths;
        if (eps < 1.0 / 6.0) {
          const double threshold = std::pow(11.0 / 6.0 / eps, 2.0 * dim + 1.0);
          expected = static_cast<double>(n) <= threshold ? Branch::exact_dp
                                                         : Branch::algorithm_a;
        }
        EXPECT_EQ(plan.branch, expected) << "n " << n << " eps " << eps << " dim " << dim;
      }
    }
  }
}

TEST(PlanEptas, RejectsBadArguments) {
  EXPECT_THROW(plan_eptas(10, 0.0, 1.0), InvalidArgument);
  EXPECT_THROW(plan_eptas(10, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(plan_eptas(10, 0.1, -1.0), InvalidArgument);
  EXPECT_THROW(plan_eptas(10, 0.1, INFINITY), InvalidArgument);
}

TEST(Eptas, FiveSixthsBranch) {
  const Instance inst = random_metric(9, 2);
  const SolveResult r = eptas(inst, 0.2, 1.0);
  EXPECT_EQ(r.certificate.branch, Branch::five_sixths);
  EXPECT_DOUBLE_EQ(r.certificate.claimed_bound, 5.0 / 6.0);
  EXPECT_EQ(r.certificate.epsilon, 0.2);
  EXPECT_TRUE(r.certificate.certified);
}

TEST(Eptas, ExactBranchIsOptimal) {
  const Instance inst = random_metric(8, 5);
  const SolveResult r = eptas(inst, 0.05, 1.0);
  EXPECT_EQ(r.certificate.branch, Branch::exact_dp);
  EXPECT_EQ(r.certificate.claimed_bound, 1.0);
  EXPECT_TRUE(r.certificate.certified);
  EXPECT_NEAR(r.tour.weight, held_karp_max(inst).weight, 1e-12);
  EXPECT_GE(r.tour.weight, 0.95 * held_karp_max(inst).weight);
}

TEST(Eptas, CapDeviationIsUncertified) {
  const Instance inst = testing::line(24, 3);
  const SolveResult r = eptas(inst, 0.05, 1.0);
  const Certificate& c = r.certificate;
  EXPECT_EQ(c.branch, Branch::algorithm_a);
  EXPECT_FALSE(c.certified);
  EXPECT_FALSE(c.note.empty());
  EXPECT_EQ(c.n_threshold.value_or(0.0) > 24.0, true);

  const SolveResult capped = eptas(random_metric(12, 1), 0.1, 1.0, 10);
  EXPECT_FALSE(capped.certificate.certified);
  EXPECT_EQ(capped.certificate.branch, Branch::algorithm_a);
}

TEST(Eptas, AlgorithmBranchClaimsOneMinusEpsilon) {
  // dim = 0 puts n(0.1) at 55/3, so n = 30 lies past the threshold.
  const Instance inst = testing::line(30, 8);
  const SolveResult r = eptas(inst, 0.1, 0.0);
  EXPECT_EQ(r.certificate.branch, Branch::algorithm_a);
  EXPECT_TRUE(r.certificate.certified);
  EXPECT_DOUBLE_EQ(r.certificate.claimed_bound, 0.9);
  EXPECT_DOUBLE_EQ(*r.certificate.delta, 12.0 / 11.0 * 0.1);
  EXPECT_EQ(r.certificate.dim, 0.0);
}

TEST(Eptas, CertifiedRunsMeetTheGuarantee) {
  for (double eps : {0.05, 0.1, 0.2, 0.3}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Instance inst = random_metric(5 + seed % 6, seed);
      const SolveResult r = eptas(inst, eps, 1.0);
      ASSERT_TRUE(r.certificate.certified);
      EXPECT_GE(r.tour.weight, (1.0 - eps) * held_karp_max(inst).weight)
          << "eps " << eps << " seed " << seed;
    }
  }
}

TEST(PlanAsymptotic, Branches) {
  EXPECT_EQ(plan_asymptotic(8, 1.0).branch, Branch::five_sixths);
  EXPECT_EQ(plan_asymptotic(9, 1.0).branch, Branch::algorithm_a);
  EXPECT_EQ(plan_asymptotic(32, 2.0).branch, Branch::five_sixths);
  EXPECT_EQ(plan_asymptotic(33, 2.0).branch, Branch::algorithm_a);
  EXPECT_EQ(plan_asymptotic(2, 0.0).branch, Branch::five_sixths);
  EXPECT_EQ(plan_asymptotic(3, 0.0).branch, Branch::algorithm_a);
}

TEST(PlanAsymptotic, ExactRoots) {
  const AsymptoticPlan plan = plan_asymptotic(64, 1.0);
  ASSERT_TRUE(plan.delta.has_value());
  EXPECT_EQ(*plan.delta, 0.5);
  EXPECT_EQ(plan.error_bound, 11.0 / 24.0);
  EXPECT_EQ(*plan_asymptotic(125, 1.0).delta, 0.4);
  EXPECT_EQ(*plan_asymptotic(243, 2.0).delta, 2.0 / 3.0);
}

TEST(PlanAsymptotic, ErrorFormula) {
  const AsymptoticPlan plan = plan_asymptotic(12, 1.0);
  EXPECT_NEAR(plan.error_bound, (11.0 / 6.0) / std::cbrt(12.0), 1e-15);
  EXPECT_NEAR(plan.error_bound, 0.80078, 1e-5);
  EXPECT_NEAR(*plan.delta, 2.0 / std::cbrt(12.0), 1e-15);
  EXPECT_THROW(plan_asymptotic(12, -0.5), InvalidArgument);
}

TEST(Asymptotic, SmallInstanceUsesFiveSixths) {
  const SolveResult r = asymptotic(random_metric(8, 1), 1.0);
  EXPECT_EQ(r.certificate.branch, Branch::five_sixths);
  EXPECT_DOUBLE_EQ(r.certificate.claimed_bound, 5.0 / 6.0);
  ASSERT_TRUE(r.certificate.claimed_error.has_value());
  EXPECT_NEAR(*r.certificate.claimed_error, 11.0 / 12.0, 1e-15);
}

TEST(Asymptotic, LineSixtyFour) {
  const SolveResult r = asymptotic(testing::line(64, 2), 1.0);
  EXPECT_EQ(r.certificate.branch, Branch::algorithm_a);
  EXPECT_EQ(r.certificate.delta, 0.5);
  EXPECT_DOUBLE_EQ(r.certificate.claimed_bound, 1.0 - 11.0 / 24.0);
}

TEST(Asymptotic, RelativeErrorAgainstOptimum) {
  for (std::size_t n : {9u, 12u, 14u}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Instance inst = testing::line(n, seed);
      const SolveResult r = asymptotic(inst, 1.0);
      const double opt = held_karp_max(inst).weight;
      EXPECT_LE((opt - r.tour.weight) / opt, *r.certificate.claimed_error + 1e-12);
    }
  }
}

TEST(Exact, CertificateRecordsCover) {
  const Instance inst = random_metric(9, 4);
  const SolveResult r = exact(inst);
  EXPECT_EQ(r.certificate.branch, Branch::exact_dp);
  EXPECT_EQ(r.certificate.weight_tour, r.tour.weight);
  EXPECT_GE(r.certificate.weight_cover, r.tour.weight - 1e-12);
  EXPECT_GE(r.certificate.k_initial, 1u);
  EXPECT_THROW(exact(equilateral(21)), SizeLimitExceeded);
}

TEST(Certificate, TextBlock) {
  const SolveResult r = algorithm_a_solve(testing::line(20, 1), 0.5);
  const std::string text = r.certificate.to_text();
  for (const char* key : {"branch = algorithm-A", "certified = true", "delta = 0.5", "dim = 1",
                          "k_initial = ", "k_after_gluing = ", "weight_cover = ",
                          "weight_tour = ", "claimed_bound = ", "r_tau = ", "t_min = "}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
  EXPECT_EQ(text.find("epsilon"), std::string::npos);
}

}  // namespace
}  // namespace maxtsp
