#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "maxtsp/error.hpp"
#include "maxtsp/exact.hpp"
#include "test_support.hpp"

namespace maxtsp {
namespace {

using testing::equilateral;
using testing::random_metric;

TEST(HeldKarp, Triangle) {
  const Instance inst = Instance::from_rows({{0, 3, 4}, {3, 0, 5}, {4, 5, 0}});
  const Tour t = held_karp_max(inst);
  EXPECT_EQ(t.order, (Cycle{0, 1, 2}));
  EXPECT_EQ(t.weight, 12.0);
  EXPECT_EQ(brute_force_tour(inst).weight, 12.0);
}

TEST(HeldKarp, EquilateralSix) {
  EXPECT_EQ(held_karp_max(equilateral(6)).weight, 6.0);
}

TEST(HeldKarp, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 3 + seed % 7;  // 3..9
    const Instance inst = seed % 2 ? random_metric(n, seed) : testing::line(n, seed);
    const Tour dp = held_karp_max(inst);
    const Tour bf = brute_force_tour(inst);
    ASSERT_TRUE(is_valid_tour(inst, dp));
    EXPECT_EQ(dp.order.front(), 0);
    EXPECT_NEAR(dp.weight, bf.weight, 1e-12) << "seed " << seed;
  }
}

TEST(HeldKarp, Caps) {
  EXPECT_THROW(held_karp_max(equilateral(21)), SizeLimitExceeded);
  EXPECT_THROW(held_karp_max(equilateral(9), 8), SizeLimitExceeded);
  EXPECT_THROW(brute_force_tour(equilateral(11)), SizeLimitExceeded);
  EXPECT_THROW(held_karp_max(Instance(2, {0, 1, 1, 0})), InvalidArgument);
}

TEST(BruteForce, FourVerticesBestOfThree) {
  const Instance inst = random_metric(4, 6);
  const double t1 = cycle_weight(inst, {0, 1, 2, 3});
  const double t2 = cycle_weight(inst, {0, 1, 3, 2});
  const double t3 = cycle_weight(inst, {0, 2, 1, 3});
  EXPECT_EQ(brute_force_tour(inst).weight, std::max({t1, t2, t3}));
}

TEST(MinMax, EquilateralBecomesZero) {
  const Instance t = minmax_transform(equilateral(5));
  for (double d : t.matrix()) EXPECT_EQ(d, 0.0);
}

TEST(MinMax, TourIdentity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = random_metric(7, seed);
    const Instance t = minmax_transform(inst);
    Cycle order(7);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 10; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      EXPECT_NEAR(cycle_weight(inst, order) + cycle_weight(t, order),
                  7.0 * inst.max_distance(), 1e-12);
    }
  }
}

TEST(MinMax, ArgmaxIsArgminOfTransform) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 4 + seed % 5;  // 4..8
    const Instance inst = random_metric(n, seed);
    const Instance t = minmax_transform(inst);
    Cycle order(n);
    std::iota(order.begin(), order.end(), 0);
    double best_max = -1.0;
    double best_min = 1e300;
    Cycle argmax;
    Cycle argmin;
    do {
      const double w = cycle_weight(inst, order);
      const double v = cycle_weight(t, order);
      if (w > best_max) best_max = w, argmax = order;
      if (v < best_min) best_min = v, argmin = order;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    // Same optimum value on both sides, and each argument is optimal for the other.
    EXPECT_NEAR(cycle_weight(t, argmax), best_min, 1e-12);
    EXPECT_NEAR(cycle_weight(inst, argmin), best_max, 1e-12);
    EXPECT_NEAR(best_max, held_karp_max(inst).weight, 1e-12);
  }
}

}  // namespace
}  // namespace maxtsp
