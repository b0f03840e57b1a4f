#include <gtest/gtest.h>

#include <algorithm>

#include "mixorient/errors.hpp"
#include "mixorient/partition.hpp"

namespace mixorient {
namespace {

std::vector<int> sorted(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::vector<int> merged(const BalancedPartition& p) {
  std::vector<int> all = p.part_a;
  all.insert(all.end(), p.part_b.begin(), p.part_b.end());
  return sorted(all);
}

std::vector<int> odds(int n) {
  std::vector<int> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(2 * i - 1);
  return xs;
}

TEST(PartitionOdds, BaseCases) {
  const auto p3 = partition_odds(3);
  EXPECT_EQ(sorted(p3.part_a), (std::vector<int>{1, 3}));
  EXPECT_EQ(sorted(p3.part_b), (std::vector<int>{5}));
  EXPECT_EQ(p3.discrepancy(), 1);

  const auto p6 = partition_odds(6);
  EXPECT_EQ(sorted(p6.part_a), (std::vector<int>{1, 3, 5, 9}));
  EXPECT_EQ(sorted(p6.part_b), (std::vector<int>{7, 11}));
  EXPECT_EQ(p6.discrepancy(), 0);

  const auto p4 = partition_odds(4);
  EXPECT_EQ(sorted(p4.part_a), (std::vector<int>{1, 7}));
  EXPECT_EQ(sorted(p4.part_b), (std::vector<int>{3, 5}));
  EXPECT_EQ(p4.discrepancy(), 0);

  const auto p2 = partition_odds(2);
  EXPECT_EQ(merged(p2), (std::vector<int>{1, 3}));
  EXPECT_EQ(p2.part_a.size(), 1u);
  EXPECT_EQ(p2.discrepancy(), 2);

  EXPECT_THROW(partition_odds(0), InvalidValue);
}

TEST(PartitionOdds, SweepUpToTenThousand) {
  for (int n = 1; n <= 10000; ++n) {
    const auto p = partition_odds(n);
    ASSERT_LE(p.discrepancy(), n == 2 ? 2 : 1) << n;
    if (n <= 2000 || n % 97 == 0) ASSERT_EQ(merged(p), odds(n)) << n;
  }
}

TEST(PartitionOdds, Deterministic) {
  for (int n : {1, 5, 17, 1234}) {
    EXPECT_EQ(partition_odds(n).part_a, partition_odds(n).part_a);
  }
}

TEST(PartitionOddsPlus, Examples) {
  const auto a = partition_odds_plus(1, 0, 1);
  EXPECT_EQ(a.part_a, (std::vector<int>{1}));
  EXPECT_TRUE(a.part_b.empty());
  EXPECT_EQ(a.discrepancy(), 1);

  // k even: copies split evenly on top of the odd split ({1,3},{5}).
  const auto b = partition_odds_plus(3, 2, 5);
  EXPECT_EQ(sorted(b.part_a), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(sorted(b.part_b), (std::vector<int>{5, 5}));
  EXPECT_EQ(b.discrepancy(), 1);

  // k odd: S1' = {1}, S2' = {3,4,4,4}; sums 8 and 8.
  const auto c = partition_odds_plus(2, 3, 4);
  EXPECT_EQ(c.sum_a(), 8);
  EXPECT_EQ(c.sum_b(), 8);
  EXPECT_EQ(merged(c), (std::vector<int>{1, 3, 4, 4, 4}));

  EXPECT_THROW(partition_odds_plus(3, 2, 7), InvalidValue);
  EXPECT_THROW(partition_odds_plus(3, 2, 4), InvalidValue);
}

TEST(PartitionOddsPlus, SweepBothValues) {
  for (int n = 1; n <= 200; ++n) {
    for (int k = 0; k <= 200; ++k) {
      for (int value : {2 * n - 1, 2 * n}) {
        const auto p = partition_odds_plus(n, k, value);
        ASSERT_LE(p.discrepancy(), 2) << n << " " << k << " " << value;
        std::vector<int> expected = odds(n);
        expected.insert(expected.end(), static_cast<std::size_t>(k), value);
        ASSERT_EQ(merged(p), sorted(expected));
      }
    }
  }
}

TEST(PhasePlan, Examples) {
  const auto p3 = phase_plan(3);
  EXPECT_EQ(p3.out_phases, (std::vector<int>{1, 2}));
  EXPECT_EQ(p3.in_phases, (std::vector<int>{3}));

  const auto p1 = phase_plan(1);
  EXPECT_EQ(p1.out_phases, (std::vector<int>{1}));
  EXPECT_TRUE(p1.in_phases.empty());

  const auto p10 = phase_plan(10);
  EXPECT_LE(std::max(p10.out_weight(), p10.in_weight()), 51);
}

TEST(PhasePlan, LargerPartBoundedByHalfSquarePlusOne) {
  for (int r = 1; r <= 1000; ++r) {
    const auto p = phase_plan(r);
    ASSERT_EQ(p.out_phases.size() + p.in_phases.size(), static_cast<std::size_t>(r));
    ASSERT_LE(2 * std::max(p.out_weight(), p.in_weight()), static_cast<long long>(r) * r + 2) << r;
  }
}

TEST(PhasePlanEta, Examples) {
  const auto a = phase_plan_eta(3, 7);
  EXPECT_EQ(a.weights, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(a.out_phases, phase_plan(3).out_phases);
  EXPECT_EQ(a.in_phases, phase_plan(3).in_phases);

  const auto b = phase_plan_eta(4, 5);
  EXPECT_EQ(b.weights, (std::vector<int>{1, 3, 3, 3}));
  EXPECT_LE(std::abs(b.out_weight() - b.in_weight()), 2);

  const auto c = phase_plan_eta(5, 4);
  EXPECT_EQ(c.weights, (std::vector<int>{1, 2, 2, 2, 2}));
  EXPECT_LE(std::abs(c.out_weight() - c.in_weight()), 2);

  EXPECT_THROW(phase_plan_eta(3, 2), EtaOutOfRange);
  EXPECT_THROW(phase_plan_eta(3, 8), EtaOutOfRange);
}

TEST(PhasePlanEta, SweepDiscrepancy) {
  for (int r = 1; r <= 60; ++r) {
    for (int eta = 3; eta <= 2 * r + 1; ++eta) {
      const auto p = phase_plan_eta(r, eta);
      ASSERT_EQ(p.out_phases.size() + p.in_phases.size(), static_cast<std::size_t>(r));
      ASSERT_LE(std::abs(p.out_weight() - p.in_weight()), 2) << r << " " << eta;
    }
  }
}

}  // namespace
}  // namespace mixorient
