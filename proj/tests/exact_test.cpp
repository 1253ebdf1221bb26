// Copyright 2026 The pmasched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pma/exact.hpp"
#include "pma/generate.hpp"

namespace pma {
namespace {

using testing::error_code_of;

TEST(BruteForce, TightPairPrefersShortDeteriorationLast) {
  const Instance inst{{{1, 10}, {9, 1}}, 10, 10};
  const auto r = solve_brute_force(inst);
  EXPECT_EQ(r.best_total, 12u);
  EXPECT_EQ(r.best_order, (std::vector<JobId>{0, 1}));
}

TEST(BruteForce, SingleJob) {
  const Instance inst{{{7, 2}}, 3, 3};
  EXPECT_EQ(solve_brute_force(inst).best_total, 7u);
}

TEST(BruteForce, AgreeableThreeJobs) {
  const Instance inst{{{1, 1}, {2, 2}, {3, 3}}, 2, 3};
  const auto r = solve_brute_force(inst);
  EXPECT_EQ(r.best_total, 15u);
  EXPECT_EQ(r.best_order, (std::vector<JobId>{0, 1, 2}));
}

TEST(BruteForce, Errors) {
  Instance big;
  big.jobs.assign(11, Job{1, 0});
  EXPECT_EQ(error_code_of([&] { solve_brute_force(big); }), ErrorCode::too_large);
  EXPECT_NO_THROW(solve_brute_force(big, 11));
  const Instance bad{{{1, 4}}, 0, 3};
  EXPECT_EQ(error_code_of([&] { solve_brute_force(bad); }), ErrorCode::infeasible_job);
}

TEST(SubsetDp, Examples) {
  EXPECT_EQ(solve_subset_dp(Instance{{{2, 3}, {4, 1}}, 3, 5}).best_total, 9u);
  const auto empty = solve_subset_dp(Instance{});
  EXPECT_EQ(empty.best_total, 0u);
  EXPECT_TRUE(empty.best_order.empty());
  Instance big;
  big.jobs.assign(25, Job{1, 0});
  EXPECT_EQ(error_code_of([&] { solve_subset_dp(big); }), ErrorCode::too_large);
}

TEST(SubsetDp, HandlesTwentyJobs) {
  Rng rng(99);
  const auto inst = random_instance({20, 50, 50}, rng);
  const auto r = solve_subset_dp(inst);
  EXPECT_EQ(canonical_total(inst, r.best_order), r.best_total);
  EXPECT_EQ(r.explored, std::uint64_t{1} << 20);
}

// Both solvers against plain enumeration with step-by-step simulation.
TEST(ExactSolvers, AgreeWithEnumerationOracle) {
  Rng rng(2024);
  for (int round = 0; round < 300; ++round) {
    const auto inst = random_instance({rng.uniform(0, 7), 20, 20}, rng);
    const auto expected = oracle::enumerate_optimum(inst);
    const auto bf = solve_brute_force(inst);
    const auto dp = solve_subset_dp(inst);
    ASSERT_EQ(bf.best_total, expected.total);
    ASSERT_EQ(dp.best_total, expected.total);
    EXPECT_EQ(bf.best_order, expected.order);
    EXPECT_EQ(dp.best_order, expected.order);
    EXPECT_EQ(canonical_total(inst, dp.best_order), dp.best_total);
  }
}

TEST(ExactSolvers, OptimumIsInvariantUnderRelabeling) {
  Rng rng(7);
  for (int round = 0; round < 100; ++round) {
    const auto inst = random_instance({rng.uniform(1, 8), 20, 20}, rng);
    auto relabeled = inst;
    rng.shuffle(relabeled.jobs);
    EXPECT_EQ(solve_subset_dp(inst).best_total, solve_subset_dp(relabeled).best_total);
  }
}

TEST(ExactSolvers, NoPairwiseSwapImprovesTheOptimum) {
  Rng rng(11);
  for (int round = 0; round < 100; ++round) {
    const auto inst = random_instance({rng.uniform(2, 8), 20, 20}, rng);
    const auto r = solve_subset_dp(inst);
    auto order = r.best_order;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        std::swap(order[i], order[j]);
        EXPECT_GE(canonical_total(inst, order), r.best_total);
        std::swap(order[i], order[j]);
      }
    }
  }
}

TEST(BruteForce, DuplicateJobsKeepLexicographicTieBreak) {
  const Instance inst{{{3, 2}, {1, 1}, {3, 2}, {1, 1}}, 2, 4};
  const auto expected = oracle::enumerate_optimum(inst);
  const auto r = solve_brute_force(inst);
  EXPECT_EQ(r.best_total, expected.total);
  EXPECT_EQ(r.best_order, expected.order);
}

}  // namespace
}  // namespace pma
