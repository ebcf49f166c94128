// Copyright 2026 The qdist Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qdist/hypothesis.hpp"
#include "qdist/random.hpp"

namespace qdist {
namespace {

OutcomeDistribution dist(std::vector<double> v) { return OutcomeDistribution::from_probabilities(v); }

// Smallest err1 + err2 over every deterministic acceptance region: sum_k min(p_k, q_k).
double min_error_sum_oracle(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  double s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) s += std::min(p.probability(k), q.probability(k));
  return s;
}

TEST(NPTest, ErrorsOfKnownEqualityCase) {
  auto p = dist({0.8, 0.2});
  auto q = dist({0.2, 0.8});
  auto e = np_test_errors(p, q, {1.0, 0.0});
  EXPECT_NEAR(e.err1, 0.2, 1e-15);
  EXPECT_NEAR(e.err2, 0.2, 1e-15);
  auto best = best_np_test(p, q, Objective::kSum);
  EXPECT_NEAR(best.errors.sum(), 0.4, 1e-12);
  EXPECT_NEAR(best.errors.sum(), 1.0 - std::sqrt(1.0 - 0.64), 1e-12);
  auto report = verify_bounds(p, q);
  EXPECT_NEAR(report.indistinguishability, 0.8, 1e-15);
  EXPECT_NEAR(report.product_bound, 0.16, 1e-15);
  EXPECT_TRUE(report.holds());
}

TEST(NPTest, InfiniteRatioWhenOnlyAlternativeReachesOutcome) {
  auto p = dist({1.0, 0.0});
  auto q = dist({0.5, 0.5});
  auto tests = candidate_tests(p, q);
  ASSERT_EQ(tests.size(), 4u);
  EXPECT_TRUE(std::isinf(tests.back().threshold));
  auto e = np_test_errors(p, q, {std::numeric_limits<double>::infinity(), 0.0});
  EXPECT_NEAR(e.err1, 0.0, 1e-15);
  EXPECT_NEAR(e.err2, 0.5, 1e-15);
}

TEST(NPTest, SkipsOutcomesWithoutMass) {
  OutcomeDistribution p({{"a", 0.5}, {"b", 0.5}, {"c", 0.0}});
  OutcomeDistribution q({{"a", 0.5}, {"b", 0.5}, {"c", 0.0}});
  EXPECT_EQ(candidate_tests(p, q).size(), 2u);
}

TEST(NPTest, RejectsInvalidTests) {
  auto p = dist({0.5, 0.5});
  EXPECT_THROW(np_test_errors(p, p, {-1.0, 0.0}), InvalidArgument);
  EXPECT_THROW(np_test_errors(p, p, {1.0, 1.5}), InvalidArgument);
}

TEST(NPTest, IdenticalDistributionsForceUnitSum) {
  auto p = dist({0.1, 0.3, 0.6});
  auto r = verify_bounds(p, p);
  EXPECT_NEAR(r.indistinguishability, 1.0, 1e-15);
  EXPECT_NEAR(r.sum_bound, 1.0, 1e-15);
  for (const auto& t : candidate_tests(p, p)) EXPECT_NEAR(np_test_errors(p, p, t).sum(), 1.0, 1e-15);
}

TEST(NPTest, DisjointSupportsGiveZeroError) {
  auto p = dist({0.5, 0.5, 0.0});
  auto q = dist({0.0, 0.0, 1.0});
  auto best = best_np_test(p, q, Objective::kSum);
  EXPECT_EQ(best.errors.sum(), 0.0);
  EXPECT_NEAR(verify_bounds(p, q).sum_bound, 0.0, 1e-15);
}

TEST(NPTest, MonotoneTradeoffAlongThresholds) {
  Rng rng(derive_seed(11, 0));
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_distribution(uniform_index(rng, 2, 10), rng);
    auto q = random_distribution(p.size(), rng);
    auto tests = candidate_tests(p, q);
    std::vector<TestErrors> errs;
    for (const auto& t : tests) errs.push_back(np_test_errors(p, q, t));
    // Sweep order (r0,0) (r0,1) (r1,0) ... raises the threshold.
    for (std::size_t i = 1; i < errs.size(); ++i) {
      EXPECT_LE(errs[i].err1, errs[i - 1].err1 + 1e-15);
      EXPECT_GE(errs[i].err2, errs[i - 1].err2 - 1e-15);
    }
  }
}

TEST(NPTest, ThresholdOptimumMatchesRegionOracle) {
  Rng rng(derive_seed(12, 0));
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_distribution(uniform_index(rng, 1, 12), rng);
    auto q = random_distribution(p.size(), rng);
    auto best = best_np_test(p, q, Objective::kSum);
    EXPECT_NEAR(best.errors.sum(), min_error_sum_oracle(p, q), 1e-12);
    auto r = verify_bounds(p, q);
    EXPECT_TRUE(r.holds());
    if (r.region_min_sum) EXPECT_NEAR(*r.region_min_sum, min_error_sum_oracle(p, q), 1e-12);
  }
}

TEST(NPTest, ProductObjectivePrefersSmallerSumOnTies) {
  auto p = dist({0.8, 0.2});
  auto q = dist({0.2, 0.8});
  auto best = best_np_test(p, q, Objective::kProduct);
  EXPECT_EQ(best.errors.product(), 0.0);
  EXPECT_NEAR(best.errors.sum(), 1.0, 1e-15);
}

}  // namespace
}  // namespace qdist
