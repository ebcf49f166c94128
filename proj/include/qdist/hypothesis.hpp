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

#ifndef QDIST_HYPOTHESIS_HPP
#define QDIST_HYPOTHESIS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qdist/measures.hpp"

namespace qdist {

/// Likelihood-ratio test between hypothesis P (distribution p) and Q.
///
/// With r_k = q_k / p_k (r_k = +inf when p_k = 0 < q_k; outcomes with
/// p_k = q_k = 0 ignored), P is rejected when r_k > threshold, accepted when
/// r_k < threshold, and accepted with probability `tie_acceptance` on ties.
struct NPTest {
  double threshold = 1.0;
  double tie_acceptance = 0.0;

  void validate() const;
};

/// err1 = 1 - alpha (P rejected although true), err2 = 1 - beta (P accepted although Q is true).
struct TestErrors {
  double err1;
  double err2;

  double sum() const { return err1 + err2; }
  double product() const { return err1 * err2; }
};

TestErrors np_test_errors(const OutcomeDistribution& p, const OutcomeDistribution& q, const NPTest& test);

/// Every threshold at a distinct likelihood ratio (including +inf), each with
/// tie acceptance 0 and 1, in ascending threshold order.
std::vector<NPTest> candidate_tests(const OutcomeDistribution& p, const OutcomeDistribution& q);

enum class Objective { kSum, kProduct };

struct NPSolution {
  NPTest test;
  TestErrors errors;
};

/// Minimizes err1 + err2 (or err1 * err2, ties broken by the sum) over candidate_tests().
NPSolution best_np_test(const OutcomeDistribution& p, const OutcomeDistribution& q, Objective objective);

/// The two error bounds in terms of U = bhattacharyya(p, q):
///   err1 + err2 >= 1 - sqrt(1 - U^2)    and    err1 * err2 <= U^2 / 4.
struct BoundReport {
  double indistinguishability;
  double sum_bound;      // 1 - sqrt(1 - U^2)
  double product_bound;  // U^2 / 4
  std::size_t tests_checked;
  double min_sum_slack;      // min over tests of (err1 + err2) - sum_bound
  double min_product_slack;  // min over tests of product_bound - err1 * err2
  double max_error_sum;      // must not exceed 1
  NPTest tightest_sum_test;
  NPTest tightest_product_test;
  std::optional<std::size_t> regions_checked;  // 2^n acceptance regions, small supports only
  std::optional<double> region_min_sum;
  std::optional<double> region_sum_slack;

  bool holds(double tolerance = kOperatorTolerance) const;
};

/// Checks both bounds for every candidate test and, when the support has at
/// most `exhaustive_limit` outcomes, the sum bound for every deterministic
/// acceptance region.
BoundReport verify_bounds(const OutcomeDistribution& p, const OutcomeDistribution& q,
                          std::size_t exhaustive_limit = 12);

}  // namespace qdist

#endif  // QDIST_HYPOTHESIS_HPP
