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

#include "qdist/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace qdist {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct RatioOutcome {
  double p;
  double q;
  double ratio;
};

// Outcomes that carry mass under either hypothesis, with r = q / p.
std::vector<RatioOutcome> ratio_outcomes(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  const auto qs = aligned_probabilities(p, q);
  std::vector<RatioOutcome> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double pk = p.probability(k);
    const double qk = qs[k];
    if (pk == 0.0 && qk == 0.0) continue;
    out.push_back({pk, qk, pk == 0.0 ? kInfinity : qk / pk});
  }
  return out;
}

TestErrors errors_for(const std::vector<RatioOutcome>& outcomes, const NPTest& test) {
  TestErrors e{0.0, 0.0};
  for (const auto& o : outcomes) {
    if (o.ratio > test.threshold) {
      e.err1 += o.p;
    } else if (o.ratio < test.threshold) {
      e.err2 += o.q;
    } else {
      e.err1 += (1.0 - test.tie_acceptance) * o.p;
      e.err2 += test.tie_acceptance * o.q;
    }
  }
  return e;
}

std::vector<NPTest> tests_for(const std::vector<RatioOutcome>& outcomes) {
  std::vector<double> ratios;
  ratios.reserve(outcomes.size());
  for (const auto& o : outcomes) ratios.push_back(o.ratio);
  std::sort(ratios.begin(), ratios.end());
  ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
  std::vector<NPTest> tests;
  tests.reserve(2 * ratios.size());
  for (double r : ratios) {
    tests.push_back({r, 0.0});
    tests.push_back({r, 1.0});
  }
  return tests;
}

}  // namespace

void NPTest::validate() const {
  if (std::isnan(threshold) || threshold < 0.0) throw InvalidArgument("NP test threshold must be >= 0");
  if (!(tie_acceptance >= 0.0 && tie_acceptance <= 1.0)) {
    throw InvalidArgument("NP test tie acceptance must lie in [0, 1]");
  }
}

TestErrors np_test_errors(const OutcomeDistribution& p, const OutcomeDistribution& q, const NPTest& test) {
  test.validate();
  return errors_for(ratio_outcomes(p, q), test);
}

std::vector<NPTest> candidate_tests(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  return tests_for(ratio_outcomes(p, q));
}

NPSolution best_np_test(const OutcomeDistribution& p, const OutcomeDistribution& q, Objective objective) {
  const auto outcomes = ratio_outcomes(p, q);
  const auto key = [objective](const TestErrors& e) {
    return objective == Objective::kSum ? std::pair{e.sum(), e.product()} : std::pair{e.product(), e.sum()};
  };
  std::optional<NPSolution> best;
  for (const auto& test : tests_for(outcomes)) {
    const TestErrors e = errors_for(outcomes, test);
    if (!best || key(e) < key(best->errors)) best = NPSolution{test, e};
  }
  return *best;
}

bool BoundReport::holds(double tolerance) const {
  if (min_sum_slack < -tolerance || min_product_slack < -tolerance) return false;
  if (max_error_sum > 1.0 + kNormTolerance) return false;
  if (region_sum_slack && *region_sum_slack < -tolerance) return false;
  return true;
}

BoundReport verify_bounds(const OutcomeDistribution& p, const OutcomeDistribution& q, std::size_t exhaustive_limit) {
  const auto outcomes = ratio_outcomes(p, q);
  const double u = bhattacharyya(p, q);

  BoundReport report{};
  report.indistinguishability = u;
  report.sum_bound = 1.0 - std::sqrt(std::max(0.0, 1.0 - u * u));
  report.product_bound = 0.25 * u * u;
  report.min_sum_slack = kInfinity;
  report.min_product_slack = kInfinity;
  report.max_error_sum = -kInfinity;

  for (const auto& test : tests_for(outcomes)) {
    const TestErrors e = errors_for(outcomes, test);
    ++report.tests_checked;
    if (double s = e.sum() - report.sum_bound; s < report.min_sum_slack) {
      report.min_sum_slack = s;
      report.tightest_sum_test = test;
    }
    if (double s = report.product_bound - e.product(); s < report.min_product_slack) {
      report.min_product_slack = s;
      report.tightest_product_test = test;
    }
    report.max_error_sum = std::max(report.max_error_sum, e.sum());
  }

  if (outcomes.size() <= exhaustive_limit && outcomes.size() < 63) {
    const std::uint64_t regions = std::uint64_t{1} << outcomes.size();
    double min_sum = kInfinity;
    for (std::uint64_t mask = 0; mask < regions; ++mask) {
      // Bit k set: P rejected on outcome k.
      double sum = 0.0;
      for (std::size_t k = 0; k < outcomes.size(); ++k) sum += (mask >> k & 1U) ? outcomes[k].p : outcomes[k].q;
      min_sum = std::min(min_sum, sum);
    }
    report.regions_checked = static_cast<std::size_t>(regions);
    report.region_min_sum = min_sum;
    report.region_sum_slack = min_sum - report.sum_bound;
  }
  return report;
}

}  // namespace qdist
