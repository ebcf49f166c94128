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

#include "qdist/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include "qdist/hypothesis.hpp"
#include "qdist/interferometer.hpp"
#include "qdist/measures.hpp"
#include "qdist/phase_field.hpp"

namespace qdist {

namespace {

constexpr std::size_t kChunkSize = 64;

struct ChunkResult {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::optional<TrialResult> worst;
};

std::vector<Complex> to_list(const Vector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

PropertyResult run_property(std::string name, std::string description, bool core, std::size_t trials,
                            std::uint64_t seed, std::uint64_t stream, const std::function<TrialResult(Rng&)>& trial,
                            unsigned workers) {
  const std::size_t chunks = (trials + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      Rng rng(derive_seed(seed, (stream << 32) + c));
      ChunkResult& r = results[c];
      const std::size_t count = std::min(kChunkSize, trials - c * kChunkSize);
      for (std::size_t i = 0; i < count; ++i) {
        TrialResult t = trial(rng);
        ++r.trials;
        if (t.passed) ++r.passed;
        if (!r.worst || t.margin < r.worst->margin) r.worst = std::move(t);
      }
    }
  };

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(chunks, 1)));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  PropertyResult out;
  out.name = std::move(name);
  out.description = std::move(description);
  out.core = core;
  std::optional<TrialResult> worst;
  for (auto& r : results) {
    out.trials += r.trials;
    out.passed += r.passed;
    if (r.worst && (!worst || r.worst->margin < worst->margin)) worst = std::move(r.worst);
  }
  if (worst) {
    out.worst_margin = worst->margin;
    out.witness = std::move(worst->witness);
  }
  return out;
}

bool VerifyReport::core_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) {
    return !p.core || p.all_passed();
  });
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.trials < 1) throw InvalidArgument("verify needs at least one trial");
  if (options.max_dim < 2) throw InvalidArgument("verify needs max dimension >= 2");
  const double tol = options.tolerance;
  const std::size_t max_dim = options.max_dim;
  const auto dim = [max_dim](Rng& rng) { return uniform_index(rng, 2, max_dim); };

  VerifyReport report{options, {}};
  auto& props = report.properties;
  const auto run = [&](std::string name, std::string description, bool core, std::uint64_t stream,
                       const std::function<TrialResult(Rng&)>& trial) {
    props.push_back(run_property(std::move(name), std::move(description), core, options.trials, options.seed, stream,
                                 trial, options.workers));
  };

  run("tradeoff", "U - I over random orthonormal pairs and coarse-grained measurements", true, 1, [&](Rng& rng) {
    const std::size_t d = dim(rng);
    const auto pair = random_orthonormal_pair(d, rng);
    const auto m = random_measurement(d, rng);
    const auto r = tradeoff_report(pair.psi1, pair.psi2, m);
    return TrialResult{r.slack >= -tol, r.slack, {}};
  });

  run("tradeoff_rank_one", "tol - |U - I| for rank-one measurements", true, 2, [&](Rng& rng) {
    const std::size_t d = dim(rng);
    const auto pair = random_orthonormal_pair(d, rng);
    const auto m = random_measurement(d, rng, true);
    const auto r = tradeoff_report(pair.psi1, pair.psi2, m);
    const double margin = tol - std::abs(r.slack);
    return TrialResult{margin >= 0.0, margin, {}};
  });

  run("chain", "smallest slack of U_D' >= U_Dkl >= I_Dkl >= I_Dk over commuting pairs", true, 3, [&](Rng& rng) {
    const std::size_t d = dim(rng);
    const auto pair = random_orthonormal_pair(d, rng);
    const auto [interf, detect] = random_commuting_pair(d, rng);
    const auto s = chain_report(pair.psi1, pair.psi2, interf, detect).slacks();
    const double margin = *std::min_element(s.begin(), s.end());
    return TrialResult{margin >= -tol, margin, {}};
  });

  run("np_sum_bound", "min over NP tests of err1 + err2 - (1 - sqrt(1 - U^2))", true, 4, [&](Rng& rng) {
    const std::size_t n = dim(rng);
    const auto p = random_distribution(n, rng);
    const auto q = random_distribution(n, rng);
    const auto b = verify_bounds(p, q, 0);
    return TrialResult{b.min_sum_slack >= -tol, b.min_sum_slack, {}};
  });

  run("np_product_bound", "min over NP tests of U^2/4 - err1 * err2", true, 5, [&](Rng& rng) {
    const std::size_t n = dim(rng);
    const auto p = random_distribution(n, rng);
    const auto q = random_distribution(n, rng);
    const auto b = verify_bounds(p, q, 0);
    return TrialResult{b.min_product_slack >= -tol, b.min_product_slack, {}};
  });

  run("np_error_sum", "1 - max over NP tests of err1 + err2", true, 6, [&](Rng& rng) {
    const std::size_t n = dim(rng);
    const auto p = random_distribution(n, rng);
    const auto q = random_distribution(n, rng);
    const double margin = 1.0 - verify_bounds(p, q, 0).max_error_sum;
    return TrialResult{margin >= -kNormTolerance, margin, {}};
  });

  run("field_tradeoff", "U_Dn - I_Dxs over random truncated field states", true, 7, [&](Rng& rng) {
    const auto field = random_field(uniform_index(rng, 2, 32), rng);
    const double margin = indistinguishability_closed_form(field) - interference_power_closed_form(field);
    return TrialResult{margin >= -tol, margin, to_list(field.amplitudes())};
  });

  run("phase_number_squared", "LHS - 1/4 (1 - dphi^2 - P0)^2 over random field states", false, 8, [&](Rng& rng) {
    const auto field = random_field(uniform_index(rng, 2, 32), rng);
    const auto r = uncertainty_relation_check(field);
    return TrialResult{r.squared_holds(tol), r.lhs - r.rhs_squared, to_list(field.amplitudes())};
  });

  run("phase_number_linear", "LHS - 1/4 (1 - dphi^2 - P0) over random field states", false, 9, [&](Rng& rng) {
    const auto field = random_field(uniform_index(rng, 2, 32), rng);
    const auto r = uncertainty_relation_check(field);
    return TrialResult{r.linear_holds(tol), r.lhs - r.rhs_linear, to_list(field.amplitudes())};
  });

  return report;
}

}  // namespace qdist
