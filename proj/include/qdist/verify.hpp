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

#ifndef QDIST_VERIFY_HPP
#define QDIST_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qdist/random.hpp"

namespace qdist {

/// Result of one randomized trial: `margin` is the signed slack of the
/// checked inequality (negative means violated by that much).
struct TrialResult {
  bool passed;
  double margin;
  std::vector<Complex> witness;  // optional state recorded for the worst trial
};

struct PropertyResult {
  std::string name;
  std::string description;
  bool core;  // core properties gate the overall verdict
  std::size_t trials = 0;
  std::size_t passed = 0;
  double worst_margin = 0.0;
  std::vector<Complex> witness;  // from the worst trial, when recorded

  bool all_passed() const { return passed == trials; }
};

/// Runs `trials` trials split into fixed chunks; chunk c draws from
/// Rng(derive_seed(seed, stream * 2^32 + c)). Results do not depend on the
/// number of worker threads.
PropertyResult run_property(std::string name, std::string description, bool core, std::size_t trials,
                            std::uint64_t seed, std::uint64_t stream, const std::function<TrialResult(Rng&)>& trial,
                            unsigned workers = 0);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_dim = 6;
  double tolerance = kOperatorTolerance;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<PropertyResult> properties;

  bool core_passed() const;
};

/// The randomized suites: trade-off and rank-one equality, the measurement
/// chain, the NP error bounds, the field trade-off, and both readings of the
/// phase-number relation (reported, not gating).
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace qdist

#endif  // QDIST_VERIFY_HPP
