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

#include "qdist/phase_field.hpp"

#include <algorithm>
#include <cmath>

namespace qdist {

Operator phase_operator(std::size_t truncation) {
  if (truncation < 2) throw InvalidArgument("phase operator needs truncation >= 2");
  const auto n = static_cast<Eigen::Index>(truncation);
  Matrix e = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) e(i, i + 1) = 1.0;
  return Operator(std::move(e));
}

PhaseStats phase_stats(const FieldState& field) {
  PhaseStats s{};
  const auto probs = field.number_distribution();
  Complex e = 0.0;
  for (std::size_t n = 0; n + 1 < field.truncation(); ++n) e += std::conj(field.amplitude(n)) * field.amplitude(n + 1);
  s.exp_phase = e;
  s.vacuum_prob = probs.front();
  s.delta_phi_sq = 1.0 - std::abs(e) - s.vacuum_prob;

  double mean = 0.0;
  for (std::size_t n = 0; n < probs.size(); ++n) mean += static_cast<double>(n) * probs[n];
  double var = 0.0;
  for (std::size_t n = 0; n < probs.size(); ++n) {
    const double d = static_cast<double>(n) - mean;
    var += d * d * probs[n];
  }
  s.mean_n = mean;
  s.delta_n = std::sqrt(std::max(0.0, var));
  return s;
}

RelationReport uncertainty_relation_check(const FieldState& field) {
  RelationReport r{};
  r.stats = phase_stats(field);
  const double dn2 = r.stats.delta_n * r.stats.delta_n;
  const double p0 = r.stats.vacuum_prob;
  const double base = 1.0 - r.stats.delta_phi_sq - p0;
  r.lhs = dn2 * (r.stats.delta_phi_sq - 0.5 * p0);
  r.rhs_squared = 0.25 * base * base;
  r.rhs_linear = 0.25 * base;
  return r;
}

CounterexampleReport counterexample_analysis(std::size_t n0, std::size_t n1, std::size_t truncation) {
  if (truncation < 2 || n0 + 1 >= truncation || n1 + 1 >= truncation) {
    throw InvalidArgument("counterexample peaks must lie below truncation - 1");
  }
  const std::size_t gap = n0 > n1 ? n0 - n1 : n1 - n0;
  if (gap < 2) {
    throw InvalidArgument("counterexample peaks must be at least two photons apart (got " + std::to_string(n0) +
                          ", " + std::to_string(n1) + ")");
  }
  const FieldState field = FieldState::two_peak(n0, n1, truncation);
  CounterexampleReport r{};
  r.n0 = n0;
  r.n1 = n1;
  r.truncation = truncation;
  r.stats = phase_stats(field);
  r.number_spread_large = r.stats.delta_n > 0.5;
  r.indistinguishability = indistinguishability_closed_form(field);
  r.interference_power = interference_power_closed_form(field);
  return r;
}

}  // namespace qdist
