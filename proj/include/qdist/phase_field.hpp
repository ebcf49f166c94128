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

#ifndef QDIST_PHASE_FIELD_HPP
#define QDIST_PHASE_FIELD_HPP

#include <cstddef>

#include "qdist/hilbert.hpp"
#include "qdist/interferometer.hpp"

namespace qdist {

/// Exponential phase operator E = sum_n |n><n+1| on the truncated Fock space.
///
/// E lowers the photon number by one and annihilates |0>. It is a partial
/// isometry, not a unitary: E^dag E = I - |0><0| and, on the truncated space,
/// E E^dag = I - |N-1><N-1|.
Operator phase_operator(std::size_t truncation);

struct PhaseStats {
  Complex exp_phase;    // <xi|E|xi>
  double delta_phi_sq;  // 1 - |<xi|E|xi>| - |<0|xi>|^2
  double vacuum_prob;   // |<0|xi>|^2
  double mean_n;
  double delta_n;       // photon-number standard deviation
};

PhaseStats phase_stats(const FieldState& field);

/// Phase-number relation
///   (dn)^2 ((dphi)^2 - |<0|xi>|^2 / 2)  >=  rhs
/// evaluated for the two readings of its right-hand side:
///   squared:  1/4 (1 - (dphi)^2 - |<0|xi>|^2)^2
///   linear:   1/4 (1 - (dphi)^2 - |<0|xi>|^2)
/// Neither reading is assumed to hold; callers inspect the flags.
struct RelationReport {
  PhaseStats stats;
  double lhs;
  double rhs_squared;
  double rhs_linear;

  bool squared_holds(double tolerance = kOperatorTolerance) const { return lhs >= rhs_squared - tolerance; }
  bool linear_holds(double tolerance = kOperatorTolerance) const { return lhs >= rhs_linear - tolerance; }
};

RelationReport uncertainty_relation_check(const FieldState& field);

/// Field with |<n|xi>|^2 = (delta_{n,n0} + delta_{n,n1}) / 2: a large number
/// spread, yet the photon exchange is detectable with certainty.
struct CounterexampleReport {
  std::size_t n0;
  std::size_t n1;
  std::size_t truncation;
  PhaseStats stats;
  bool number_spread_large;  // delta_n > 1/2
  double indistinguishability;  // photon-number U, closed form
  double interference_power;    // position-spin I, closed form
};

/// Requires n0, n1 < truncation - 1 and |n0 - n1| >= 2.
CounterexampleReport counterexample_analysis(std::size_t n0, std::size_t n1, std::size_t truncation);

}  // namespace qdist

#endif  // QDIST_PHASE_FIELD_HPP
