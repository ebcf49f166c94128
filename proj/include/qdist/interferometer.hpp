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

#ifndef QDIST_INTERFEROMETER_HPP
#define QDIST_INTERFEROMETER_HPP

#include <cstddef>
#include <vector>

#include "qdist/hilbert.hpp"
#include "qdist/measures.hpp"

namespace qdist {

/// Pure state of the flipper field on the truncated Fock basis |0>..|N-1>.
class FieldState {
 public:
  /// |n> on a space of the given truncation (> n).
  static FieldState fock(std::size_t n, std::size_t truncation);
  /// Coherent state |alpha>; throws TruncationError if the mass beyond the
  /// truncation is 1e-12 or more.
  static FieldState coherent(Complex alpha, std::size_t truncation);
  /// Equal real amplitudes 1/sqrt(2) on |n0> and |n1>.
  static FieldState two_peak(std::size_t n0, std::size_t n1, std::size_t truncation);
  /// Explicit amplitudes <n|xi>, normalized within 1e-12.
  static FieldState from_amplitudes(Vector amplitudes);

  std::size_t truncation() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t n) const { return amplitudes_(static_cast<Eigen::Index>(n)); }
  StateVector as_state() const { return StateVector(amplitudes_); }
  /// |<n|xi>|^2
  std::vector<double> number_distribution() const;

  /// sum_n e^{i phase} |n+1><n|xi>, i.e. one photon added. Throws
  /// TruncationError when the top amplitude exceeds 1e-12 and would be lost.
  FieldState shifted(double phase = 0.0) const;

 private:
  explicit FieldState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {}

  Vector amplitudes_;
};

/// Subsystem order of the interferometer space: beam (A=0, B=1), spin
/// (+=0, -=1), field (Fock n), position grid.
inline constexpr std::size_t kBeamAxis = 0;
inline constexpr std::size_t kSpinAxis = 1;
inline constexpr std::size_t kFieldAxis = 2;
inline constexpr std::size_t kGridAxis = 3;

struct InterferometerScenario {
  double chi = 0.0;
  FieldState field = FieldState::fock(0, 2);
  bool flipper_on = false;
  double omega = 0.0;  // rad/s
  double time = 0.0;   // s
  std::size_t grid_points = 1;
  /// Shared packet shape on the grid; empty means uniform.
  Vector envelope;

  void validate() const;
  Vector packet() const;
  std::vector<std::size_t> subsystem_dims() const;
  std::size_t dimension() const;
};

struct PathStates {
  StateVector psi1;
  StateVector psi2;
};

/// The two path states behind the interferometer. Path 2 carries the spin
/// flipper; with it switched on the spin of path 2 is reversed and the field
/// gains one photon.
PathStates build_paths(const InterferometerScenario& s);

/// (psi1 + e^{i chi} psi2) / sqrt(2)
StateVector emerging_state(const InterferometerScenario& s);

/// Beam (A/B) x grid point x spin along y, identity on the field. Labels
/// "A/0/+" = (beam, grid point, spin-y sign).
ProjectiveMeasurement position_spin_measurement(const InterferometerScenario& s);

/// |n><n| on the field axis of a space with the given subsystem dimensions.
/// Labels "n=0", "n=1", ...
ProjectiveMeasurement photon_number_measurement(std::size_t truncation, std::vector<std::size_t> subsystem_dims,
                                                std::size_t field_axis = kFieldAxis);
ProjectiveMeasurement photon_number_measurement(const InterferometerScenario& s);

/// Which emerging beam, labels "A" and "B".
ProjectiveMeasurement beam_measurement(const InterferometerScenario& s);

/// |sum_n <xi|n><n+1|xi>|, the position-spin interference power with the flipper on.
double interference_power_closed_form(const FieldState& field);

/// sum_n |<n|xi>| |<n+1|xi>|, the photon-number indistinguishability with the flipper on.
double indistinguishability_closed_form(const FieldState& field);

struct IdealFringeReport {
  double beam_a_at_zero;
  double beam_b_at_pi;
  double beam_a_at_half_pi;
  double beam_b_at_half_pi;
  double visibility_a;
  double visibility_b;

  bool holds(double tolerance = kOperatorTolerance) const;
};

/// Beam probabilities at chi = 0, pi/2, pi and the beam visibilities for a
/// scenario with the flipper off.
IdealFringeReport ideal_fringe_check(const InterferometerScenario& s);

}  // namespace qdist

#endif  // QDIST_INTERFEROMETER_HPP
