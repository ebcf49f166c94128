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

#include "qdist/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qdist {

namespace {

constexpr double kTailTolerance = 1e-12;

void require_truncation(std::size_t truncation) {
  if (truncation < 1) throw InvalidArgument("field truncation must be >= 1");
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldState

FieldState FieldState::fock(std::size_t n, std::size_t truncation) {
  require_truncation(truncation);
  if (n >= truncation) {
    throw TruncationError("Fock state |" + std::to_string(n) + "> needs truncation > " + std::to_string(n));
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(truncation));
  v(static_cast<Eigen::Index>(n)) = 1.0;
  return FieldState(std::move(v));
}

FieldState FieldState::coherent(Complex alpha, std::size_t truncation) {
  require_truncation(truncation);
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw InvalidArgument("coherent amplitude must be finite");
  }
  const auto n_max = static_cast<Eigen::Index>(truncation);
  Vector v(n_max);
  Complex a = std::exp(-0.5 * std::norm(alpha));
  for (Eigen::Index n = 0; n < n_max; ++n) {
    v(n) = a;
    a *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  // Poisson tail beyond the truncation; the terms decay once n > |alpha|^2.
  double tail = 0.0;
  for (std::size_t n = truncation;; ++n) {
    const double term = std::norm(a);
    tail += term;
    if (static_cast<double>(n) > std::norm(alpha) && term <= tail * 1e-17) break;
    if (n > truncation + 100000) break;
    a *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  if (tail >= kTailTolerance) {
    std::ostringstream os;
    os << "coherent state alpha = " << alpha << " loses mass " << tail << " beyond truncation " << truncation;
    throw TruncationError(os.str());
  }
  v /= v.norm();
  return FieldState(std::move(v));
}

FieldState FieldState::two_peak(std::size_t n0, std::size_t n1, std::size_t truncation) {
  require_truncation(truncation);
  if (n0 == n1) throw InvalidArgument("two-peak state needs distinct photon numbers");
  if (n0 >= truncation || n1 >= truncation) throw TruncationError("two-peak photon numbers exceed truncation");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(truncation));
  v(static_cast<Eigen::Index>(n0)) = std::numbers::sqrt2 / 2.0;
  v(static_cast<Eigen::Index>(n1)) = std::numbers::sqrt2 / 2.0;
  return FieldState(std::move(v));
}

FieldState FieldState::from_amplitudes(Vector amplitudes) {
  if (amplitudes.size() < 1) throw InvalidArgument("field state needs at least one amplitude");
  if (!amplitudes.allFinite()) throw InvalidArgument("field amplitudes must be finite");
  if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "field state is not normalized (<xi|xi> = " << amplitudes.squaredNorm() << ")";
    throw InvalidArgument(os.str());
  }
  return FieldState(std::move(amplitudes));
}

std::vector<double> FieldState::number_distribution() const {
  std::vector<double> out(truncation());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = std::norm(amplitude(n));
  return out;
}

FieldState FieldState::shifted(double phase) const {
  const auto n_max = amplitudes_.size();
  if (std::abs(amplitudes_(n_max - 1)) > kTailTolerance) {
    std::ostringstream os;
    os << "adding a photon loses amplitude " << std::abs(amplitudes_(n_max - 1)) << " at n = " << n_max - 1
       << "; increase the truncation";
    throw TruncationError(os.str());
  }
  Vector v = Vector::Zero(n_max);
  v.tail(n_max - 1) = std::polar(1.0, phase) * amplitudes_.head(n_max - 1);
  return FieldState(std::move(v));
}

// ---------------------------------------------------------------------------
// Scenario

void InterferometerScenario::validate() const {
  if (!std::isfinite(chi) || !std::isfinite(omega) || !std::isfinite(time)) {
    throw InvalidArgument("scenario phase, frequency and time must be finite");
  }
  if (grid_points < 1) throw InvalidArgument("grid must have at least one point per beam");
  if (envelope.size() != 0) {
    if (static_cast<std::size_t>(envelope.size()) != grid_points) {
      throw InvalidArgument("envelope must have one amplitude per grid point");
    }
    if (!envelope.allFinite() || std::abs(envelope.squaredNorm() - 1.0) > kNormTolerance) {
      throw InvalidArgument("envelope must be normalized");
    }
  }
}

Vector InterferometerScenario::packet() const {
  if (envelope.size() != 0) return envelope;
  const auto m = static_cast<Eigen::Index>(grid_points);
  return Vector::Constant(m, Complex(1.0 / std::sqrt(static_cast<double>(grid_points)), 0.0));
}

std::vector<std::size_t> InterferometerScenario::subsystem_dims() const {
  return {2, 2, field.truncation(), grid_points};
}

std::size_t InterferometerScenario::dimension() const { return 4 * field.truncation() * grid_points; }

namespace {

// beam (x) spin (x) field (x) grid, row-major.
Vector product_state(const std::array<Complex, 2>& beam, std::size_t spin, const Vector& field, const Vector& packet) {
  const auto n_field = field.size();
  const auto n_grid = packet.size();
  Vector out = Vector::Zero(4 * n_field * n_grid);
  for (Eigen::Index b = 0; b < 2; ++b) {
    const Eigen::Index base = (b * 2 + static_cast<Eigen::Index>(spin)) * n_field;
    for (Eigen::Index n = 0; n < n_field; ++n) {
      out.segment((base + n) * n_grid, n_grid) = beam[static_cast<std::size_t>(b)] * field(n) * packet;
    }
  }
  return out;
}

}  // namespace

PathStates build_paths(const InterferometerScenario& s) {
  s.validate();
  const double h = std::numbers::sqrt2 / 2.0;
  // Each path reaches both emerging beams with equal weight; the B components
  // of the two paths differ in sign.
  const std::array<Complex, 2> path1{h, h};
  const std::array<Complex, 2> path2{h, -h};
  const Vector packet = s.packet();

  StateVector psi1(product_state(path1, 0, s.field.amplitudes(), packet));
  Vector second;
  if (s.flipper_on) {
    const double wt = s.omega * s.time;
    const FieldState field2 = s.field.shifted(-wt);
    second = std::polar(1.0, wt) * product_state(path2, 1, field2.amplitudes(), packet);
  } else {
    second = product_state(path2, 0, s.field.amplitudes(), packet);
  }
  StateVector psi2(std::move(second));

  const double overlap = std::abs(inner_product(psi1, psi2));
  if (overlap > kNormTolerance || !psi1.is_normalized() || !psi2.is_normalized()) {
    std::ostringstream os;
    os << "path states are not orthonormal (|<psi1|psi2>| = " << overlap << ")";
    throw InvariantViolation(os.str());
  }
  return {std::move(psi1), std::move(psi2)};
}

StateVector emerging_state(const InterferometerScenario& s) {
  const auto paths = build_paths(s);
  return StateVector((paths.psi1.amplitudes() + std::polar(1.0, s.chi) * paths.psi2.amplitudes()) /
                     std::numbers::sqrt2);
}

ProjectiveMeasurement position_spin_measurement(const InterferometerScenario& s) {
  s.validate();
  const std::size_t m = s.grid_points;
  const auto local = static_cast<Eigen::Index>(4 * m);
  // Spin along y: (|+> +- |->)/sqrt(2) in the z basis.
  const double h = std::numbers::sqrt2 / 2.0;
  const std::array<std::array<Complex, 2>, 2> spin_y{{{h, h}, {h, -h}}};
  const char* beams[] = {"A", "B"};
  const char* signs[] = {"+", "-"};

  std::vector<Outcome> outcomes;
  outcomes.reserve(4 * m);
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t sy = 0; sy < 2; ++sy) {
        Vector v = Vector::Zero(local);
        for (std::size_t sz = 0; sz < 2; ++sz) v(static_cast<Eigen::Index>((b * 2 + sz) * m + x)) = spin_y[sy][sz];
        outcomes.push_back({std::string(beams[b]) + "/" + std::to_string(x) + "/" + signs[sy],
                            Operator(v * v.adjoint())});
      }
    }
  }
  return ProjectiveMeasurement(std::move(outcomes), s.subsystem_dims(), {kBeamAxis, kSpinAxis, kGridAxis});
}

ProjectiveMeasurement photon_number_measurement(std::size_t truncation, std::vector<std::size_t> subsystem_dims,
                                                std::size_t field_axis) {
  if (truncation < 1) throw InvalidArgument("photon-number measurement needs truncation >= 1");
  if (field_axis >= subsystem_dims.size() || subsystem_dims[field_axis] != truncation) {
    throw DimensionMismatch("field axis does not have dimension " + std::to_string(truncation));
  }
  std::vector<std::string> labels;
  for (std::size_t n = 0; n < truncation; ++n) labels.push_back("n=" + std::to_string(n));
  auto basis = ProjectiveMeasurement::computational_basis(truncation, std::move(labels));
  return ProjectiveMeasurement(basis.outcomes(), std::move(subsystem_dims), {field_axis});
}

ProjectiveMeasurement photon_number_measurement(const InterferometerScenario& s) {
  s.validate();
  return photon_number_measurement(s.field.truncation(), s.subsystem_dims(), kFieldAxis);
}

ProjectiveMeasurement beam_measurement(const InterferometerScenario& s) {
  s.validate();
  auto basis = ProjectiveMeasurement::computational_basis(2, {"A", "B"});
  return ProjectiveMeasurement(basis.outcomes(), s.subsystem_dims(), {kBeamAxis});
}

// ---------------------------------------------------------------------------
// Closed forms

double interference_power_closed_form(const FieldState& field) {
  Complex sum = 0.0;
  for (std::size_t n = 0; n + 1 < field.truncation(); ++n) sum += std::conj(field.amplitude(n)) * field.amplitude(n + 1);
  return std::abs(sum);
}

double indistinguishability_closed_form(const FieldState& field) {
  double sum = 0.0;
  for (std::size_t n = 0; n + 1 < field.truncation(); ++n) {
    sum += std::sqrt(std::norm(field.amplitude(n)) * std::norm(field.amplitude(n + 1)));
  }
  return sum;
}

bool IdealFringeReport::holds(double tolerance) const {
  return std::abs(beam_a_at_zero - 1.0) <= tolerance && std::abs(beam_b_at_pi - 1.0) <= tolerance &&
         std::abs(beam_a_at_half_pi - 0.5) <= tolerance && std::abs(beam_b_at_half_pi - 0.5) <= tolerance &&
         std::abs(visibility_a - 1.0) <= tolerance && std::abs(visibility_b - 1.0) <= tolerance;
}

IdealFringeReport ideal_fringe_check(const InterferometerScenario& s) {
  if (s.flipper_on) throw InvalidArgument("ideal fringe check requires the spin flipper to be off");
  const auto paths = build_paths(s);
  const auto beams = beam_measurement(s);
  const auto at = [&](double chi) {
    return superposition_probability(balanced_superposition(chi), paths.psi1, paths.psi2, beams);
  };
  const auto zero = at(0.0);
  const auto half = at(std::numbers::pi / 2.0);
  const auto pi = at(std::numbers::pi);
  const auto vis = visibility(paths.psi1, paths.psi2, beams);

  IdealFringeReport r{};
  r.beam_a_at_zero = zero.probability(0);
  r.beam_b_at_pi = pi.probability(1);
  r.beam_a_at_half_pi = half.probability(0);
  r.beam_b_at_half_pi = half.probability(1);
  r.visibility_a = vis[0].value.value_or(0.0);
  r.visibility_b = vis[1].value.value_or(0.0);
  return r;
}

}  // namespace qdist
