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

#include "qdist/phase_field.hpp"
#include "qdist/random.hpp"

namespace qdist {
namespace {

class PhaseOperatorTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PhaseOperatorTest, PartialIsometryIdentities) {
  const std::size_t n = GetParam();
  const auto e = phase_operator(n).matrix();
  Matrix vac = Matrix::Zero(n, n);
  vac(0, 0) = 1.0;
  Matrix top = Matrix::Zero(n, n);
  top(n - 1, n - 1) = 1.0;
  const Matrix id = Matrix::Identity(n, n);
  EXPECT_LE(max_abs(e.adjoint() * e - (id - vac)), 1e-12);
  EXPECT_LE(max_abs(e * e.adjoint() - (id - top)), 1e-12);
  EXPECT_NEAR(max_abs(e.adjoint() * e - id), 1.0, 1e-12);
  EXPECT_EQ(e(0, 1), Complex(1.0, 0.0));
}

INSTANTIATE_TEST_SUITE_P(Truncations, PhaseOperatorTest, ::testing::Values(2, 8, 64));

TEST(PhaseOperator, RejectsTinySpace) { EXPECT_THROW(phase_operator(1), InvalidArgument); }

TEST(PhaseStats, TwoPeakState) {
  auto s = phase_stats(FieldState::two_peak(5, 15, 20));
  EXPECT_NEAR(s.delta_n, 5.0, 1e-12);
  EXPECT_NEAR(s.mean_n, 10.0, 1e-12);
  EXPECT_EQ(std::abs(s.exp_phase), 0.0);
  EXPECT_NEAR(s.delta_phi_sq, 1.0, 1e-15);
}

TEST(PhaseStats, VacuumAndFock) {
  auto v = phase_stats(FieldState::fock(0, 4));
  EXPECT_NEAR(v.vacuum_prob, 1.0, 1e-15);
  EXPECT_NEAR(v.delta_phi_sq, 0.0, 1e-15);
  auto f = phase_stats(FieldState::fock(3, 6));
  EXPECT_NEAR(f.delta_phi_sq, 1.0, 1e-15);
  EXPECT_NEAR(f.delta_n, 0.0, 1e-15);
}

TEST(PhaseStats, ExpectationMatchesInterferenceClosedForm) {
  Rng rng(derive_seed(31, 0));
  for (int t = 0; t < 200; ++t) {
    auto field = random_field(uniform_index(rng, 2, 32), rng);
    auto s = phase_stats(field);
    EXPECT_NEAR(std::abs(s.exp_phase), interference_power_closed_form(field), 1e-14);
    // |<E>| <= sqrt(1 - P0) bounds dphi^2 below by min_y (y^2 - y) = -1/4.
    EXPECT_GE(s.delta_phi_sq, 1.0 - std::sqrt(std::max(0.0, 1.0 - s.vacuum_prob)) - s.vacuum_prob - 1e-12);
    EXPECT_GE(s.delta_phi_sq, -0.25 - 1e-12);
    EXPECT_LE(s.delta_phi_sq, 1.0 + 1e-12);
    EXPECT_LE(std::abs(s.exp_phase), 1.0 + 1e-12);
  }
}

TEST(PhaseStats, NegativeSpreadNearVacuum) {
  Vector v(2);
  v << std::sqrt(0.8), std::sqrt(0.2);
  EXPECT_NEAR(phase_stats(FieldState::from_amplitudes(v)).delta_phi_sq, -0.2, 1e-15);
  v << 0.5, std::sqrt(0.75);
  EXPECT_NEAR(phase_stats(FieldState::from_amplitudes(v)).delta_phi_sq, 0.75 - std::sqrt(0.75) / 2.0, 1e-15);
}

TEST(PhaseStats, CoherentStatesSharpenPhase) {
  // The vacuum term dominates below |alpha| ~ 1, so the monotone range starts near 2.
  double previous = 2.0;
  for (double alpha : {2.0, 3.0, 4.0, 5.0, 6.0}) {
    auto s = phase_stats(FieldState::coherent(alpha, 90));
    EXPECT_LT(s.delta_phi_sq, previous);
    EXPECT_NEAR(s.delta_n, alpha, 1e-8);
    previous = s.delta_phi_sq;
  }
}

TEST(Relation, TrivialCases) {
  auto vac = uncertainty_relation_check(FieldState::fock(0, 4));
  EXPECT_NEAR(vac.lhs, 0.0, 1e-15);
  EXPECT_NEAR(vac.rhs_squared, 0.0, 1e-15);
  EXPECT_TRUE(vac.squared_holds());
  auto fock = uncertainty_relation_check(FieldState::fock(2, 5));
  EXPECT_NEAR(fock.lhs, 0.0, 1e-15);
  EXPECT_NEAR(fock.rhs_squared, 0.0, 1e-15);
  EXPECT_NEAR(fock.rhs_linear, 0.0, 1e-15);
  EXPECT_TRUE(fock.squared_holds());
  EXPECT_TRUE(fock.linear_holds());
}

TEST(Relation, EqualSuperpositionOfVacuumAndOne) {
  // dn^2 = 1/4, dphi^2 = 1 - 1/2 - 1/2 = 0, P0 = 1/2.
  Vector v(3);
  v << std::sqrt(0.5), std::sqrt(0.5), 0.0;
  auto r = uncertainty_relation_check(FieldState::from_amplitudes(v));
  EXPECT_NEAR(r.lhs, -1.0 / 16.0, 1e-15);
  EXPECT_NEAR(r.rhs_squared, 1.0 / 16.0, 1e-15);
  EXPECT_NEAR(r.rhs_linear, 1.0 / 8.0, 1e-15);
  EXPECT_FALSE(r.squared_holds());
  EXPECT_FALSE(r.linear_holds());
}

TEST(Counterexample, DistantPeaks) {
  auto r = counterexample_analysis(5, 15, 20);
  EXPECT_NEAR(r.stats.delta_n, 5.0, 1e-12);
  EXPECT_TRUE(r.number_spread_large);
  EXPECT_LE(std::abs(r.indistinguishability), 1e-14);
  EXPECT_LE(std::abs(r.interference_power), 1e-14);
  EXPECT_NEAR(r.stats.delta_phi_sq, 1.0, 1e-15);
  auto small = counterexample_analysis(0, 2, 4);
  EXPECT_NEAR(small.stats.delta_n, 1.0, 1e-15);
  EXPECT_EQ(small.indistinguishability, 0.0);
}

TEST(Counterexample, RejectsAdjacentOrOutOfRangePeaks) {
  EXPECT_THROW(counterexample_analysis(5, 6, 20), InvalidArgument);
  EXPECT_THROW(counterexample_analysis(5, 19, 20), InvalidArgument);
}

}  // namespace
}  // namespace qdist
