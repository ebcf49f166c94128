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

#include <cmath>

#include "qdist/hilbert.hpp"

namespace qdist {
namespace {

const double kRt2 = std::sqrt(0.5);
const Complex kI(0.0, 1.0);

ProjectiveMeasurement z_basis() { return ProjectiveMeasurement::computational_basis(2, {"0", "1"}); }

TEST(StateVector, InnerProductConjugatesFirstArgument) {
  StateVector a{kRt2, kI * kRt2};
  StateVector b{1.0, 0.0};
  Complex ip = inner_product(a, b);
  EXPECT_NEAR(ip.real(), kRt2, 1e-15);
  EXPECT_NEAR(ip.imag(), 0.0, 1e-15);
  Complex back = inner_product(b, a);
  EXPECT_NEAR(back.real(), kRt2, 1e-15);
  EXPECT_NEAR(inner_product(a, a).imag(), 0.0, 1e-15);
  EXPECT_NEAR(inner_product(StateVector{0.0, 1.0}, a).imag(), kRt2, 1e-15);
}

TEST(StateVector, InnerProductDimensionMismatch) {
  EXPECT_THROW(inner_product(StateVector{1.0, 0.0}, StateVector{1.0, 0.0, 0.0}), DimensionMismatch);
}

TEST(StateVector, TensorOrdersFirstFactorSlow) {
  StateVector plus{kRt2, kRt2};
  StateVector minus{kRt2, -kRt2};
  StateVector t = tensor(plus, minus);
  ASSERT_EQ(t.dimension(), 4u);
  const double expected[] = {0.5, -0.5, 0.5, -0.5};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(t[i] - expected[i]), 0.0, 1e-15);
}

TEST(StateVector, TensorRespectsDimensionCap) {
  StateVector a = StateVector::basis(64, 0);
  EXPECT_THROW(tensor(a, a, 1000), InvalidArgument);
}

TEST(StateVector, NormalizationChecks) {
  StateVector s{3.0, 4.0};
  EXPECT_FALSE(s.is_normalized());
  EXPECT_TRUE(s.normalized().is_normalized());
  EXPECT_NEAR(s.normalized()[1].real(), 0.8, 1e-15);
  EXPECT_THROW(StateVector({0.0, 0.0}).normalized(), InvalidArgument);
}

TEST(Operator, ProjectorAndKron) {
  StateVector plus{kRt2, kRt2};
  Operator p = Operator::projector_onto(plus);
  EXPECT_NEAR(max_abs((p * p - p).matrix()), 0.0, 1e-15);
  Operator k = kron(Operator::identity(2), p);
  EXPECT_EQ(k.dimension(), 4u);
  EXPECT_NEAR(k(2, 3).real(), 0.5, 1e-15);
  EXPECT_NEAR(k(0, 2).real(), 0.0, 1e-15);
}

TEST(Measurement, ComputationalBasisIsValid) {
  auto m = z_basis();
  EXPECT_TRUE(m.validation().valid());
  EXPECT_EQ(m.rank(0), 1u);
  EXPECT_EQ(m.label(1), "1");
}

TEST(Measurement, NonOrthogonalProjectorsReportOverlapNorm) {
  // |0><0| against |+><+|: the product has max entry 1/2.
  StateVector plus{kRt2, kRt2};
  ProjectiveMeasurement m({{"0", Operator::projector_onto(StateVector{1.0, 0.0})},
                           {"+", Operator::projector_onto(plus)}},
                          2);
  const auto& report = m.validation();
  ASSERT_FALSE(report.valid());
  bool saw_overlap = false;
  for (const auto& v : report.violations) {
    if (v.kind == ViolationKind::kNotOrthogonal) {
      saw_overlap = true;
      EXPECT_NEAR(v.norm, 0.5, 1e-15);
      EXPECT_EQ(v.labels.size(), 2u);
    }
  }
  EXPECT_TRUE(saw_overlap);
  EXPECT_THROW(m.require_valid(), InvalidMeasurement);
}

TEST(Measurement, IncompleteFamilyIsRejected) {
  ProjectiveMeasurement m({{"0", Operator::projector_onto(StateVector{1.0, 0.0})}}, 2);
  ASSERT_FALSE(m.validation().valid());
  EXPECT_EQ(m.validation().violations.front().kind, ViolationKind::kIncomplete);
  EXPECT_NEAR(m.validation().violations.front().norm, 1.0, 1e-15);
}

TEST(Measurement, NonHermitianIsRejected) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = 1.0;
  ProjectiveMeasurement m({{"x", Operator(a)}, {"y", Operator::identity(2)}}, 2);
  bool hermitian_flagged = false;
  for (const auto& v : m.validation().violations) hermitian_flagged |= v.kind == ViolationKind::kNotHermitian;
  EXPECT_TRUE(hermitian_flagged);
}

TEST(Measurement, DuplicateLabelsRejected) {
  EXPECT_THROW(ProjectiveMeasurement({{"a", Operator::projector_onto(StateVector{1.0, 0.0})},
                                      {"a", Operator::projector_onto(StateVector{0.0, 1.0})}},
                                     2),
               InvalidArgument);
}

TEST(Measurement, SupportLayoutMatchesDenseLift) {
  // Outcome on the second of three qubits, identity elsewhere.
  StateVector plus{kRt2, kRt2};
  StateVector minus{kRt2, -kRt2};
  ProjectiveMeasurement m({{"+", Operator::projector_onto(plus)}, {"-", Operator::projector_onto(minus)}},
                          {2, 2, 2}, {1});
  EXPECT_EQ(m.dimension(), 8u);
  EXPECT_EQ(m.local_dimension(), 2u);
  EXPECT_EQ(m.rank(0), 4u);
  Operator dense = kron(kron(Operator::identity(2), Operator::projector_onto(plus)), Operator::identity(2));
  EXPECT_NEAR(max_abs((m.projector(0) - dense).matrix()), 0.0, 1e-15);
  EXPECT_TRUE(m.validation().valid());

  StateVector a = StateVector::basis(8, 0);
  StateVector b = StateVector::basis(8, 2);
  auto elems = m.matrix_elements(a, b);
  EXPECT_NEAR(elems[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(elems[1].real(), -0.5, 1e-15);
}

TEST(Refine, BlocksCombineIntoRankOneProducts) {
  // {0,1},{2,3} against {0,2},{1,3} in the standard basis of C^4.
  Matrix basis = Matrix::Identity(4, 4);
  auto m1 = ProjectiveMeasurement::from_basis_blocks(basis, {{0, 1}, {2, 3}});
  auto m2 = ProjectiveMeasurement::from_basis_blocks(basis, {{0, 2}, {1, 3}});
  auto r = refine(m1, m2);
  ASSERT_EQ(r.size(), 4u);
  for (std::size_t k = 0; k < r.size(); ++k) EXPECT_EQ(r.rank(k), 1u);
  EXPECT_TRUE(r.validation().valid());
  EXPECT_EQ(r.label(0), "(0,0)");
}

TEST(Refine, DropsEmptyProducts) {
  Matrix basis = Matrix::Identity(3, 3);
  auto m1 = ProjectiveMeasurement::from_basis_blocks(basis, {{0}, {1, 2}});
  auto m2 = ProjectiveMeasurement::from_basis_blocks(basis, {{0, 1}, {2}});
  EXPECT_EQ(refine(m1, m2).size(), 3u);
}

TEST(Refine, IncompatibleMeasurementsThrow) {
  StateVector plus{kRt2, kRt2};
  StateVector minus{kRt2, -kRt2};
  ProjectiveMeasurement x({{"+", Operator::projector_onto(plus)}, {"-", Operator::projector_onto(minus)}}, 2);
  EXPECT_THROW(refine(z_basis(), x), IncompatibleMeasurements);
  EXPECT_THROW(refine(z_basis(), ProjectiveMeasurement::trivial(3)), DimensionMismatch);
}

TEST(Refine, TrivialIsNeutral) {
  auto r = refine(z_basis(), ProjectiveMeasurement::trivial(2));
  EXPECT_EQ(r.size(), 2u);
}

}  // namespace
}  // namespace qdist
