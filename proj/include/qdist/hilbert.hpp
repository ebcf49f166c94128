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

#ifndef QDIST_HILBERT_HPP
#define QDIST_HILBERT_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdist/errors.hpp"

namespace qdist {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Largest entry modulus, the norm used for every operator identity check.
double max_abs(const Matrix& m);

/// Pure state on a finite-dimensional Hilbert space.
///
/// Amplitudes are stored as given; nothing is normalized implicitly. Basis
/// labels are optional and, when present, number exactly one per amplitude.
class StateVector {
 public:
  explicit StateVector(Vector amplitudes, std::vector<std::string> basis_labels = {});
  StateVector(std::initializer_list<Complex> amplitudes);

  /// Unit vector e_index in the given dimension.
  static StateVector basis(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  double norm() const { return amplitudes_.norm(); }
  bool is_normalized(double tolerance = kNormTolerance) const;
  StateVector normalized() const;
  StateVector scaled(Complex factor) const;

 private:
  Vector amplitudes_;
  std::vector<std::string> basis_labels_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

/// a (x) b with the index of `a` outermost.
StateVector tensor(const StateVector& a, const StateVector& b,
                   std::size_t max_dimension = kDefaultDimensionCap);

/// Dense square complex matrix.
class Operator {
 public:
  explicit Operator(Matrix entries);

  static Operator identity(std::size_t dimension);
  static Operator zero(std::size_t dimension);
  /// |a><b|
  static Operator outer(const StateVector& a, const StateVector& b);
  /// |v><v| / <v|v>
  static Operator projector_onto(const StateVector& v);

  std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  Operator adjoint() const { return Operator(entries_.adjoint()); }
  StateVector apply(const StateVector& v) const;
  double trace_real() const { return entries_.trace().real(); }

  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);

 private:
  Matrix entries_;
};

/// Kronecker product a (x) b, `a` outermost.
Operator kron(const Operator& a, const Operator& b);

/// ||AB - BA|| in the max-entry norm.
double commutator_norm(const Operator& a, const Operator& b);

// ---------------------------------------------------------------------------
// Projective measurements

struct Outcome {
  std::string label;
  Operator projector;
};

enum class ViolationKind { kNotHermitian, kNotIdempotent, kNotOrthogonal, kIncomplete };

struct Violation {
  ViolationKind kind;
  std::vector<std::string> labels;  // outcomes involved (empty for completeness)
  double norm;                      // offending max-entry norm
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

std::string to_string(ViolationKind kind);

/// A family of projectors {D_k} with outcome labels.
///
/// The space may be declared as a tensor product of subsystems. Projectors are
/// then stored on the `support` subsystems only and act as the identity on the
/// rest, so measurements on large product spaces (e.g. a detector that ignores
/// the field factor) stay small. A measurement built with the plain
/// constructor has a single subsystem and full support.
///
/// Construction does not validate; see validate_measurement(). The validation
/// result is computed once and shared between copies.
class ProjectiveMeasurement {
 public:
  ProjectiveMeasurement(std::vector<Outcome> outcomes, std::size_t dimension);
  ProjectiveMeasurement(std::vector<Outcome> outcomes, std::vector<std::size_t> subsystem_dims,
                        std::vector<std::size_t> support);

  /// {|i><i|} labelled "0", "1", ... (or by the given labels).
  static ProjectiveMeasurement computational_basis(std::size_t dimension,
                                                   std::vector<std::string> labels = {});
  /// The single-outcome measurement {I}.
  static ProjectiveMeasurement trivial(std::size_t dimension);
  /// Projectors onto spans of the listed columns of `basis`.
  static ProjectiveMeasurement from_basis_blocks(const Matrix& basis,
                                                 const std::vector<std::vector<std::size_t>>& blocks);

  std::size_t dimension() const;
  std::size_t local_dimension() const;
  std::size_t size() const { return outcomes_.size(); }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const std::string& label(std::size_t k) const { return outcomes_.at(k).label; }
  const std::vector<std::size_t>& subsystem_dims() const;
  const std::vector<std::size_t>& support() const;

  /// D_k on the full space (materialized; quadratic in the dimension).
  Operator projector(std::size_t k) const;
  /// Rank of D_k on the full space, from its trace.
  std::size_t rank(std::size_t k) const;

  /// <a|D_k|b> for every outcome k.
  std::vector<Complex> matrix_elements(const StateVector& a, const StateVector& b) const;
  StateVector apply(std::size_t k, const StateVector& v) const;

  const ValidationReport& validation() const;
  /// Throws InvalidMeasurement when validation() is not clean.
  void require_valid() const;

 private:
  struct Layout;
  struct ValidationCache;

  std::vector<Outcome> outcomes_;
  std::shared_ptr<const Layout> layout_;
  std::shared_ptr<ValidationCache> cache_;
};

/// Checks hermiticity, idempotence, pairwise orthogonality and completeness,
/// each at kOperatorTolerance in the max-entry norm.
ValidationReport validate_measurement(const ProjectiveMeasurement& m);

/// {D_k D'_l} for commuting valid measurements, zero products dropped. Labels
/// are "(k,l)".
ProjectiveMeasurement refine(const ProjectiveMeasurement& m1, const ProjectiveMeasurement& m2);

}  // namespace qdist

#endif  // QDIST_HILBERT_HPP
