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

#include "qdist/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace qdist {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Vector amplitudes, std::vector<std::string> basis_labels)
    : amplitudes_(std::move(amplitudes)), basis_labels_(std::move(basis_labels)) {
  if (amplitudes_.size() < 1) throw InvalidArgument("state vector must have dimension >= 1");
  if (!amplitudes_.allFinite()) throw InvalidArgument("state vector has non-finite amplitudes");
  if (!basis_labels_.empty() && basis_labels_.size() != dimension()) {
    throw InvalidArgument("state vector has " + std::to_string(basis_labels_.size()) +
                          " basis labels for dimension " + std::to_string(dimension()));
  }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(Vector::Map(amplitudes.begin(), static_cast<Eigen::Index>(amplitudes.size()))) {}

StateVector StateVector::basis(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw InvalidArgument("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

bool StateVector::is_normalized(double tolerance) const {
  return std::abs(amplitudes_.squaredNorm() - 1.0) <= tolerance;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  return StateVector(amplitudes_ / n, basis_labels_);
}

StateVector StateVector::scaled(Complex factor) const {
  return StateVector(amplitudes_ * factor, basis_labels_);
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("inner product of dimensions " + std::to_string(a.dimension()) +
                            " and " + std::to_string(b.dimension()));
  }
  return a.amplitudes().dot(b.amplitudes());
}

StateVector tensor(const StateVector& a, const StateVector& b, std::size_t max_dimension) {
  const std::size_t da = a.dimension();
  const std::size_t db = b.dimension();
  if (da > max_dimension / db) {
    throw InvalidArgument("tensor product dimension exceeds cap of " + std::to_string(max_dimension));
  }
  Vector out(static_cast<Eigen::Index>(da * db));
  for (std::size_t i = 0; i < da; ++i) {
    out.segment(static_cast<Eigen::Index>(i * db), static_cast<Eigen::Index>(db)) = a[i] * b.amplitudes();
  }
  std::vector<std::string> labels;
  if (!a.basis_labels().empty() && !b.basis_labels().empty()) {
    labels.reserve(da * db);
    for (const auto& la : a.basis_labels()) {
      for (const auto& lb : b.basis_labels()) labels.push_back(la + "," + lb);
    }
  }
  return StateVector(std::move(out), std::move(labels));
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw InvalidArgument("operator must be square");
  if (entries_.rows() < 1) throw InvalidArgument("operator must have dimension >= 1");
  if (!entries_.allFinite()) throw InvalidArgument("operator has non-finite entries");
}

Operator Operator::identity(std::size_t dimension) {
  const auto n = static_cast<Eigen::Index>(dimension);
  return Operator(Matrix::Identity(n, n));
}

Operator Operator::zero(std::size_t dimension) {
  const auto n = static_cast<Eigen::Index>(dimension);
  return Operator(Matrix::Zero(n, n));
}

Operator Operator::outer(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("outer product of unequal dimensions");
  return Operator(a.amplitudes() * b.amplitudes().adjoint());
}

Operator Operator::projector_onto(const StateVector& v) {
  const double n2 = v.amplitudes().squaredNorm();
  if (n2 == 0.0) throw InvalidArgument("cannot project onto the zero vector");
  return Operator(v.amplitudes() * v.amplitudes().adjoint() / n2);
}

StateVector Operator::apply(const StateVector& v) const {
  if (v.dimension() != dimension()) throw DimensionMismatch("operator applied to vector of wrong dimension");
  return StateVector(entries_ * v.amplitudes());
}

namespace {

void require_same_dimension(const Operator& a, const Operator& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("operators of dimensions " + std::to_string(a.dimension()) + " and " +
                            std::to_string(b.dimension()));
  }
}

}  // namespace

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dimension(a, b);
  return Operator(a.entries_ * b.entries_);
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dimension(a, b);
  return Operator(a.entries_ + b.entries_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dimension(a, b);
  return Operator(a.entries_ - b.entries_);
}

Operator kron(const Operator& a, const Operator& b) {
  const Eigen::Index na = a.matrix().rows();
  const Eigen::Index nb = b.matrix().rows();
  Matrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) out.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
  }
  return Operator(std::move(out));
}

double commutator_norm(const Operator& a, const Operator& b) {
  require_same_dimension(a, b);
  return max_abs(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

// ---------------------------------------------------------------------------
// ProjectiveMeasurement

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNotHermitian: return "not Hermitian";
    case ViolationKind::kNotIdempotent: return "not idempotent";
    case ViolationKind::kNotOrthogonal: return "not orthogonal";
    case ViolationKind::kIncomplete: return "incomplete";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream os;
  os.precision(3);
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << "; ";
    os << to_string(v.kind);
    if (!v.labels.empty()) {
      os << " [";
      for (std::size_t j = 0; j < v.labels.size(); ++j) os << (j ? ", " : "") << v.labels[j];
      os << "]";
    }
    os << " (norm " << v.norm << ")";
  }
  return os.str();
}

struct ProjectiveMeasurement::Layout {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> support;
  std::size_t dimension = 1;
  std::size_t local_dimension = 1;
  std::size_t environment = 1;
  // gather[env * local_dimension + local] = global index
  std::vector<std::size_t> gather;
};

struct ProjectiveMeasurement::ValidationCache {
  std::once_flag once;
  ValidationReport report;
};

namespace {

std::size_t checked_product(const std::vector<std::size_t>& dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d < 1) throw InvalidArgument("subsystem dimension must be >= 1");
    if (total > kDefaultDimensionCap / d) throw InvalidArgument("measurement dimension exceeds cap");
    total *= d;
  }
  return total;
}

// Digits of a row-major index over `dims`.
std::vector<std::size_t> digits_of(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = index % dims[i];
    index /= dims[i];
  }
  return digits;
}

// Embeds an operator acting on subsystems `from` into one acting on the
// superset `to` (identity on to \ from). Both index lists are sorted.
Matrix lift(const Matrix& op, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& from,
            const std::vector<std::size_t>& to) {
  std::vector<std::size_t> to_dims;
  for (std::size_t s : to) to_dims.push_back(dims[s]);
  const std::size_t n = checked_product(to_dims);
  std::vector<std::size_t> inner(n), outer(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto digits = digits_of(i, to_dims);
    std::size_t a = 0, b = 0;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (std::binary_search(from.begin(), from.end(), to[j])) {
        a = a * to_dims[j] + digits[j];
      } else {
        b = b * to_dims[j] + digits[j];
      }
    }
    inner[i] = a;
    outer[i] = b;
  }
  const auto ni = static_cast<Eigen::Index>(n);
  Matrix out = Matrix::Zero(ni, ni);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (outer[i] == outer[j]) {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            op(static_cast<Eigen::Index>(inner[i]), static_cast<Eigen::Index>(inner[j]));
      }
    }
  }
  return out;
}

ValidationReport validate_local(const std::vector<Outcome>& outcomes, std::size_t local_dim) {
  ValidationReport report;
  const auto n = static_cast<Eigen::Index>(local_dim);
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& o : outcomes) {
    const Matrix& p = o.projector.matrix();
    if (double h = max_abs(p - p.adjoint()); h > kOperatorTolerance) {
      report.violations.push_back({ViolationKind::kNotHermitian, {o.label}, h});
    }
    if (double e = max_abs(p * p - p); e > kOperatorTolerance) {
      report.violations.push_back({ViolationKind::kNotIdempotent, {o.label}, e});
    }
    sum += p;
  }
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    for (std::size_t l = k + 1; l < outcomes.size(); ++l) {
      const double o = max_abs(outcomes[k].projector.matrix() * outcomes[l].projector.matrix());
      if (o > kOperatorTolerance) {
        report.violations.push_back({ViolationKind::kNotOrthogonal, {outcomes[k].label, outcomes[l].label}, o});
      }
    }
  }
  if (double c = max_abs(sum - Matrix::Identity(n, n)); c > kOperatorTolerance) {
    report.violations.push_back({ViolationKind::kIncomplete, {}, c});
  }
  return report;
}

}  // namespace

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Outcome> outcomes, std::size_t dimension)
    : ProjectiveMeasurement(std::move(outcomes), std::vector<std::size_t>{dimension}, std::vector<std::size_t>{0}) {}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Outcome> outcomes, std::vector<std::size_t> subsystem_dims,
                                             std::vector<std::size_t> support)
    : outcomes_(std::move(outcomes)), cache_(std::make_shared<ValidationCache>()) {
  if (subsystem_dims.empty()) throw InvalidArgument("measurement needs at least one subsystem");
  if (support.empty()) throw InvalidArgument("measurement support must be non-empty");
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end() ||
      support.back() >= subsystem_dims.size()) {
    throw InvalidArgument("measurement support must be sorted, unique subsystem indices");
  }
  auto layout = std::make_shared<Layout>();
  layout->dimension = checked_product(subsystem_dims);
  for (std::size_t s : support) layout->local_dimension *= subsystem_dims[s];
  layout->environment = layout->dimension / layout->local_dimension;
  layout->gather.resize(layout->dimension);
  for (std::size_t g = 0; g < layout->dimension; ++g) {
    const auto digits = digits_of(g, subsystem_dims);
    std::size_t loc = 0, env = 0;
    for (std::size_t j = 0; j < subsystem_dims.size(); ++j) {
      if (std::binary_search(support.begin(), support.end(), j)) {
        loc = loc * subsystem_dims[j] + digits[j];
      } else {
        env = env * subsystem_dims[j] + digits[j];
      }
    }
    layout->gather[env * layout->local_dimension + loc] = g;
  }
  layout->dims = std::move(subsystem_dims);
  layout->support = std::move(support);

  std::set<std::string> seen;
  for (const auto& o : outcomes_) {
    if (o.projector.dimension() != layout->local_dimension) {
      throw DimensionMismatch("projector '" + o.label + "' has dimension " +
                              std::to_string(o.projector.dimension()) + ", expected " +
                              std::to_string(layout->local_dimension));
    }
    if (!seen.insert(o.label).second) throw InvalidArgument("duplicate outcome label '" + o.label + "'");
  }
  layout_ = std::move(layout);
}

ProjectiveMeasurement ProjectiveMeasurement::computational_basis(std::size_t dimension,
                                                                 std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != dimension) throw InvalidArgument("one label per basis vector required");
  std::vector<Outcome> outcomes;
  outcomes.reserve(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    const auto e = StateVector::basis(dimension, i);
    outcomes.push_back({labels.empty() ? std::to_string(i) : labels[i], Operator::outer(e, e)});
  }
  return ProjectiveMeasurement(std::move(outcomes), dimension);
}

ProjectiveMeasurement ProjectiveMeasurement::trivial(std::size_t dimension) {
  return ProjectiveMeasurement({{"I", Operator::identity(dimension)}}, dimension);
}

ProjectiveMeasurement ProjectiveMeasurement::from_basis_blocks(const Matrix& basis,
                                                               const std::vector<std::vector<std::size_t>>& blocks) {
  if (basis.rows() != basis.cols()) throw InvalidArgument("basis matrix must be square");
  const auto n = basis.rows();
  std::vector<Outcome> outcomes;
  outcomes.reserve(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    Matrix p = Matrix::Zero(n, n);
    for (std::size_t col : blocks[b]) {
      if (col >= static_cast<std::size_t>(n)) throw InvalidArgument("basis column out of range");
      const auto c = basis.col(static_cast<Eigen::Index>(col));
      p += c * c.adjoint();
    }
    outcomes.push_back({std::to_string(b), Operator(std::move(p))});
  }
  return ProjectiveMeasurement(std::move(outcomes), static_cast<std::size_t>(n));
}

std::size_t ProjectiveMeasurement::dimension() const { return layout_->dimension; }
std::size_t ProjectiveMeasurement::local_dimension() const { return layout_->local_dimension; }
const std::vector<std::size_t>& ProjectiveMeasurement::subsystem_dims() const { return layout_->dims; }
const std::vector<std::size_t>& ProjectiveMeasurement::support() const { return layout_->support; }

Operator ProjectiveMeasurement::projector(std::size_t k) const {
  std::vector<std::size_t> all(layout_->dims.size());
  std::iota(all.begin(), all.end(), 0);
  if (layout_->support == all) return outcomes_.at(k).projector;
  return Operator(lift(outcomes_.at(k).projector.matrix(), layout_->dims, layout_->support, all));
}

std::size_t ProjectiveMeasurement::rank(std::size_t k) const {
  const double t = outcomes_.at(k).projector.trace_real() * static_cast<double>(layout_->environment);
  return static_cast<std::size_t>(std::max(0.0, std::round(t)));
}

namespace {

Matrix gather_local(const Vector& v, std::size_t local, std::size_t env, const std::vector<std::size_t>& gather) {
  Matrix out(static_cast<Eigen::Index>(local), static_cast<Eigen::Index>(env));
  for (std::size_t e = 0; e < env; ++e) {
    for (std::size_t l = 0; l < local; ++l) {
      out(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(e)) =
          v(static_cast<Eigen::Index>(gather[e * local + l]));
    }
  }
  return out;
}

}  // namespace

std::vector<Complex> ProjectiveMeasurement::matrix_elements(const StateVector& a, const StateVector& b) const {
  if (a.dimension() != dimension() || b.dimension() != dimension()) {
    throw DimensionMismatch("state dimension does not match measurement dimension " + std::to_string(dimension()));
  }
  const Layout& L = *layout_;
  const Matrix la = gather_local(a.amplitudes(), L.local_dimension, L.environment, L.gather);
  const Matrix lb = gather_local(b.amplitudes(), L.local_dimension, L.environment, L.gather);
  std::vector<Complex> out;
  out.reserve(outcomes_.size());
  for (const auto& o : outcomes_) {
    out.push_back(la.conjugate().cwiseProduct(o.projector.matrix() * lb).sum());
  }
  return out;
}

StateVector ProjectiveMeasurement::apply(std::size_t k, const StateVector& v) const {
  if (v.dimension() != dimension()) throw DimensionMismatch("state dimension does not match measurement");
  const Layout& L = *layout_;
  const Matrix r = outcomes_.at(k).projector.matrix() * gather_local(v.amplitudes(), L.local_dimension, L.environment, L.gather);
  Vector out(v.amplitudes().size());
  for (std::size_t e = 0; e < L.environment; ++e) {
    for (std::size_t l = 0; l < L.local_dimension; ++l) {
      out(static_cast<Eigen::Index>(L.gather[e * L.local_dimension + l])) =
          r(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(e));
    }
  }
  return StateVector(std::move(out));
}

const ValidationReport& ProjectiveMeasurement::validation() const {
  // Identity factors on the environment leave every max-entry norm unchanged,
  // so validating the local projectors is exact.
  std::call_once(cache_->once, [this] { cache_->report = validate_local(outcomes_, layout_->local_dimension); });
  return cache_->report;
}

void ProjectiveMeasurement::require_valid() const {
  const auto& report = validation();
  if (!report.valid()) throw InvalidMeasurement("invalid measurement: " + report.summary());
}

ValidationReport validate_measurement(const ProjectiveMeasurement& m) { return m.validation(); }

ProjectiveMeasurement refine(const ProjectiveMeasurement& m1, const ProjectiveMeasurement& m2) {
  if (m1.dimension() != m2.dimension()) {
    throw DimensionMismatch("cannot refine measurements of dimensions " + std::to_string(m1.dimension()) + " and " +
                            std::to_string(m2.dimension()));
  }
  m1.require_valid();
  m2.require_valid();

  // Common layout: the union of supports when the subsystem structures agree,
  // otherwise the flat space.
  std::vector<std::size_t> dims;
  std::vector<std::size_t> support;
  std::vector<Matrix> first, second;
  if (m1.subsystem_dims() == m2.subsystem_dims()) {
    dims = m1.subsystem_dims();
    std::set_union(m1.support().begin(), m1.support().end(), m2.support().begin(), m2.support().end(),
                   std::back_inserter(support));
    for (const auto& o : m1.outcomes()) first.push_back(lift(o.projector.matrix(), dims, m1.support(), support));
    for (const auto& o : m2.outcomes()) second.push_back(lift(o.projector.matrix(), dims, m2.support(), support));
  } else {
    dims = {m1.dimension()};
    support = {0};
    for (std::size_t k = 0; k < m1.size(); ++k) first.push_back(m1.projector(k).matrix());
    for (std::size_t l = 0; l < m2.size(); ++l) second.push_back(m2.projector(l).matrix());
  }

  double worst = 0.0;
  std::string worst_pair;
  for (std::size_t k = 0; k < first.size(); ++k) {
    for (std::size_t l = 0; l < second.size(); ++l) {
      const double c = max_abs(first[k] * second[l] - second[l] * first[k]);
      if (c > worst) {
        worst = c;
        worst_pair = m1.label(k) + " / " + m2.label(l);
      }
    }
  }
  if (worst > kOperatorTolerance) {
    std::ostringstream os;
    os << "measurements are not compatible: ||[" << worst_pair << "]|| = " << worst;
    throw IncompatibleMeasurements(os.str());
  }

  std::vector<Outcome> outcomes;
  for (std::size_t k = 0; k < first.size(); ++k) {
    for (std::size_t l = 0; l < second.size(); ++l) {
      Matrix product = first[k] * second[l];
      if (max_abs(product) <= kOperatorTolerance) continue;
      outcomes.push_back({"(" + m1.label(k) + "," + m2.label(l) + ")", Operator(std::move(product))});
    }
  }
  return ProjectiveMeasurement(std::move(outcomes), std::move(dims), std::move(support));
}

}  // namespace qdist
