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

#include "qdist/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace qdist {

namespace {

constexpr double kUndefinedVisibilityMass = 1e-14;

void require_normalized(const StateVector& psi, const char* name) {
  if (!psi.is_normalized()) {
    std::ostringstream os;
    os.precision(17);
    os << name << " is not normalized (<v|v> = " << psi.amplitudes().squaredNorm() << ")";
    throw InvalidArgument(os.str());
  }
}

void require_matching(const StateVector& psi, const ProjectiveMeasurement& m) {
  if (psi.dimension() != m.dimension()) {
    throw DimensionMismatch("state of dimension " + std::to_string(psi.dimension()) +
                            " measured with a dimension-" + std::to_string(m.dimension()) + " measurement");
  }
}

void require_orthogonal(const StateVector& psi1, const StateVector& psi2) {
  const double overlap = std::abs(inner_product(psi1, psi2));
  if (overlap > kOperatorTolerance) {
    std::ostringstream os;
    os << "states are not orthogonal (|<psi1|psi2>| = " << overlap << ")";
    throw InvalidArgument(os.str());
  }
}

void check_pair(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m) {
  require_matching(psi1, m);
  require_matching(psi2, m);
  require_normalized(psi1, "psi1");
  require_normalized(psi2, "psi2");
  m.require_valid();
}

std::vector<double> expectation_values(const StateVector& psi, const ProjectiveMeasurement& m) {
  const auto elements = m.matrix_elements(psi, psi);
  std::vector<double> out(elements.size());
  std::transform(elements.begin(), elements.end(), out.begin(), [](Complex c) { return c.real(); });
  return out;
}

OutcomeDistribution make_distribution(const ProjectiveMeasurement& m, const std::vector<double>& probabilities) {
  std::vector<OutcomeDistribution::Entry> entries;
  entries.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) entries.push_back({m.label(k), probabilities[k]});
  return OutcomeDistribution(std::move(entries));
}

double clamp_probability(double p) { return p < 0.0 ? 0.0 : p; }

double overlap_sum(std::span<const double> p, std::span<const double> q) {
  double u = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) u += std::sqrt(clamp_probability(p[k]) * clamp_probability(q[k]));
  return std::clamp(u, 0.0, 1.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// OutcomeDistribution

OutcomeDistribution::OutcomeDistribution(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("distribution must have at least one outcome");
  double total = 0.0;
  std::map<std::string, int> seen;
  for (auto& e : entries_) {
    if (!std::isfinite(e.probability)) throw InvalidArgument("probability of '" + e.label + "' is not finite");
    if (e.probability < -kNegativeProbabilityTolerance) {
      std::ostringstream os;
      os << "probability of '" << e.label << "' is negative (" << e.probability << ")";
      throw InvalidArgument(os.str());
    }
    e.probability = clamp_probability(e.probability);
    if (++seen[e.label] > 1) throw InvalidArgument("duplicate outcome label '" + e.label + "'");
    total += e.probability;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "probabilities sum to " << total << ", not 1";
    throw InvalidArgument(os.str());
  }
}

OutcomeDistribution OutcomeDistribution::from_probabilities(std::span<const double> probabilities) {
  std::vector<Entry> entries;
  entries.reserve(probabilities.size());
  for (std::size_t k = 0; k < probabilities.size(); ++k) entries.push_back({std::to_string(k), probabilities[k]});
  return OutcomeDistribution(std::move(entries));
}

std::vector<double> OutcomeDistribution::probabilities() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.probability);
  return out;
}

std::optional<std::size_t> OutcomeDistribution::find(const std::string& label) const {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].label == label) return k;
  }
  return std::nullopt;
}

std::vector<double> aligned_probabilities(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  if (p.size() != q.size()) {
    throw LabelMismatch("distributions have " + std::to_string(p.size()) + " and " + std::to_string(q.size()) +
                        " outcomes");
  }
  std::vector<double> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (q.label(k) == p.label(k)) {
      out[k] = q.probability(k);
      continue;
    }
    const auto j = q.find(p.label(k));
    if (!j) throw LabelMismatch("outcome '" + p.label(k) + "' missing from second distribution");
    out[k] = q.probability(*j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// U and I

OutcomeDistribution outcome_distribution(const StateVector& psi, const ProjectiveMeasurement& m) {
  require_matching(psi, m);
  require_normalized(psi, "state");
  m.require_valid();
  return make_distribution(m, expectation_values(psi, m));
}

double bhattacharyya(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  const auto qs = aligned_probabilities(p, q);
  const auto ps = p.probabilities();
  return overlap_sum(ps, qs);
}

double indistinguishability(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m) {
  check_pair(psi1, psi2, m);
  return overlap_sum(expectation_values(psi1, m), expectation_values(psi2, m));
}

double interference_power(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m,
                          std::vector<std::string>* warnings) {
  check_pair(psi1, psi2, m);
  if (warnings) {
    const double overlap = std::abs(inner_product(psi1, psi2));
    if (overlap > kOperatorTolerance) {
      std::ostringstream os;
      os << "interference power of non-orthogonal states (|<psi1|psi2>| = " << overlap << ")";
      warnings->push_back(os.str());
    }
  }
  double total = 0.0;
  for (Complex c : m.matrix_elements(psi1, psi2)) total += std::abs(c);
  return total;
}

// ---------------------------------------------------------------------------
// Superposition and fringes

void SuperpositionSpec::validate() const {
  const double w = std::norm(c1) + std::norm(c2);
  if (std::abs(w - 1.0) > kNormTolerance || !std::isfinite(chi)) {
    std::ostringstream os;
    os.precision(17);
    os << "superposition weights |c1|^2 + |c2|^2 = " << w << " must equal 1";
    throw InvalidArgument(os.str());
  }
}

SuperpositionSpec balanced_superposition(double chi) {
  const double h = std::numbers::sqrt2 / 2.0;
  return {Complex(h, 0.0), Complex(h, 0.0), chi};
}

OutcomeDistribution superposition_probability(const SuperpositionSpec& spec, const StateVector& psi1,
                                              const StateVector& psi2, const ProjectiveMeasurement& m) {
  spec.validate();
  check_pair(psi1, psi2, m);
  require_orthogonal(psi1, psi2);

  const auto p = expectation_values(psi1, m);
  const auto q = expectation_values(psi2, m);
  const auto cross = m.matrix_elements(psi1, psi2);
  const Complex phase = std::polar(1.0, spec.chi);
  const Complex weight = std::conj(spec.c1) * spec.c2 * phase;

  std::vector<double> probs(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    probs[k] = std::norm(spec.c1) * p[k] + std::norm(spec.c2) * q[k] + 2.0 * (weight * cross[k]).real();
  }

  const StateVector psi(spec.c1 * psi1.amplitudes() + spec.c2 * phase * psi2.amplitudes());
  const auto direct = expectation_values(psi, m);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (std::abs(direct[k] - probs[k]) > kProbabilityTolerance) {
      std::ostringstream os;
      os << "superposition cross-check failed for outcome '" << m.label(k) << "': " << probs[k] << " vs "
         << direct[k];
      throw InvariantViolation(os.str());
    }
  }
  return make_distribution(m, probs);
}

std::vector<FringeRow> fringe_scan(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m,
                                   std::span<const double> chi_grid) {
  if (chi_grid.empty()) throw InvalidArgument("fringe scan needs a non-empty phase grid");
  std::vector<FringeRow> rows;
  rows.reserve(chi_grid.size() * m.size());
  for (double chi : chi_grid) {
    const auto dist = superposition_probability(balanced_superposition(chi), psi1, psi2, m);
    for (const auto& e : dist.entries()) rows.push_back({chi, e.label, e.probability});
  }
  return rows;
}

std::vector<double> phase_grid(std::size_t steps, double start, double stop) {
  if (steps < 2) throw InvalidArgument("phase grid needs at least 2 points");
  std::vector<double> grid(steps);
  const double step = (stop - start) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) grid[i] = start + step * static_cast<double>(i);
  grid.back() = stop;
  return grid;
}

FringeFit fit_fringe(std::span<const double> chi, std::span<const double> probability) {
  if (chi.size() != probability.size()) throw InvalidArgument("fringe fit needs one probability per phase");
  const auto n = static_cast<Eigen::Index>(chi.size());
  Eigen::MatrixX3d design(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = chi[static_cast<std::size_t>(i)];
    design(i, 0) = 1.0;
    design(i, 1) = std::cos(x);
    design(i, 2) = std::sin(x);
    rhs(i) = probability[static_cast<std::size_t>(i)];
  }
  const auto qr = design.colPivHouseholderQr();
  if (qr.rank() < 3) throw InvalidArgument("phase grid too degenerate for a fringe fit");
  const Eigen::Vector3d coef = qr.solve(rhs);
  return {coef(0), std::hypot(coef(1), coef(2)), std::atan2(-coef(2), coef(1))};
}

std::vector<VisibilityEntry> visibility(const StateVector& psi1, const StateVector& psi2,
                                        const ProjectiveMeasurement& m) {
  check_pair(psi1, psi2, m);
  const auto p = expectation_values(psi1, m);
  const auto q = expectation_values(psi2, m);
  const auto cross = m.matrix_elements(psi1, psi2);
  std::vector<VisibilityEntry> out;
  out.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double mass = clamp_probability(p[k]) + clamp_probability(q[k]);
    if (mass <= kUndefinedVisibilityMass) {
      out.push_back({m.label(k), std::nullopt});
    } else {
      out.push_back({m.label(k), 2.0 * std::abs(cross[k]) / mass});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trade-off and chain

bool TradeoffReport::holds(double tolerance) const {
  if (slack < -tolerance) return false;
  if (all_rank_one && std::abs(slack) > tolerance) return false;
  return true;
}

TradeoffReport tradeoff_report(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m) {
  check_pair(psi1, psi2, m);
  require_orthogonal(psi1, psi2);
  const auto p = expectation_values(psi1, m);
  const auto q = expectation_values(psi2, m);
  const auto cross = m.matrix_elements(psi1, psi2);
  const auto vis = visibility(psi1, psi2, m);

  TradeoffReport report{};
  report.all_rank_one = true;
  double interference = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double ik = std::abs(cross[k]);
    interference += ik;
    report.per_outcome.push_back({m.label(k), clamp_probability(p[k]), clamp_probability(q[k]), ik, vis[k].value});
    if (m.rank(k) != 1) report.all_rank_one = false;
  }
  report.indistinguishability = overlap_sum(p, q);
  report.interference = interference;
  report.slack = report.indistinguishability - report.interference;
  return report;
}

std::array<double, 3> ChainReport::slacks() const {
  return {detect_indistinguishability - refined_indistinguishability,
          refined_indistinguishability - refined_interference, refined_interference - interference};
}

bool ChainReport::holds(double tolerance) const {
  const auto s = slacks();
  return std::all_of(s.begin(), s.end(), [tolerance](double v) { return v >= -tolerance; });
}

ChainReport chain_report(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m_interference,
                         const ProjectiveMeasurement& m_detection) {
  const ProjectiveMeasurement refined = refine(m_interference, m_detection);
  ChainReport report{};
  report.detect_indistinguishability = indistinguishability(psi1, psi2, m_detection);
  report.refined_indistinguishability = indistinguishability(psi1, psi2, refined);
  report.refined_interference = interference_power(psi1, psi2, refined);
  report.interference = interference_power(psi1, psi2, m_interference);
  report.refined_outcomes = refined.size();
  return report;
}

}  // namespace qdist
