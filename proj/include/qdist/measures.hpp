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

#ifndef QDIST_MEASURES_HPP
#define QDIST_MEASURES_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdist/hilbert.hpp"

namespace qdist {

/// Labelled probabilities summing to one.
///
/// Entries in [-1e-12, 0) are clamped to zero; anything more negative, or a
/// total off by more than 1e-10, is rejected.
class OutcomeDistribution {
 public:
  struct Entry {
    std::string label;
    double probability;
  };

  explicit OutcomeDistribution(std::vector<Entry> entries);
  /// Labels "0", "1", ...
  static OutcomeDistribution from_probabilities(std::span<const double> probabilities);

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::string& label(std::size_t k) const { return entries_.at(k).label; }
  double probability(std::size_t k) const { return entries_.at(k).probability; }
  std::vector<double> probabilities() const;
  /// Index of `label`, or nullopt.
  std::optional<std::size_t> find(const std::string& label) const;

 private:
  std::vector<Entry> entries_;
};

/// Probabilities of `q` reordered to follow the labels of `p`. Throws
/// LabelMismatch unless both carry the same label set.
std::vector<double> aligned_probabilities(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// p_k = <psi|D_k|psi>
OutcomeDistribution outcome_distribution(const StateVector& psi, const ProjectiveMeasurement& m);

/// Bhattacharyya overlap sum_k sqrt(p_k q_k).
double bhattacharyya(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// Degree of indistinguishability U of two states under `m`.
double indistinguishability(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m);

/// Interference power I = sum_k |<psi1|D_k|psi2>|.
///
/// Non-orthogonal inputs still evaluate; a warning is appended to `warnings`
/// when one is supplied.
double interference_power(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m,
                          std::vector<std::string>* warnings = nullptr);

/// psi = c1 psi1 + c2 e^{i chi} psi2
struct SuperpositionSpec {
  Complex c1;
  Complex c2;
  double chi = 0.0;

  /// Throws InvalidArgument unless |c1|^2 + |c2|^2 = 1 within 1e-12.
  void validate() const;
};

/// The equal-weight, zero-phase case used by fringe scans.
SuperpositionSpec balanced_superposition(double chi);

/// Outcome probabilities of the superposition, from p_k, q_k and the
/// interference term. Cross-checked against the explicitly formed state.
OutcomeDistribution superposition_probability(const SuperpositionSpec& spec, const StateVector& psi1,
                                              const StateVector& psi2, const ProjectiveMeasurement& m);

struct FringeRow {
  double chi;
  std::string label;
  double probability;
};

/// P_k(chi) for c1 = c2 = 1/sqrt(2), rows ordered by chi then outcome.
std::vector<FringeRow> fringe_scan(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m,
                                   std::span<const double> chi_grid);

/// `steps` equally spaced phases from `start` to `stop` inclusive.
std::vector<double> phase_grid(std::size_t steps, double start, double stop);

/// Least-squares fit of P(chi) = mean + amplitude * cos(chi + phase).
struct FringeFit {
  double mean;
  double amplitude;
  double phase;
};
FringeFit fit_fringe(std::span<const double> chi, std::span<const double> probability);

/// Michelson visibility V_k = 2 I_k / (p_k + q_k); nullopt where p_k + q_k <= 1e-14.
struct VisibilityEntry {
  std::string label;
  std::optional<double> value;
};
std::vector<VisibilityEntry> visibility(const StateVector& psi1, const StateVector& psi2,
                                        const ProjectiveMeasurement& m);

struct OutcomeTerms {
  std::string label;
  double p;
  double q;
  double interference;              // I_k
  std::optional<double> visibility;  // V_k
};

struct TradeoffReport {
  double indistinguishability;  // U
  double interference;          // I
  double slack;                 // U - I
  bool all_rank_one;
  std::vector<OutcomeTerms> per_outcome;

  /// U >= I, and U == I when every projector has rank one.
  bool holds(double tolerance = kOperatorTolerance) const;
};

TradeoffReport tradeoff_report(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m);

/// U_{D'} >= U_{D_kl} >= I_{D_kl} >= I_{D_k} for compatible measurements D
/// (interference) and D' (detection), D_kl = D_k D'_l.
struct ChainReport {
  double detect_indistinguishability;   // U_{D'}
  double refined_indistinguishability;  // U_{D_kl}
  double refined_interference;          // I_{D_kl}
  double interference;                  // I_{D_k}
  std::size_t refined_outcomes;

  std::array<double, 3> slacks() const;
  bool holds(double tolerance = kOperatorTolerance) const;
};

ChainReport chain_report(const StateVector& psi1, const StateVector& psi2, const ProjectiveMeasurement& m_interference,
                         const ProjectiveMeasurement& m_detection);

}  // namespace qdist

#endif  // QDIST_MEASURES_HPP
