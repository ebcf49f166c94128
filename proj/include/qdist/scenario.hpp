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

#ifndef QDIST_SCENARIO_HPP
#define QDIST_SCENARIO_HPP

#include <filesystem>
#include <string_view>
#include <variant>

#include "qdist/interferometer.hpp"
#include "qdist/json_report.hpp"
#include "qdist/measures.hpp"

namespace qdist {

/// Malformed or schema-violating scenario file.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

struct PairScenario {
  StateVector psi1;
  StateVector psi2;
  ProjectiveMeasurement measurement;
};

struct DistributionScenario {
  OutcomeDistribution p;
  OutcomeDistribution q;
};

enum class Detector { kBeam, kPositionSpin, kPhotonNumber };

struct InterferometerFile {
  InterferometerScenario scenario;
  Detector detector = Detector::kBeam;

  ProjectiveMeasurement measurement() const;
};

struct FieldFile {
  FieldState field;
};

using Scenario = std::variant<PairScenario, DistributionScenario, InterferometerFile, FieldFile>;

/// Parses a scenario document. Unknown keys are errors; states, measurements
/// and distributions are validated on load.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// One of {"fock": n[, "truncation": N]}, {"coherent": alpha, "truncation": N},
/// {"two_peak": [n0, n1], "truncation": N}, {"amplitudes": [[re, im], ...]}.
FieldState parse_field(const Json& spec);

}  // namespace qdist

#endif  // QDIST_SCENARIO_HPP
