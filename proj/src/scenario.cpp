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

#include "qdist/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace qdist {

namespace {

void allow_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) throw ScenarioError(where + " must be an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw ScenarioError("unknown key '" + it.key() + "' in " + where);
  }
}

const Json& required(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(where + " is missing '" + key + "'");
  return *it;
}

double number(const Json& v, const std::string& what) {
  if (!v.is_number()) throw ScenarioError(what + " must be a number");
  return v.get<double>();
}

std::size_t count(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ScenarioError(what + " must be a non-negative integer");
  return v.get<std::size_t>();
}

Complex complex_value(const Json& v, const std::string& what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ScenarioError(what + " must be a number or a [re, im] pair");
}

Vector complex_vector(const Json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) throw ScenarioError(what + " must be a non-empty list of [re, im] pairs");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = complex_value(v[i], what);
  return out;
}

Matrix complex_matrix(const Json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) throw ScenarioError(what + " must be a non-empty list of rows");
  const std::size_t n = v.size();
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_array() || v[i].size() != n) throw ScenarioError(what + " must be square");
    for (std::size_t j = 0; j < n; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = complex_value(v[i][j], what);
    }
  }
  return out;
}

std::vector<std::string> string_list(const Json& v, const std::string& what) {
  if (!v.is_array()) throw ScenarioError(what + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ScenarioError(what + " must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

StateVector normalized_state(const Json& v, const std::string& what) {
  StateVector s(complex_vector(v, what));
  if (!s.is_normalized()) throw InvalidArgument(what + " is not normalized");
  return s;
}

ProjectiveMeasurement parse_measurement(const Json& v, std::size_t dimension) {
  const std::string where = "measurement";
  std::vector<std::string> labels;
  const Json* projectors = nullptr;
  if (v.is_object()) {
    if (v.contains("basis")) {
      allow_keys(v, {"basis", "labels"}, where);
      if (v["basis"] != "standard") throw ScenarioError("measurement basis must be \"standard\"");
      if (v.contains("labels")) labels = string_list(v["labels"], "measurement labels");
      return ProjectiveMeasurement::computational_basis(dimension, std::move(labels));
    }
    allow_keys(v, {"projectors", "labels"}, where);
    projectors = &required(v, "projectors", where);
    if (v.contains("labels")) labels = string_list(v["labels"], "measurement labels");
  } else if (v.is_array()) {
    projectors = &v;
  } else {
    throw ScenarioError("measurement must be a list of projector matrices or an object");
  }
  if (!projectors->is_array() || projectors->empty()) throw ScenarioError("measurement needs at least one projector");
  if (!labels.empty() && labels.size() != projectors->size()) {
    throw ScenarioError("measurement needs one label per projector");
  }
  std::vector<Outcome> outcomes;
  for (std::size_t k = 0; k < projectors->size(); ++k) {
    Operator op(complex_matrix((*projectors)[k], "projector " + std::to_string(k)));
    if (op.dimension() != dimension) throw DimensionMismatch("projector " + std::to_string(k) + " has wrong dimension");
    outcomes.push_back({labels.empty() ? std::to_string(k) : labels[k], std::move(op)});
  }
  ProjectiveMeasurement m(std::move(outcomes), dimension);
  m.require_valid();
  return m;
}

PairScenario parse_pair(const Json& doc) {
  allow_keys(doc, {"kind", "psi1", "psi2", "measurement"}, "pair scenario");
  StateVector psi1 = normalized_state(required(doc, "psi1", "pair scenario"), "psi1");
  StateVector psi2 = normalized_state(required(doc, "psi2", "pair scenario"), "psi2");
  if (psi1.dimension() != psi2.dimension()) throw DimensionMismatch("psi1 and psi2 have different dimensions");
  auto m = parse_measurement(required(doc, "measurement", "pair scenario"), psi1.dimension());
  return {std::move(psi1), std::move(psi2), std::move(m)};
}

OutcomeDistribution parse_distribution(const Json& v, const std::vector<std::string>& labels, const std::string& what) {
  if (!v.is_array() || v.empty()) throw ScenarioError(what + " must be a non-empty list of probabilities");
  if (!labels.empty() && labels.size() != v.size()) throw ScenarioError(what + " needs one probability per label");
  std::vector<OutcomeDistribution::Entry> entries;
  for (std::size_t k = 0; k < v.size(); ++k) {
    entries.push_back({labels.empty() ? std::to_string(k) : labels[k], number(v[k], what)});
  }
  return OutcomeDistribution(std::move(entries));
}

DistributionScenario parse_distributions(const Json& doc) {
  allow_keys(doc, {"kind", "p", "q", "labels"}, "distributions scenario");
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = string_list(doc["labels"], "labels");
  auto p = parse_distribution(required(doc, "p", "distributions scenario"), labels, "p");
  auto q = parse_distribution(required(doc, "q", "distributions scenario"), labels, "q");
  if (p.size() != q.size()) throw LabelMismatch("p and q have different numbers of outcomes");
  return {std::move(p), std::move(q)};
}

InterferometerFile parse_interferometer(const Json& doc) {
  const std::string where = "interferometer scenario";
  allow_keys(doc, {"kind", "chi", "flipper_on", "field", "grid", "envelope", "omega", "time", "measurement"}, where);
  InterferometerFile f{InterferometerScenario{}, Detector::kBeam};
  auto& s = f.scenario;
  if (doc.contains("chi")) s.chi = number(doc["chi"], "chi");
  if (doc.contains("flipper_on")) {
    if (!doc["flipper_on"].is_boolean()) throw ScenarioError("flipper_on must be true or false");
    s.flipper_on = doc["flipper_on"].get<bool>();
  }
  s.field = parse_field(required(doc, "field", where));
  if (doc.contains("grid")) s.grid_points = count(doc["grid"], "grid");
  if (doc.contains("envelope")) s.envelope = complex_vector(doc["envelope"], "envelope");
  if (doc.contains("omega")) s.omega = number(doc["omega"], "omega");
  if (doc.contains("time")) s.time = number(doc["time"], "time");
  if (doc.contains("measurement")) {
    const auto& m = doc["measurement"];
    if (m == "beam") {
      f.detector = Detector::kBeam;
    } else if (m == "position_spin") {
      f.detector = Detector::kPositionSpin;
    } else if (m == "photon_number") {
      f.detector = Detector::kPhotonNumber;
    } else {
      throw ScenarioError("interferometer measurement must be \"beam\", \"position_spin\" or \"photon_number\"");
    }
  }
  s.validate();
  return f;
}

}  // namespace

ProjectiveMeasurement InterferometerFile::measurement() const {
  switch (detector) {
    case Detector::kPositionSpin: return position_spin_measurement(scenario);
    case Detector::kPhotonNumber: return photon_number_measurement(scenario);
    case Detector::kBeam: break;
  }
  return beam_measurement(scenario);
}

FieldState parse_field(const Json& spec) {
  const std::string where = "field";
  if (!spec.is_object()) throw ScenarioError("field must be an object");
  if (spec.contains("fock")) {
    allow_keys(spec, {"fock", "truncation"}, where);
    const std::size_t n = count(spec["fock"], "fock");
    const std::size_t truncation = spec.contains("truncation") ? count(spec["truncation"], "truncation") : n + 2;
    return FieldState::fock(n, truncation);
  }
  if (spec.contains("coherent")) {
    allow_keys(spec, {"coherent", "truncation"}, where);
    return FieldState::coherent(complex_value(spec["coherent"], "coherent"),
                                count(required(spec, "truncation", where), "truncation"));
  }
  if (spec.contains("two_peak")) {
    allow_keys(spec, {"two_peak", "truncation"}, where);
    const auto& peaks = spec["two_peak"];
    if (!peaks.is_array() || peaks.size() != 2) throw ScenarioError("two_peak must be [n0, n1]");
    return FieldState::two_peak(count(peaks[0], "n0"), count(peaks[1], "n1"),
                                count(required(spec, "truncation", where), "truncation"));
  }
  if (spec.contains("amplitudes")) {
    allow_keys(spec, {"amplitudes"}, where);
    return FieldState::from_amplitudes(complex_vector(spec["amplitudes"], "field amplitudes"));
  }
  throw ScenarioError("field must specify one of fock, coherent, two_peak, amplitudes");
}

Scenario parse_scenario(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");
  const auto& kind = required(doc, "kind", "scenario");
  if (!kind.is_string()) throw ScenarioError("scenario kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "pair") return parse_pair(doc);
  if (k == "distributions") return parse_distributions(doc);
  if (k == "interferometer") return parse_interferometer(doc);
  if (k == "field") {
    allow_keys(doc, {"kind", "field"}, "field scenario");
    return FieldFile{parse_field(required(doc, "field", "field scenario"))};
  }
  throw ScenarioError("unknown scenario kind '" + k + "'");
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace qdist
