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

#include "qdist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qdist/hypothesis.hpp"
#include "qdist/json_report.hpp"
#include "qdist/phase_field.hpp"
#include "qdist/scenario.hpp"
#include "qdist/verify.hpp"

namespace qdist::cli {

namespace {

struct Options {
  std::string scenario;
  std::string out_path;
  std::string csv_path;
  std::size_t chi_steps = 64;
  double tolerance = kOperatorTolerance;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_dim = 6;
  unsigned workers = 0;
};

// Writes to `path` when given, otherwise to `fallback`.
template <class Emit>
void emit_to(const std::string& path, std::ostream& fallback, Emit&& emit) {
  if (path.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ScenarioError("cannot open output file '" + path + "'");
  emit(file);
  file.flush();
  if (!file) throw ScenarioError("failed writing output file '" + path + "'");
}

int verdict(bool holds) { return holds ? kExitOk : kExitInvariantViolation; }

// Two path states and the measurement a scenario describes.
struct PairView {
  StateVector psi1;
  StateVector psi2;
  ProjectiveMeasurement measurement;
};

PairView pair_view(const Scenario& scenario, const char* command) {
  if (const auto* pair = std::get_if<PairScenario>(&scenario)) {
    return {pair->psi1, pair->psi2, pair->measurement};
  }
  if (const auto* f = std::get_if<InterferometerFile>(&scenario)) {
    auto paths = build_paths(f->scenario);
    return {std::move(paths.psi1), std::move(paths.psi2), f->measurement()};
  }
  throw ScenarioError(std::string(command) + " needs a scenario of kind pair or interferometer");
}

int cmd_tradeoff(const Options& o, std::ostream& out) {
  const auto scenario = load_scenario(o.scenario);
  const auto* pair = std::get_if<PairScenario>(&scenario);
  if (!pair) throw ScenarioError("tradeoff needs a scenario of kind pair");
  std::vector<std::string> warnings;
  interference_power(pair->psi1, pair->psi2, pair->measurement, &warnings);
  const auto report = tradeoff_report(pair->psi1, pair->psi2, pair->measurement);

  Json j;
  j["command"] = "tradeoff";
  j["dimension"] = pair->measurement.dimension();
  j["outcomes"] = pair->measurement.size();
  j["tolerance"] = o.tolerance;
  const Json body = to_json(report);
  for (auto& [key, value] : body.items()) j[key] = value;
  j["holds"] = report.holds(o.tolerance);
  j["warnings"] = warnings;
  emit_to(o.out_path, out, [&](std::ostream& os) { write_json(os, j); });
  return verdict(report.holds(o.tolerance));
}

int cmd_fringe(const Options& o, std::ostream& out) {
  if (o.chi_steps < 2) throw InvalidArgument("--chi-steps must be at least 2");
  const auto scenario = load_scenario(o.scenario);
  const auto view = pair_view(scenario, "fringe");
  const auto grid = phase_grid(o.chi_steps, 0.0, std::numbers::pi);
  auto rows = fringe_scan(view.psi1, view.psi2, view.measurement, grid);
  std::stable_sort(rows.begin(), rows.end(), [](const FringeRow& a, const FringeRow& b) {
    return a.chi != b.chi ? a.chi < b.chi : a.label < b.label;
  });
  emit_to(o.csv_path, out, [&](std::ostream& os) {
    os << "chi,label,probability\n";
    for (const auto& r : rows) {
      std::string label = r.label;
      if (label.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : label) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
        label = quoted + "\"";
      }
      os << format_number(r.chi) << ',' << label << ',' << format_number(r.probability) << '\n';
    }
  });
  return kExitOk;
}

int cmd_np(const Options& o, std::ostream& out) {
  const auto scenario = load_scenario(o.scenario);
  std::optional<OutcomeDistribution> p, q;
  if (const auto* d = std::get_if<DistributionScenario>(&scenario)) {
    p = d->p;
    q = d->q;
  } else if (const auto* pair = std::get_if<PairScenario>(&scenario)) {
    p = outcome_distribution(pair->psi1, pair->measurement);
    q = outcome_distribution(pair->psi2, pair->measurement);
  } else {
    throw ScenarioError("np needs a scenario of kind distributions or pair");
  }
  const auto best_sum = best_np_test(*p, *q, Objective::kSum);
  const auto best_product = best_np_test(*p, *q, Objective::kProduct);
  const auto bounds = verify_bounds(*p, *q);
  const auto solution = [](const NPSolution& s) {
    Json j = to_json(s.test);
    j["err1"] = s.errors.err1;
    j["err2"] = s.errors.err2;
    j["sum"] = s.errors.sum();
    j["product"] = s.errors.product();
    return j;
  };

  Json j;
  j["command"] = "np";
  j["outcomes"] = p->size();
  j["tolerance"] = o.tolerance;
  j["indistinguishability"] = bounds.indistinguishability;
  j["best_sum"] = solution(best_sum);
  j["best_product"] = solution(best_product);
  j["sum_bound_gap"] = best_sum.errors.sum() - bounds.sum_bound;
  j["bounds"] = to_json(bounds);
  j["holds"] = bounds.holds(o.tolerance);
  emit_to(o.out_path, out, [&](std::ostream& os) { write_json(os, j); });
  return verdict(bounds.holds(o.tolerance));
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.trials < 1) throw InvalidArgument("--trials must be at least 1");
  if (o.max_dim < 2) throw InvalidArgument("--max-dim must be at least 2");
  VerifyOptions v;
  v.seed = o.seed;
  v.trials = o.trials;
  v.max_dim = o.max_dim;
  v.tolerance = o.tolerance;
  v.workers = o.workers;
  const auto report = run_verify(v);
  emit_to(o.out_path, out, [&](std::ostream& os) { write_json(os, to_json(report)); });
  return verdict(report.core_passed());
}

int cmd_field(const Options& o, std::ostream& out) {
  const auto scenario = load_scenario(o.scenario);
  std::optional<FieldState> field;
  const InterferometerFile* interferometer = std::get_if<InterferometerFile>(&scenario);
  if (const auto* f = std::get_if<FieldFile>(&scenario)) {
    field = f->field;
  } else if (interferometer) {
    field = interferometer->scenario.field;
  } else {
    throw ScenarioError("field needs a scenario of kind field or interferometer");
  }

  Json j;
  j["command"] = "field";
  j["truncation"] = field->truncation();
  j["tolerance"] = o.tolerance;
  j["phase"] = to_json(phase_stats(*field));
  j["phase_number_relation"] = to_json(uncertainty_relation_check(*field));
  const double u = indistinguishability_closed_form(*field);
  const double i = interference_power_closed_form(*field);
  j["indistinguishability_closed_form"] = u;
  j["interference_power_closed_form"] = i;
  bool holds = u >= i - o.tolerance;
  if (interferometer && interferometer->scenario.flipper_on) {
    const auto paths = build_paths(interferometer->scenario);
    const double u_proj =
        indistinguishability(paths.psi1, paths.psi2, photon_number_measurement(interferometer->scenario));
    const double i_proj =
        interference_power(paths.psi1, paths.psi2, position_spin_measurement(interferometer->scenario));
    j["indistinguishability_projective"] = u_proj;
    j["interference_power_projective"] = i_proj;
    holds = holds && std::abs(u_proj - u) <= o.tolerance && std::abs(i_proj - i) <= o.tolerance;
  }
  if (interferometer && !interferometer->scenario.flipper_on) {
    const auto fringe = ideal_fringe_check(interferometer->scenario);
    j["ideal_fringes"] = to_json(fringe);
    holds = holds && fringe.holds(o.tolerance);
  }
  j["holds"] = holds;
  emit_to(o.out_path, out, [&](std::ostream& os) { write_json(os, j); });
  return verdict(holds);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indistinguishability and interference power of quantum state pairs"};
  app.require_subcommand(1);
  Options o;

  const auto add_scenario = [&](CLI::App* cmd) {
    cmd->add_option("scenario", o.scenario, "Scenario JSON file")->required();
  };
  const auto add_tolerance = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", o.tolerance, "Invariant tolerance")->capture_default_str();
  };

  auto* tradeoff = app.add_subcommand("tradeoff", "U, I and the U >= I slack for a state pair");
  add_scenario(tradeoff);
  add_tolerance(tradeoff);
  tradeoff->add_option("--out", o.out_path, "Write the JSON report here");

  auto* fringe = app.add_subcommand("fringe", "Outcome probabilities over a phase sweep, as CSV");
  add_scenario(fringe);
  fringe->add_option("--chi-steps", o.chi_steps, "Phase points from 0 to pi")->capture_default_str();
  fringe->add_option("--csv", o.csv_path, "Write the CSV here");

  auto* np = app.add_subcommand("np", "Neyman-Pearson tests and error bounds for two distributions");
  add_scenario(np);
  add_tolerance(np);
  np->add_option("--out", o.out_path, "Write the JSON report here");

  auto* verify = app.add_subcommand("verify", "Randomized property suites");
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--trials", o.trials, "Trials per property")->capture_default_str();
  verify->add_option("--max-dim", o.max_dim, "Largest Hilbert-space dimension / support size")->capture_default_str();
  verify->add_option("--workers", o.workers, "Worker threads (0 = all cores)")->capture_default_str();
  add_tolerance(verify);
  verify->add_option("--out", o.out_path, "Write the JSON report here");

  auto* field = app.add_subcommand("field", "Phase statistics and closed forms for a field state");
  add_scenario(field);
  add_tolerance(field);
  field->add_option("--out", o.out_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*tradeoff) return cmd_tradeoff(o, out);
    if (*fringe) return cmd_fringe(o, out);
    if (*np) return cmd_np(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*field) return cmd_field(o, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qdist::cli
