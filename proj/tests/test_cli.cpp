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
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qdist/cli.hpp"
#include "qdist/json_report.hpp"
#include "qdist/random.hpp"
#include "qdist/scenario.hpp"
#include "qdist/verify.hpp"

namespace qdist {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qdist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::create_directories(QDIST_TEST_TMP);
  const auto path = fs::path(QDIST_TEST_TMP) / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kPair = R"({"kind": "pair",
  "psi1": [[1, 0], [0, 0]],
  "psi2": [[0, 0], [1, 0]],
  "measurement": [[[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]],
                  [[[0.5, 0], [-0.5, 0]], [[-0.5, 0], [0.5, 0]]]]})";

TEST(Scenario, ParsesPairWithExplicitProjectors) {
  auto s = parse_scenario(kPair);
  ASSERT_TRUE(std::holds_alternative<PairScenario>(s));
  EXPECT_EQ(std::get<PairScenario>(s).measurement.size(), 2u);
}

TEST(Scenario, RejectsUnknownKeysAndKinds) {
  std::string extra = kPair;
  extra.insert(extra.find("\"psi1\""), "\"color\": 1, ");
  EXPECT_THROW(parse_scenario(extra), ScenarioError);
  EXPECT_THROW(parse_scenario(R"({"kind": "nope"})"), ScenarioError);
  EXPECT_THROW(parse_scenario("[1, 2"), ScenarioError);
  EXPECT_THROW(parse_scenario(R"({"kind": "distributions", "p": [0.5, 0.5]})"), ScenarioError);
}

TEST(Scenario, RejectsInvalidMeasurement) {
  const char* text = R"({"kind": "pair", "psi1": [[1, 0], [0, 0]], "psi2": [[0, 0], [1, 0]],
    "measurement": [[[[1, 0], [0, 0]], [[0, 0], [0, 0]]]]})";
  EXPECT_THROW(parse_scenario(text), InvalidMeasurement);
}

TEST(Scenario, FieldForms) {
  auto f = std::get<FieldFile>(parse_scenario(R"({"kind": "field", "field": {"fock": 3}})"));
  EXPECT_EQ(f.field.truncation(), 5u);
  auto c = std::get<FieldFile>(parse_scenario(R"({"kind": "field", "field": {"coherent": [1, 1], "truncation": 30}})"));
  EXPECT_EQ(c.field.truncation(), 30u);
  auto t = std::get<FieldFile>(parse_scenario(R"({"kind": "field", "field": {"two_peak": [0, 4], "truncation": 6}})"));
  EXPECT_NEAR(t.field.number_distribution()[4], 0.5, 1e-15);
}

TEST(Cli, TradeoffReportMatchesLibrary) {
  const auto path = write_file("pair.json", kPair);
  auto r = run({"tradeoff", path});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  auto pair = std::get<PairScenario>(load_scenario(path));
  auto report = tradeoff_report(pair.psi1, pair.psi2, pair.measurement);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "tradeoff");
  EXPECT_EQ(j["indistinguishability"].get<double>(), report.indistinguishability);
  EXPECT_EQ(j["interference_power"].get<double>(), report.interference);
  EXPECT_NEAR(j["interference_power"].get<double>(), 1.0, 1e-15);
  EXPECT_EQ(j["holds"], true);
}

std::string amplitudes_json(const StateVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.dimension(); ++i) a.push_back(complex_json(v[i]));
  return a.dump();
}

std::string projectors_json(const ProjectiveMeasurement& m) {
  Json list = Json::array();
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Matrix p = m.projector(k).matrix();
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < p.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < p.cols(); ++c) row.push_back(complex_json(p(r, c)));
      rows.push_back(row);
    }
    list.push_back(rows);
  }
  return list.dump(-1, ' ', false, Json::error_handler_t::strict);
}

std::string pair_json(const StateVector& a, const StateVector& b, const ProjectiveMeasurement& m) {
  return R"({"kind": "pair", "psi1": )" + amplitudes_json(a) + R"(, "psi2": )" + amplitudes_json(b) +
         R"(, "measurement": )" + projectors_json(m) + "}";
}

// Hand-built dim-4 case: psi1 = |0>, psi2 = (|1> + |3>)/sqrt2, outcomes {|+><+| on 0,1}, {|-><-| on 0,1}, {2,3}.
TEST(Cli, TradeoffJsonMatchesLibraryCanonicalForm) {
  const double h = std::sqrt(0.5);
  StateVector a{1.0, 0.0, 0.0, 0.0};
  StateVector b{0.0, h, 0.0, h};
  Matrix basis = Matrix::Zero(4, 4);
  basis(0, 0) = h; basis(1, 0) = h;
  basis(0, 1) = h; basis(1, 1) = -h;
  basis(2, 2) = 1.0; basis(3, 3) = 1.0;
  auto m = ProjectiveMeasurement::from_basis_blocks(basis, {{0}, {1}, {2, 3}});
  const auto path = write_file("dim4.json", pair_json(a, b, m));
  auto r = run({"tradeoff", path});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  auto pair = std::get<PairScenario>(load_scenario(path));
  const Json lib = to_json(tradeoff_report(pair.psi1, pair.psi2, pair.measurement));
  const Json cli_json = Json::parse(r.out);
  for (const auto& [key, value] : lib.items()) EXPECT_EQ(dump_json(cli_json.at(key)), dump_json(value)) << key;
  // p = (1/2, 1/2, 0), q = (1/4, 1/4, 1/2): U = 2 sqrt(1/8); I = 2 * h * (1/2).
  EXPECT_NEAR(cli_json["indistinguishability"].get<double>(), h, 1e-15);
  EXPECT_NEAR(cli_json["interference_power"].get<double>(), h, 1e-15);
  EXPECT_EQ(cli_json["all_rank_one"], false);
}

TEST(Cli, FringeRecoversInterferenceTerms) {
  Rng rng(derive_seed(51, 0));
  auto pair = random_orthonormal_pair(4, rng);
  auto m = random_measurement(4, rng);
  const auto path = write_file("random4.json", pair_json(pair.psi1, pair.psi2, m));
  const auto csv = fs::path(QDIST_TEST_TMP) / "random4.csv";
  auto r = run({"fringe", path, "--chi-steps", "256", "--csv", csv.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto loaded = std::get<PairScenario>(load_scenario(path));
  const auto terms = tradeoff_report(loaded.psi1, loaded.psi2, loaded.measurement).per_outcome;
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> series;
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto c1 = line.find(','), c2 = line.rfind(',');
    auto& s = series[line.substr(c1 + 1, c2 - c1 - 1)];
    s.first.push_back(std::stod(line.substr(0, c1)));
    s.second.push_back(std::stod(line.substr(c2 + 1)));
  }
  ASSERT_EQ(series.size(), terms.size());
  for (const auto& t : terms) {
    const auto& s = series.at(t.label);
    ASSERT_EQ(s.first.size(), 256u);
    EXPECT_NEAR(fit_fringe(s.first, s.second).amplitude, t.interference, 1e-8) << t.label;
  }
}

TEST(Cli, FringeConstantWithoutInterference) {
  const auto path = write_file("flat.json", R"({"kind": "pair", "psi1": [[1, 0], [0, 0]], "psi2": [[0, 0], [1, 0]],
    "measurement": {"basis": "standard"}})");
  auto r = run({"fringe", path, "--chi-steps", "5"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::map<std::string, std::set<std::string>> values;
  while (std::getline(lines, line)) {
    const auto c1 = line.find(','), c2 = line.rfind(',');
    values[line.substr(c1 + 1, c2 - c1 - 1)].insert(line.substr(c2 + 1));
  }
  ASSERT_EQ(values.size(), 2u);
  for (const auto& [label, v] : values) EXPECT_EQ(v.size(), 1u) << label;
}

TEST(Cli, FringeUnwritableOutput) {
  const auto path = write_file("flat2.json", R"({"kind": "interferometer", "field": {"fock": 0}})");
  EXPECT_EQ(run({"fringe", path, "--csv", "/nonexistent/dir/out.csv"}).code, cli::kExitInputError);
}

TEST(Cli, VerifyOutputIsByteIdenticalToLibrary) {
  const auto out = fs::path(QDIST_TEST_TMP) / "verify.json";
  fs::create_directories(QDIST_TEST_TMP);
  auto r = run({"verify", "--seed", "3", "--trials", "40", "--max-dim", "4", "--out", out.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  VerifyOptions o;
  o.seed = 3;
  o.trials = 40;
  o.max_dim = 4;
  EXPECT_EQ(read_file(out.string()), dump_json(to_json(run_verify(o))));
  auto again = run({"verify", "--seed", "3", "--trials", "40", "--max-dim", "4"});
  EXPECT_EQ(again.out, read_file(out.string()));
}

TEST(Cli, FringeCsv) {
  const auto path = write_file("mz.json", R"({"kind": "interferometer", "chi": 0, "flipper_on": false,
    "field": {"fock": 0}, "grid": 2})");
  auto r = run({"fringe", path, "--chi-steps", "3"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "chi,label,probability");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 3 * 2);
  // Beam-A column at chi = 0, pi/2, pi.
  std::vector<double> beam_a;
  for (std::string line = first; !line.empty() || std::getline(lines, line); line.clear()) {
    if (line.find(",A,") != std::string::npos) beam_a.push_back(std::stod(line.substr(line.rfind(',') + 1)));
  }
  ASSERT_EQ(beam_a.size(), 3u);
  EXPECT_NEAR(beam_a[0], 1.0, 1e-10);
  EXPECT_NEAR(beam_a[1], 0.5, 1e-10);
  EXPECT_NEAR(beam_a[2], 0.0, 1e-10);
}

TEST(Cli, NpOnDistributions) {
  const auto path = write_file("np.json", R"({"kind": "distributions", "p": [0.8, 0.2], "q": [0.2, 0.8]})");
  auto r = run({"np", path});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_NEAR(j["best_sum"]["sum"].get<double>(), 0.4, 1e-12);
  EXPECT_NEAR(j["sum_bound_gap"].get<double>(), 0.0, 1e-12);
}

TEST(Cli, NpEdgeCases) {
  const auto same = write_file("same.json", R"({"kind": "distributions", "p": [0.3, 0.7], "q": [0.3, 0.7]})");
  EXPECT_NEAR(Json::parse(run({"np", same}).out)["best_sum"]["sum"].get<double>(), 1.0, 1e-15);
  const auto apart = write_file("apart.json", R"({"kind": "distributions", "p": [1, 0], "q": [0, 1]})");
  EXPECT_EQ(Json::parse(run({"np", apart}).out)["best_sum"]["sum"].get<double>(), 0.0);
}

TEST(Cli, FieldReport) {
  const auto path = write_file("field.json", R"({"kind": "field", "field": {"two_peak": [5, 15], "truncation": 20}})");
  auto r = run({"field", path});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_NEAR(j["phase"]["delta_n"].get<double>(), 5.0, 1e-12);
  EXPECT_EQ(j["indistinguishability_closed_form"].get<double>(), 0.0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(run({}).code, cli::kExitInputError);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"tradeoff", "/nonexistent/file.json"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"verify", "--trials", "0"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"verify", "--max-dim", "1"}).code, cli::kExitInputError);
  const auto path = write_file("np2.json", R"({"kind": "distributions", "p": [0.5, 0.5], "q": [0.5, 0.5]})");
  EXPECT_EQ(run({"fringe", path}).code, cli::kExitInputError);
  EXPECT_EQ(run({"np", path, "--out", "/nonexistent/dir/out.json"}).code, cli::kExitInputError);
  const auto mz = write_file("mz2.json", R"({"kind": "interferometer", "field": {"fock": 0}})");
  EXPECT_EQ(run({"fringe", mz, "--chi-steps", "1"}).code, cli::kExitInputError);
}

TEST(Cli, NonOrthogonalPairIsInputError) {
  const auto path = write_file("bad.json", R"({"kind": "pair", "psi1": [[1, 0], [0, 0]], "psi2": [[1, 0], [0, 0]],
    "measurement": {"basis": "standard"}})");
  EXPECT_EQ(run({"tradeoff", path}).code, cli::kExitInputError);
}

}  // namespace
}  // namespace qdist
