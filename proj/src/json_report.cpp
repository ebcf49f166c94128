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

#include "qdist/json_report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qdist {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

void write_value(std::ostream& os, const Json& v, int depth) {
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      std::size_t i = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        indent(os, depth + 1);
        os << Json(it.key()).dump() << ": ";
        write_value(os, it.value(), depth + 1);
        os << (i + 1 < v.size() ? ",\n" : "\n");
      }
      indent(os, depth);
      os << "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        indent(os, depth + 1);
        write_value(os, v[i], depth + 1);
        os << (i + 1 < v.size() ? ",\n" : "\n");
      }
      indent(os, depth);
      os << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      os << (std::isfinite(d) ? format_number(d) : "null");
      return;
    }
    default:
      os << v.dump();
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json threshold_json(double t) { return std::isinf(t) ? Json("inf") : Json(t); }

}  // namespace

void write_json(std::ostream& os, const Json& value) {
  write_value(os, value, 0);
  os << "\n";
}

std::string dump_json(const Json& value) {
  std::ostringstream os;
  write_json(os, value);
  return os.str();
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const TradeoffReport& report) {
  Json j;
  j["indistinguishability"] = report.indistinguishability;
  j["interference_power"] = report.interference;
  j["slack"] = report.slack;
  j["all_rank_one"] = report.all_rank_one;
  Json rows = Json::array();
  for (const auto& o : report.per_outcome) {
    rows.push_back({{"label", o.label},
                    {"p", o.p},
                    {"q", o.q},
                    {"interference", o.interference},
                    {"visibility", optional_number(o.visibility)}});
  }
  j["per_outcome"] = std::move(rows);
  return j;
}

Json to_json(const ChainReport& report) {
  const auto s = report.slacks();
  return {{"detect_indistinguishability", report.detect_indistinguishability},
          {"refined_indistinguishability", report.refined_indistinguishability},
          {"refined_interference", report.refined_interference},
          {"interference", report.interference},
          {"refined_outcomes", report.refined_outcomes},
          {"slacks", Json::array({s[0], s[1], s[2]})}};
}

Json to_json(const NPTest& test) {
  return {{"threshold", threshold_json(test.threshold)}, {"tie_acceptance", test.tie_acceptance}};
}

Json to_json(const BoundReport& report) {
  Json j;
  j["indistinguishability"] = report.indistinguishability;
  j["sum_bound"] = report.sum_bound;
  j["product_bound"] = report.product_bound;
  j["tests_checked"] = report.tests_checked;
  j["min_sum_slack"] = report.min_sum_slack;
  j["min_product_slack"] = report.min_product_slack;
  j["max_error_sum"] = report.max_error_sum;
  j["tightest_sum_test"] = to_json(report.tightest_sum_test);
  j["tightest_product_test"] = to_json(report.tightest_product_test);
  if (report.regions_checked) {
    j["regions_checked"] = *report.regions_checked;
    j["region_min_sum"] = *report.region_min_sum;
    j["region_sum_slack"] = *report.region_sum_slack;
  }
  return j;
}

Json to_json(const PhaseStats& stats) {
  return {{"exp_phase", complex_json(stats.exp_phase)},
          {"delta_phi_sq", stats.delta_phi_sq},
          {"vacuum_prob", stats.vacuum_prob},
          {"mean_n", stats.mean_n},
          {"delta_n", stats.delta_n}};
}

Json to_json(const RelationReport& report) {
  return {{"lhs", report.lhs},
          {"rhs_squared", report.rhs_squared},
          {"rhs_linear", report.rhs_linear},
          {"squared_holds", report.squared_holds()},
          {"linear_holds", report.linear_holds()}};
}

Json to_json(const CounterexampleReport& report) {
  return {{"n0", report.n0},
          {"n1", report.n1},
          {"truncation", report.truncation},
          {"phase", to_json(report.stats)},
          {"number_spread_large", report.number_spread_large},
          {"indistinguishability", report.indistinguishability},
          {"interference_power", report.interference_power}};
}

Json to_json(const IdealFringeReport& report) {
  return {{"beam_a_at_zero", report.beam_a_at_zero},       {"beam_b_at_pi", report.beam_b_at_pi},
          {"beam_a_at_half_pi", report.beam_a_at_half_pi}, {"beam_b_at_half_pi", report.beam_b_at_half_pi},
          {"visibility_a", report.visibility_a},           {"visibility_b", report.visibility_b},
          {"holds", report.holds()}};
}

Json to_json(const VerifyReport& report) {
  Json j;
  j["command"] = "verify";
  j["seed"] = report.options.seed;
  j["trials"] = report.options.trials;
  j["max_dim"] = report.options.max_dim;
  j["tolerance"] = report.options.tolerance;
  Json props = Json::array();
  for (const auto& p : report.properties) {
    Json e;
    e["name"] = p.name;
    e["description"] = p.description;
    e["core"] = p.core;
    e["trials"] = p.trials;
    e["passed"] = p.passed;
    e["violations"] = p.trials - p.passed;
    e["worst_margin"] = p.worst_margin;
    if (!p.all_passed() && !p.witness.empty()) {
      Json state = Json::array();
      for (Complex c : p.witness) state.push_back(complex_json(c));
      e["counter_state"] = std::move(state);
    }
    props.push_back(std::move(e));
  }
  j["properties"] = std::move(props);
  j["core_passed"] = report.core_passed();
  return j;
}

}  // namespace qdist
