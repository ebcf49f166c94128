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

#ifndef QDIST_JSON_REPORT_HPP
#define QDIST_JSON_REPORT_HPP

#include <ostream>
#include <string>

#include "json.hpp"
#include "qdist/hypothesis.hpp"
#include "qdist/interferometer.hpp"
#include "qdist/measures.hpp"
#include "qdist/phase_field.hpp"
#include "qdist/verify.hpp"

namespace qdist {

using Json = nlohmann::ordered_json;

/// Decimal form with 17 significant digits ("%.17g").
std::string format_number(double value);

/// Pretty-prints with two-space indentation, keys in insertion order and
/// every floating-point number at 17 significant digits. Non-finite numbers
/// are written as null.
void write_json(std::ostream& os, const Json& value);
std::string dump_json(const Json& value);

Json complex_json(Complex c);
Json to_json(const TradeoffReport& report);
Json to_json(const ChainReport& report);
Json to_json(const NPTest& test);
Json to_json(const BoundReport& report);
Json to_json(const PhaseStats& stats);
Json to_json(const RelationReport& report);
Json to_json(const CounterexampleReport& report);
Json to_json(const IdealFringeReport& report);
Json to_json(const VerifyReport& report);

}  // namespace qdist

#endif  // QDIST_JSON_REPORT_HPP
