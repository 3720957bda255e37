// Copyright 2026 The locdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOCDISC_CORE_JSON_IO_HPP
#define LOCDISC_CORE_JSON_IO_HPP

#include <json.hpp>

#include "core/discrepancy.hpp"
#include "core/localization.hpp"
#include "core/objectives.hpp"

namespace locdisc {

// Deterministic field order everywhere: records with equal content serialize
// to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Hypothesis& h);
Hypothesis hypothesis_from_json(const Json& j);

Json to_json(const Marginal& m);
Marginal marginal_from_json(const Json& j);

Json to_json(const Domain& d);
Domain domain_from_json(const Json& j);

Json to_json(const Dataset& d);
Dataset dataset_from_json(const Json& j);

Json to_json(const HypothesisClassDescriptor& c);
HypothesisClassDescriptor class_from_json(const Json& j);

Json to_json(const LocalizationConstants& c);
LocalizationConstants localization_from_json(const Json& j);

Json to_json(const DiscrepancyKind& k);
DiscrepancyKind discrepancy_kind_from_json(const Json& j);

Json to_json(const DiscrepancyReport& r);

Json to_json(const ObjectiveSolution& s);

Json to_json(const BoundReport& r);
// Fixed-column CSV row: theorem, lhs, <term values...>, rhs, holds.
std::string bound_report_csv_header(const BoundReport& r);
std::string bound_report_csv_row(const BoundReport& r);

// Parses text, mapping nlohmann exceptions onto ErrorCode::kParse.
Json parse_json(const std::string& text);

}  // namespace locdisc

#endif  // LOCDISC_CORE_JSON_IO_HPP
