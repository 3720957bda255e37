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

#ifndef LOCDISC_CORE_SCENARIOS_HPP
#define LOCDISC_CORE_SCENARIOS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/json_io.hpp"

namespace locdisc {

// Scenario ids: ex41 ex42 ex43 ex44 lemma52 prop54 bounds sweep
// oracle-compare.
struct ScenarioConfig {
  std::string scenario;
  double epsilon = 0.1;
  std::vector<double> r_list;  // per-scenario defaults when empty
  double delta = 0.1;
  std::vector<double> gamma_list;  // bounds suite; default {1, 1.5, 2, 3}
  std::int64_t n = 0;              // 0 -> scenario default
  std::int64_t m = 0;
  int trials = 0;
  std::uint64_t seed = 1;
  double oracle_resolution = 1e-4;  // absolute step of the dense oracle
  double grid_resolution = 1e-3;    // enumeration step as a span fraction
  std::vector<std::int64_t> sizes;  // sweep ladder
  int configs = 50;                 // oracle-compare
  std::string out_dir;

  void apply_defaults();
  static ScenarioConfig from_json(const Json& j);
  Json to_json() const;
};

struct Claim {
  std::string id;
  std::string reference;   // which example/theorem the expectation comes from
  std::string comparator;  // "abs-tol" | "le" | "ge"
  double expected = 0.0;
  double tolerance = 0.0;  // abs-tol only
  double actual = 0.0;
  std::string provenance;  // "paper" | "derived-oracle" | "trivial"
  std::string status;      // "pass" | "fail" | "unconfirmed-constant"
  std::string note;
};

struct SweepRow {
  std::int64_t size = 0;
  std::uint64_t seed = 0;
  std::string estimator;
  double value = 0.0;
};

struct ResultRecord {
  int schema_version = 1;
  std::string scenario;
  Json inputs;
  Json outputs;
  std::vector<Claim> claims;
  std::vector<SweepRow> table;          // sweep scenarios
  std::vector<std::string> csv_extra;   // preformatted rows (bounds suite)
  std::string csv_extra_header;
  std::string timestamp;

  bool all_claims_pass() const;  // no claim with status "fail"
  Json to_json() const;
  static ResultRecord from_json(const Json& j);
};

ResultRecord run_scenario(const ScenarioConfig& config);

// Writes <scenario>.json (full record) and, when tabular data is present,
// a sibling <scenario>.csv. Returns the JSON path.
std::string write_results(const ResultRecord& record,
                          const std::string& out_dir);

// 0: all claims pass; 2: some claim failed.
int exit_code_for(const ResultRecord& record);

// The example domains and classes, exposed for tests and the C API.
Domain example41_narrow(double epsilon);  // uniform around 1/2, labeled there
Domain example41_wide();                  // uniform on [0,1], same labeling
Domain example42_source();
Domain example42_target();
Domain example44_square();
Domain example44_segment();
HypothesisClassDescriptor example_threshold_class(double lo, double hi);
HypothesisClassDescriptor example_linear_class();

}  // namespace locdisc

#endif  // LOCDISC_CORE_SCENARIOS_HPP
