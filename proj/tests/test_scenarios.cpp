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

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "core/error.hpp"
#include "core/oracle.hpp"
#include "core/scenarios.hpp"

using namespace locdisc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_timestamp(std::string text) {
  static const std::regex ts("\"timestamp\": \"[^\"]*\"");
  return std::regex_replace(text, ts, "\"timestamp\": \"\"");
}

}  // namespace

TEST_CASE("worked example 4.1 scenario passes its claims") {
  ScenarioConfig cfg;
  cfg.scenario = "ex41";
  const ResultRecord rec = run_scenario(cfg);
  CHECK(rec.all_claims_pass());
  CHECK(exit_code_for(rec) == 0);
  for (const auto& c : rec.claims) {
    CHECK(!c.provenance.empty());
    CHECK(!c.reference.empty());
  }
}

TEST_CASE("worked example 4.3 scenario flags the asymmetry") {
  ScenarioConfig cfg;
  cfg.scenario = "ex43";
  const ResultRecord rec = run_scenario(cfg);
  CHECK(rec.all_claims_pass());
}

TEST_CASE("gaussian example records the unconfirmed printed constant") {
  ScenarioConfig cfg;
  cfg.scenario = "ex42";
  const ResultRecord rec = run_scenario(cfg);
  CHECK(rec.all_claims_pass());  // unconfirmed-constant does not fail the run
  int unconfirmed = 0;
  for (const auto& c : rec.claims)
    if (c.status == "unconfirmed-constant") {
      ++unconfirmed;
      CHECK(!c.note.empty());
    }
  CHECK(unconfirmed == 2);  // both printed 0.68 constants
  CHECK(exit_code_for(rec) == 0);
}

TEST_CASE("records round-trip and are deterministic up to the timestamp") {
  ScenarioConfig cfg;
  cfg.scenario = "ex41";
  cfg.seed = 99;
  const ResultRecord a = run_scenario(cfg);
  const ResultRecord b = run_scenario(cfg);
  CHECK(strip_timestamp(a.to_json().dump(2)) ==
        strip_timestamp(b.to_json().dump(2)));
  const ResultRecord back = ResultRecord::from_json(a.to_json());
  CHECK(back.to_json() == a.to_json());
}

TEST_CASE("write_results emits JSON plus a CSV for tabular scenarios") {
  ScenarioConfig cfg;
  cfg.scenario = "sweep";
  cfg.sizes = {60, 120};
  cfg.trials = 2;
  cfg.seed = 12;
  const ResultRecord rec = run_scenario(cfg);
  const std::string dir = "/tmp/locdisc_test_out";
  std::filesystem::remove_all(dir);
  const std::string json_path = write_results(rec, dir);
  CHECK(std::filesystem::exists(json_path));
  const std::string csv = slurp(dir + "/sweep.csv");
  CHECK(csv.rfind("size,seed,estimator,value\n", 0) == 0);
  // 2 sizes x 2 trials x 4 estimators = 16 data rows.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
  // Read-back equals the in-memory record.
  const ResultRecord back =
      ResultRecord::from_json(parse_json(slurp(json_path)));
  CHECK(back.to_json() == rec.to_json());
}

TEST_CASE("oracle-compare scenario on a handful of configurations") {
  ScenarioConfig cfg;
  cfg.scenario = "oracle-compare";
  cfg.configs = 6;
  cfg.oracle_resolution = 5e-4;
  cfg.seed = 4;
  const ResultRecord rec = run_scenario(cfg);
  CHECK(rec.all_claims_pass());
}

TEST_CASE("small containment scenario") {
  ScenarioConfig cfg;
  cfg.scenario = "lemma52";
  cfg.n = 800;
  cfg.trials = 40;
  const ResultRecord rec = run_scenario(cfg);
  CHECK(rec.all_claims_pass());
}

TEST_CASE("failed claims drive the exit code") {
  ResultRecord rec;
  rec.scenario = "synthetic";
  Claim c;
  c.id = "x";
  c.comparator = "le";
  c.expected = 0.0;
  c.actual = 1.0;
  c.status = "fail";
  rec.claims.push_back(c);
  CHECK(exit_code_for(rec) == 2);
}

TEST_CASE("unknown scenario is a configuration error") {
  ScenarioConfig cfg;
  cfg.scenario = "nope";
  CHECK_THROWS_AS(run_scenario(cfg), Error);
}

TEST_CASE("JSON round trips, including infinite thresholds") {
  const Hypothesis inf_h =
      Hypothesis::threshold(std::numeric_limits<double>::infinity(),
                            Orientation::kOneAbove);
  const Hypothesis back = hypothesis_from_json(to_json(inf_h));
  CHECK(hypothesis_equal(inf_h, back));
  CHECK(to_json(back)["t"] == "+inf");

  const Domain P = example42_source();
  const Domain rt = domain_from_json(to_json(P));
  CHECK(to_json(rt) == to_json(P));

  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::linear2d(-2.0, 2.0);
  const HypothesisClassDescriptor cls_rt = class_from_json(to_json(cls));
  CHECK(to_json(cls_rt) == to_json(cls));

  const LocalizationConstants c =
      LocalizationConstants::make(2000, 2, 0.1, 0.3, 2.0);
  const LocalizationConstants c_rt = localization_from_json(to_json(c));
  CHECK(c_rt.derived_fields_consistent());
  CHECK(to_json(c_rt) == to_json(c));
}

TEST_CASE("dense oracle agrees with closed forms") {
  const Domain narrow = example41_narrow(0.1);
  const Domain wide = example41_wide();
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(-0.5, 1.5);
  DiscrepancyKind kind;
  kind.tag = DiscrepancyKindTag::kHdhDivergence;
  const double v = oracle_sup(kind, narrow, wide, cls, 1e-4);
  CHECK(std::abs(v - 0.8) < 2e-3);

  DiscrepancyKind loc;
  loc.tag = DiscrepancyKindTag::kLocalizedHdh;
  loc.r = 0.05;
  const double lv = oracle_sup(loc, wide, narrow, cls, 1e-4);
  CHECK(std::abs(lv - 0.4) < 2e-3);  // r (1/eps - 2)

  DiscrepancyKind boosted;
  boosted.tag = DiscrepancyKindTag::kBoostedLocalizedHdh;
  boosted.r = 0.1;
  boosted.gamma = 2.0;
  const double bv = oracle_sup(boosted, narrow, wide, cls, 1e-4);
  CHECK(std::abs(bv - 0.01) < 2e-3);
}
