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

// Exercises the shared library the way an external client would: JSON in,
// JSON out, opaque handles, status codes.

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "locdisc/locdisc.h"

using Json = nlohmann::ordered_json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  locdisc_string_free(s);
  return out;
}

constexpr const char* kNarrowDomain = R"({
  "marginal": {"dimension": 1, "components": [
    {"weight": 1.0, "kind": "uniform_interval", "lo": 0.4, "hi": 0.6}]},
  "labeling": {"kind": "threshold", "t": 0.5, "orientation": "1-below"},
  "id": "narrow"
})";

constexpr const char* kWideDomain = R"({
  "marginal": {"dimension": 1, "components": [
    {"weight": 1.0, "kind": "uniform_interval", "lo": 0.0, "hi": 1.0}]},
  "labeling": {"kind": "threshold", "t": 0.5, "orientation": "1-below"},
  "id": "wide"
})";

constexpr const char* kThresholdClass = R"({
  "kind": "threshold-1d", "parameter_box": {"t": [-0.5, 1.5]}
})";

}  // namespace

TEST_CASE("version and error-state basics") {
  CHECK(std::string(locdisc_version()) == "0.1.0");
  locdisc_domain* dom = nullptr;
  CHECK(locdisc_domain_from_json("{not json", &dom) == LOCDISC_ERR_PARSE);
  CHECK(std::string(locdisc_last_error()).size() > 0);
}

TEST_CASE("domain and hypothesis round trips") {
  locdisc_domain* dom = nullptr;
  REQUIRE(locdisc_domain_from_json(kNarrowDomain, &dom) == LOCDISC_OK);
  char* out = nullptr;
  REQUIRE(locdisc_domain_to_json(dom, &out) == LOCDISC_OK);
  const Json j = Json::parse(take(out));
  CHECK(j["marginal"]["components"][0]["lo"] == 0.4);
  CHECK(j["labeling"]["orientation"] == "1-below");

  locdisc_hypothesis* hyp = nullptr;
  REQUIRE(locdisc_hypothesis_from_json(
              R"({"kind":"threshold","t":0.5,"orientation":"1-below"})",
              &hyp) == LOCDISC_OK);
  const double x03 = 0.3;
  int32_t label = -1;
  REQUIRE(locdisc_predict(hyp, &x03, 1, &label) == LOCDISC_OK);
  CHECK(label == 1);
  const double x05 = 0.5;
  REQUIRE(locdisc_predict(hyp, &x05, 1, &label) == LOCDISC_OK);
  CHECK(label == 0);
  // Dimension mismatch surfaces the right status.
  const double pt2[2] = {0.3, 0.4};
  CHECK(locdisc_predict(hyp, pt2, 2, &label) == LOCDISC_ERR_DIMENSION_MISMATCH);

  double err = -1.0;
  REQUIRE(locdisc_expected_error(dom, hyp, &err) == LOCDISC_OK);
  CHECK(err == 0.0);

  locdisc_hypothesis_free(hyp);
  locdisc_domain_free(dom);
}

TEST_CASE("sampling and empirical error through the C surface") {
  locdisc_domain* dom = nullptr;
  REQUIRE(locdisc_domain_from_json(kNarrowDomain, &dom) == LOCDISC_OK);
  locdisc_dataset* data = nullptr;
  REQUIRE(locdisc_sample(dom, 500, 7, 1, &data) == LOCDISC_OK);
  int64_t size = 0;
  REQUIRE(locdisc_dataset_size(data, &size) == LOCDISC_OK);
  CHECK(size == 500);

  locdisc_hypothesis* labeling = nullptr;
  REQUIRE(locdisc_hypothesis_from_json(
              R"({"kind":"threshold","t":0.5,"orientation":"1-below"})",
              &labeling) == LOCDISC_OK);
  double err = -1.0;
  REQUIRE(locdisc_empirical_error(data, labeling, &err) == LOCDISC_OK);
  CHECK(err == 0.0);

  char* json = nullptr;
  REQUIRE(locdisc_dataset_to_json(data, &json) == LOCDISC_OK);
  const std::string text = take(json);
  locdisc_dataset* back = nullptr;
  REQUIRE(locdisc_dataset_from_json(text.c_str(), &back) == LOCDISC_OK);
  int64_t size2 = 0;
  locdisc_dataset_size(back, &size2);
  CHECK(size2 == size);

  locdisc_dataset_free(back);
  locdisc_dataset_free(data);
  locdisc_hypothesis_free(labeling);
  locdisc_domain_free(dom);
}

TEST_CASE("localization constants and the radius status") {
  char* out = nullptr;
  REQUIRE(locdisc_localization_constants(
              R"({"n":2000,"d":2,"delta":0.1,"r":0.3})", &out) == LOCDISC_OK);
  const Json j = Json::parse(take(out));
  CHECK(std::abs(j["epsilon"].get<double>() - 0.12467443209418185) < 1e-14);
  CHECK(std::abs(j["c_minus"].get<double>() - 0.19339681907480938) < 1e-14);

  // gamma below 1 is invalid.
  CHECK(locdisc_localization_constants(
            R"({"n":2000,"d":2,"delta":0.1,"r":0.3,"gamma":0.5})", &out) ==
        LOCDISC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("population and empirical discrepancies through the C surface") {
  locdisc_domain* narrow = nullptr;
  locdisc_domain* wide = nullptr;
  REQUIRE(locdisc_domain_from_json(kNarrowDomain, &narrow) == LOCDISC_OK);
  REQUIRE(locdisc_domain_from_json(kWideDomain, &wide) == LOCDISC_OK);

  Json options;
  options["kind"] = "hdh-divergence";
  options["class"] = Json::parse(kThresholdClass);
  char* report = nullptr;
  REQUIRE(locdisc_discrepancy_population(narrow, wide, options.dump().c_str(),
                                         &report) == LOCDISC_OK);
  Json rep = Json::parse(take(report));
  CHECK(std::abs(rep["value"].get<double>() - 0.8) < 1e-6);
  CHECK(rep["mode"] == "population-grid");
  CHECK(rep["witness"].contains("h"));

  options["kind"] = "localized-hdh";
  options["r"] = 0.1;
  REQUIRE(locdisc_discrepancy_population(narrow, wide, options.dump().c_str(),
                                         &report) == LOCDISC_OK);
  rep = Json::parse(take(report));
  CHECK(std::abs(rep["value"].get<double>()) < 1e-9);

  // Empirical path over sampled datasets.
  locdisc_dataset* src = nullptr;
  locdisc_dataset* tgt = nullptr;
  REQUIRE(locdisc_sample(narrow, 400, 3, 1, &src) == LOCDISC_OK);
  REQUIRE(locdisc_sample(wide, 400, 4, 0, &tgt) == LOCDISC_OK);
  Json eopts;
  eopts["kind"] = "hdh-divergence";
  eopts["class"] = Json::parse(kThresholdClass);
  REQUIRE(locdisc_discrepancy_empirical(src, tgt, eopts.dump().c_str(),
                                        &report) == LOCDISC_OK);
  rep = Json::parse(take(report));
  CHECK(rep["mode"] == "empirical-exact");
  CHECK(rep["value"].get<double>() > 0.7);

  // Ideal joint error.
  Json iopts;
  iopts["class"] = Json::parse(kThresholdClass);
  char* ije = nullptr;
  REQUIRE(locdisc_ideal_joint_error(narrow, wide, iopts.dump().c_str(), &ije) ==
          LOCDISC_OK);
  const Json jij = Json::parse(take(ije));
  CHECK(jij["lambda"].get<double>() == 0.0);

  locdisc_dataset_free(src);
  locdisc_dataset_free(tgt);
  locdisc_domain_free(narrow);
  locdisc_domain_free(wide);
}

TEST_CASE("objectives and bounds through the C surface") {
  locdisc_domain* narrow = nullptr;
  locdisc_domain* wide = nullptr;
  REQUIRE(locdisc_domain_from_json(kNarrowDomain, &narrow) == LOCDISC_OK);
  REQUIRE(locdisc_domain_from_json(kWideDomain, &wide) == LOCDISC_OK);
  locdisc_dataset* src = nullptr;
  locdisc_dataset* tgt = nullptr;
  REQUIRE(locdisc_sample(narrow, 500, 5, 1, &src) == LOCDISC_OK);
  REQUIRE(locdisc_sample(wide, 500, 6, 0, &tgt) == LOCDISC_OK);

  Json opts;
  opts["objective"] = 13;
  opts["class"] = Json::parse(kThresholdClass);
  opts["constants"] = {{"n", 500}, {"d", 2}, {"delta", 0.1}, {"r", 0.55}};
  char* out = nullptr;
  REQUIRE(locdisc_solve_objective(src, tgt, opts.dump().c_str(), &out) ==
          LOCDISC_OK);
  const Json sol = Json::parse(take(out));
  CHECK(sol["feasible"] == true);
  CHECK(std::abs(sol["value"].get<double>() -
                 (sol["source_term"].get<double>() +
                  sol["discrepancy_term"].get<double>())) < 1e-12);

  // Radius below the capacity term surfaces LOCDISC_ERR_RADIUS.
  opts["constants"]["r"] = 0.2;
  CHECK(locdisc_solve_objective(src, tgt, opts.dump().c_str(), &out) ==
        LOCDISC_ERR_RADIUS);

  Json bopts;
  bopts["theorem"] = "3.2-hdh";
  bopts["h"] = {{"kind", "threshold"}, {"t", 0.52}, {"orientation", "1-below"}};
  bopts["r"] = 0.15;
  bopts["class"] = Json::parse(kThresholdClass);
  REQUIRE(locdisc_error_bound(narrow, wide, bopts.dump().c_str(), &out) ==
          LOCDISC_OK);
  const Json rep = Json::parse(take(out));
  CHECK(rep["holds"] == true);
  CHECK(std::abs(rep["lhs"].get<double>() - 0.02) < 1e-9);

  locdisc_dataset_free(src);
  locdisc_dataset_free(tgt);
  locdisc_domain_free(narrow);
  locdisc_domain_free(wide);
}

TEST_CASE("scenario runner and result writing through the C surface") {
  Json cfg;
  cfg["scenario"] = "ex41";
  char* result = nullptr;
  REQUIRE(locdisc_run_scenario(cfg.dump().c_str(), &result) == LOCDISC_OK);
  const std::string result_text = take(result);
  const Json rec = Json::parse(result_text);
  CHECK(rec["all_claims_pass"] == true);

  int32_t code = -1;
  REQUIRE(locdisc_result_exit_code(result_text.c_str(), &code) == LOCDISC_OK);
  CHECK(code == 0);

  const std::string dir = "/tmp/locdisc_capi_out";
  std::filesystem::remove_all(dir);
  char* path = nullptr;
  REQUIRE(locdisc_write_result(result_text.c_str(), dir.c_str(), &path) ==
          LOCDISC_OK);
  CHECK(std::filesystem::exists(take(path)));
}
