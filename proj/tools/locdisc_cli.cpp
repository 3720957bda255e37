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

// Command-line front end. All computation happens behind the C API of the
// locdisc shared library; this binary only assembles scenario configs from
// flags (optionally over a JSON config file; flags win) and renders results.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "locdisc/locdisc.h"

namespace {

using Json = nlohmann::ordered_json;

struct CommonFlags {
  std::string config_file;
  std::string out_dir;
  double epsilon = 0.0;
  double r = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double resolution = 0.0;
  int configs = 0;
  std::string sizes;
};

void add_common_flags(CLI::App* cmd, CommonFlags* f) {
  cmd->add_option("--config", f->config_file,
                  "JSON config file; explicit flags override its fields");
  cmd->add_option("--out", f->out_dir, "output directory for JSON/CSV results");
  cmd->add_option("--epsilon", f->epsilon, "geometry parameter epsilon");
  cmd->add_option("--r", f->r, "localization radius");
  cmd->add_option("--delta", f->delta, "confidence parameter");
  cmd->add_option("--gamma", f->gamma, "boost exponent");
  cmd->add_option("--n", f->n, "source sample size");
  cmd->add_option("--m", f->m, "target sample size");
  cmd->add_option("--trials", f->trials, "number of trials");
  cmd->add_option("--seed", f->seed, "base RNG seed");
  cmd->add_option("--resolution", f->resolution, "dense-oracle resolution");
  cmd->add_option("--configs", f->configs, "number of random configurations");
  cmd->add_option("--sizes", f->sizes, "comma-separated sample-size ladder");
}

Json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open config file " << path << "\n";
    std::exit(1);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "error: bad config JSON: " << e.what() << "\n";
    std::exit(1);
  }
}

std::vector<std::int64_t> parse_sizes(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      std::cerr << "error: bad size '" << item << "'\n";
      std::exit(1);
    }
  }
  return out;
}

// Config file first, then any flag the user actually passed on top.
Json build_config(const CLI::App* cmd, const CommonFlags& f,
                  const std::string& scenario) {
  Json cfg = Json::object();
  if (!f.config_file.empty()) cfg = load_config_file(f.config_file);
  cfg["scenario"] = scenario;
  auto passed = [&](const std::string& name) {
    return cmd->count(name) > 0;
  };
  if (passed("--epsilon")) cfg["epsilon"] = f.epsilon;
  if (passed("--r")) cfg["r"] = f.r;
  if (passed("--delta")) cfg["delta"] = f.delta;
  if (passed("--gamma")) cfg["gamma"] = f.gamma;
  if (passed("--n")) cfg["n"] = f.n;
  if (passed("--m")) cfg["m"] = f.m;
  if (passed("--trials")) cfg["trials"] = f.trials;
  if (passed("--seed")) cfg["seed"] = f.seed;
  if (passed("--resolution")) cfg["resolution"] = f.resolution;
  if (passed("--configs")) cfg["configs"] = f.configs;
  if (passed("--sizes")) cfg["sizes"] = parse_sizes(f.sizes);
  return cfg;
}

std::string resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("LOCDISC_OUT_DIR");
  return env ? env : "";
}

int run_and_report(const Json& cfg, const std::string& out_dir) {
  char* result_json = nullptr;
  const locdisc_status st =
      locdisc_run_scenario(cfg.dump().c_str(), &result_json);
  if (st != LOCDISC_OK) {
    std::cerr << "error: " << locdisc_last_error() << "\n";
    return 1;
  }
  Json result = Json::parse(result_json);

  std::cout << "scenario: " << result["scenario"].get<std::string>() << "\n";
  for (const auto& claim : result["claims"]) {
    const std::string status = claim["status"].get<std::string>();
    std::string tag = "PASS";
    if (status == "fail") tag = "FAIL";
    if (status == "unconfirmed-constant") tag = "UNCONFIRMED";
    std::cout << "  [" << tag << "] " << claim["id"].get<std::string>() << " ("
              << claim["reference"].get<std::string>() << "): actual "
              << claim["actual"].get<double>() << " vs "
              << claim["comparator"].get<std::string>() << " "
              << claim["expected"].get<double>();
    if (claim.contains("note"))
      std::cout << "  -- " << claim["note"].get<std::string>();
    std::cout << "\n";
  }

  if (!out_dir.empty()) {
    char* path = nullptr;
    const locdisc_status wst =
        locdisc_write_result(result_json, out_dir.c_str(), &path);
    if (wst != LOCDISC_OK) {
      std::cerr << "error: " << locdisc_last_error() << "\n";
      locdisc_string_free(result_json);
      return 1;
    }
    std::cout << "wrote " << path << "\n";
    locdisc_string_free(path);
  }

  int32_t code = 1;
  locdisc_result_exit_code(result_json, &code);
  locdisc_string_free(result_json);
  std::cout << (code == 0 ? "all claims pass" : "CLAIM FAILURES") << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locdisc: localized distribution-discrepancy verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(locdisc_version()));

  std::string example_id;
  CommonFlags ef;
  CLI::App* example = app.add_subcommand(
      "example", "reproduce a worked example (4.1, 4.2, 4.3, 4.4)");
  example->add_option("--id", example_id, "example id, e.g. 4.1")->required();
  add_common_flags(example, &ef);

  std::string suite_name;
  CommonFlags sf;
  CLI::App* suite = app.add_subcommand(
      "suite", "run a verification suite (lemma52, prop54, bounds)");
  suite->add_option("--name", suite_name, "suite name")->required();
  add_common_flags(suite, &sf);

  CommonFlags wf;
  CLI::App* sweep =
      app.add_subcommand("sweep", "convergence sweep over sample sizes");
  add_common_flags(sweep, &wf);

  CommonFlags of;
  CLI::App* oracle = app.add_subcommand(
      "oracle-compare", "engine vs dense-grid oracle on random configurations");
  add_common_flags(oracle, &of);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (example->parsed()) {
    std::string scenario;
    if (example_id == "4.1") scenario = "ex41";
    else if (example_id == "4.2") scenario = "ex42";
    else if (example_id == "4.3") scenario = "ex43";
    else if (example_id == "4.4") scenario = "ex44";
    else {
      std::cerr << "error: unknown example id " << example_id << "\n";
      return 1;
    }
    return run_and_report(build_config(example, ef, scenario),
                          resolve_out_dir(ef.out_dir));
  }
  if (suite->parsed()) {
    if (suite_name != "lemma52" && suite_name != "prop54" &&
        suite_name != "bounds") {
      std::cerr << "error: unknown suite " << suite_name << "\n";
      return 1;
    }
    return run_and_report(build_config(suite, sf, suite_name),
                          resolve_out_dir(sf.out_dir));
  }
  if (sweep->parsed())
    return run_and_report(build_config(sweep, wf, "sweep"),
                          resolve_out_dir(wf.out_dir));
  if (oracle->parsed())
    return run_and_report(build_config(oracle, of, "oracle-compare"),
                          resolve_out_dir(of.out_dir));
  return 1;
}
