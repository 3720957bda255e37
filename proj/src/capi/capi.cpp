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

#include "locdisc/locdisc.h"

#include <cstring>
#include <string>

#include "core/discrepancy.hpp"
#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/localization.hpp"
#include "core/objectives.hpp"
#include "core/scenarios.hpp"

using locdisc::Error;
using locdisc::ErrorCode;
using locdisc::Json;

struct locdisc_domain {
  locdisc::Domain value;
};
struct locdisc_dataset {
  locdisc::Dataset value;
};
struct locdisc_hypothesis {
  locdisc::Hypothesis value;
};

namespace {

thread_local std::string g_last_error;

locdisc_status set_error(ErrorCode code, const char* what) {
  g_last_error = what ? what : "";
  return static_cast<locdisc_status>(code);
}

template <typename F>
locdisc_status wrap(F&& f) {
  try {
    f();
    g_last_error.clear();
    return LOCDISC_OK;
  } catch (const Error& e) {
    return set_error(e.code(), e.what());
  } catch (const std::exception& e) {
    return set_error(ErrorCode::kInternal, e.what());
  } catch (...) {
    return set_error(ErrorCode::kInternal, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_arg(bool ok, const char* what) {
  locdisc::require(ok, ErrorCode::kInvalidArgument, what);
}

locdisc::ComputeMode mode_from(const Json& options, locdisc::ComputeMode fallback) {
  if (!options.contains("mode")) return fallback;
  const std::string m = options.at("mode").get<std::string>();
  if (m == "population-grid") return locdisc::ComputeMode::kPopulationGrid;
  if (m == "empirical-exact") return locdisc::ComputeMode::kEmpiricalExact;
  if (m == "empirical-grid") return locdisc::ComputeMode::kEmpiricalGrid;
  if (m == "monte-carlo") return locdisc::ComputeMode::kMonteCarlo;
  throw Error(ErrorCode::kParse, "unknown mode: " + m);
}

locdisc::SolverOptions solver_options_from(const Json& options) {
  locdisc::SolverOptions opts;
  if (options.contains("grid_fraction"))
    opts.grid_fraction = options.at("grid_fraction").get<double>();
  if (options.contains("refine_step"))
    opts.refine_step = options.at("refine_step").get<double>();
  if (options.contains("empirical_grid_step"))
    opts.empirical_grid_step = options.at("empirical_grid_step").get<double>();
  if (options.contains("mc_samples"))
    opts.mc_samples = options.at("mc_samples").get<std::int64_t>();
  if (options.contains("mc_seed"))
    opts.mc_seed = options.at("mc_seed").get<std::uint64_t>();
  return opts;
}

locdisc::LocalizationConstants constants_from(const Json& j) {
  std::optional<double> gamma;
  if (j.contains("gamma")) gamma = j.at("gamma").get<double>();
  return locdisc::LocalizationConstants::make(
      j.at("n").get<std::int64_t>(), j.at("d").get<int>(),
      j.at("delta").get<double>(), j.at("r").get<double>(), gamma);
}

locdisc_status discrepancy_impl(const locdisc::Side& source,
                                const locdisc::Side& target,
                                const char* options_json,
                                char** out_report_json,
                                locdisc::ComputeMode fallback_mode) {
  return wrap([&] {
    require_arg(options_json && out_report_json, "null argument");
    const Json options = locdisc::parse_json(options_json);
    const locdisc::DiscrepancyKind kind =
        locdisc::discrepancy_kind_from_json(options);
    locdisc::require(options.contains("class"), ErrorCode::kParse,
                     "options need a \"class\" descriptor");
    const locdisc::HypothesisClassDescriptor cls =
        locdisc::class_from_json(options.at("class"));
    const locdisc::ComputeMode mode = mode_from(options, fallback_mode);
    const locdisc::SolverOptions opts = solver_options_from(options);
    const locdisc::DiscrepancyReport report =
        locdisc::compute_discrepancy(kind, source, target, cls, mode, opts);
    *out_report_json = dup_string(locdisc::to_json(report).dump());
  });
}

}  // namespace

extern "C" {

const char* locdisc_version(void) { return "0.1.0"; }

const char* locdisc_last_error(void) { return g_last_error.c_str(); }

void locdisc_string_free(char* s) { delete[] s; }

locdisc_status locdisc_domain_from_json(const char* json, locdisc_domain** out) {
  return wrap([&] {
    require_arg(json && out, "null argument");
    *out = new locdisc_domain{
        locdisc::domain_from_json(locdisc::parse_json(json))};
  });
}

locdisc_status locdisc_domain_to_json(const locdisc_domain* domain,
                                      char** out_json) {
  return wrap([&] {
    require_arg(domain && out_json, "null argument");
    *out_json = dup_string(locdisc::to_json(domain->value).dump());
  });
}

void locdisc_domain_free(locdisc_domain* domain) { delete domain; }

locdisc_status locdisc_hypothesis_from_json(const char* json,
                                            locdisc_hypothesis** out) {
  return wrap([&] {
    require_arg(json && out, "null argument");
    *out = new locdisc_hypothesis{
        locdisc::hypothesis_from_json(locdisc::parse_json(json))};
  });
}

locdisc_status locdisc_hypothesis_to_json(const locdisc_hypothesis* hypothesis,
                                          char** out_json) {
  return wrap([&] {
    require_arg(hypothesis && out_json, "null argument");
    *out_json = dup_string(locdisc::to_json(hypothesis->value).dump());
  });
}

void locdisc_hypothesis_free(locdisc_hypothesis* hypothesis) {
  delete hypothesis;
}

locdisc_status locdisc_predict(const locdisc_hypothesis* hypothesis,
                               const double* point, int32_t dim,
                               int32_t* out_label) {
  return wrap([&] {
    require_arg(hypothesis && point && out_label, "null argument");
    locdisc::require(dim == hypothesis->value.dim(),
                     ErrorCode::kDimensionMismatch,
                     "point dimension does not match the hypothesis");
    locdisc::Point p{point[0], dim > 1 ? point[1] : 0.0};
    *out_label = hypothesis->value.predict(p);
  });
}

locdisc_status locdisc_sample(const locdisc_domain* domain, int64_t count,
                              uint64_t seed, int32_t labeled,
                              locdisc_dataset** out) {
  return wrap([&] {
    require_arg(domain && out, "null argument");
    *out = new locdisc_dataset{
        locdisc::sample(domain->value, count, seed, labeled != 0)};
  });
}

locdisc_status locdisc_dataset_from_json(const char* json,
                                         locdisc_dataset** out) {
  return wrap([&] {
    require_arg(json && out, "null argument");
    *out = new locdisc_dataset{
        locdisc::dataset_from_json(locdisc::parse_json(json))};
  });
}

locdisc_status locdisc_dataset_to_json(const locdisc_dataset* data,
                                       char** out_json) {
  return wrap([&] {
    require_arg(data && out_json, "null argument");
    *out_json = dup_string(locdisc::to_json(data->value).dump());
  });
}

locdisc_status locdisc_dataset_size(const locdisc_dataset* data,
                                    int64_t* out_size) {
  return wrap([&] {
    require_arg(data && out_size, "null argument");
    *out_size = static_cast<int64_t>(data->value.size());
  });
}

void locdisc_dataset_free(locdisc_dataset* data) { delete data; }

locdisc_status locdisc_expected_error(const locdisc_domain* domain,
                                      const locdisc_hypothesis* hypothesis,
                                      double* out_error) {
  return wrap([&] {
    require_arg(domain && hypothesis && out_error, "null argument");
    *out_error = locdisc::expected_error(hypothesis->value, domain->value);
  });
}

locdisc_status locdisc_empirical_error(const locdisc_dataset* data,
                                       const locdisc_hypothesis* hypothesis,
                                       double* out_error) {
  return wrap([&] {
    require_arg(data && hypothesis && out_error, "null argument");
    *out_error = locdisc::empirical_error(hypothesis->value, data->value);
  });
}

locdisc_status locdisc_localization_constants(const char* params_json,
                                              char** out_json) {
  return wrap([&] {
    require_arg(params_json && out_json, "null argument");
    const Json params = locdisc::parse_json(params_json);
    const locdisc::LocalizationConstants c = constants_from(params);
    *out_json = dup_string(locdisc::to_json(c).dump());
  });
}

locdisc_status locdisc_discrepancy_population(const locdisc_domain* source,
                                              const locdisc_domain* target,
                                              const char* options_json,
                                              char** out_report_json) {
  if (!source || !target)
    return set_error(ErrorCode::kInvalidArgument, "null domain");
  return discrepancy_impl(locdisc::Side::of(source->value),
                          locdisc::Side::of(target->value), options_json,
                          out_report_json,
                          locdisc::ComputeMode::kPopulationGrid);
}

locdisc_status locdisc_discrepancy_empirical(const locdisc_dataset* source,
                                             const locdisc_dataset* target,
                                             const char* options_json,
                                             char** out_report_json) {
  if (!source || !target)
    return set_error(ErrorCode::kInvalidArgument, "null dataset");
  return discrepancy_impl(locdisc::Side::of(source->value),
                          locdisc::Side::of(target->value), options_json,
                          out_report_json,
                          locdisc::ComputeMode::kEmpiricalExact);
}

locdisc_status locdisc_ideal_joint_error(const locdisc_domain* source,
                                         const locdisc_domain* target,
                                         const char* options_json,
                                         char** out_json) {
  return wrap([&] {
    require_arg(source && target && options_json && out_json, "null argument");
    const Json options = locdisc::parse_json(options_json);
    locdisc::require(options.contains("class"), ErrorCode::kParse,
                     "options need a \"class\" descriptor");
    const locdisc::HypothesisClassDescriptor cls =
        locdisc::class_from_json(options.at("class"));
    const locdisc::IdealJointError ije = locdisc::ideal_joint_error(
        source->value, target->value, cls, solver_options_from(options));
    Json j;
    j["lambda"] = ije.lambda;
    j["witness"] = locdisc::to_json(ije.witness);
    *out_json = dup_string(j.dump());
  });
}

locdisc_status locdisc_solve_objective(const locdisc_dataset* source,
                                       const locdisc_dataset* target,
                                       const char* options_json,
                                       char** out_solution_json) {
  return wrap([&] {
    require_arg(source && target && options_json && out_solution_json,
                "null argument");
    const Json options = locdisc::parse_json(options_json);
    const int objective = options.at("objective").get<int>();
    const locdisc::HypothesisClassDescriptor cls =
        locdisc::class_from_json(options.at("class"));
    const locdisc::LocalizationConstants c =
        constants_from(options.at("constants"));
    locdisc::ObjectiveSolution sol;
    if (objective == 13) {
      sol = locdisc::solve_objective_13(source->value, target->value, cls, c);
    } else if (objective == 16) {
      sol = locdisc::solve_objective_16(source->value, target->value, cls, c);
    } else if (objective == 21) {
      sol = locdisc::solve_objective_21(source->value, target->value, cls, c);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "objective must be 13, 16 or 21");
    }
    *out_solution_json = dup_string(locdisc::to_json(sol).dump());
  });
}

locdisc_status locdisc_error_bound(const locdisc_domain* source,
                                   const locdisc_domain* target,
                                   const char* options_json,
                                   char** out_report_json) {
  return wrap([&] {
    require_arg(source && target && options_json && out_report_json,
                "null argument");
    const Json options = locdisc::parse_json(options_json);
    const std::string theorem = options.at("theorem").get<std::string>();
    const locdisc::Hypothesis h =
        locdisc::hypothesis_from_json(options.at("h"));
    const locdisc::HypothesisClassDescriptor cls =
        locdisc::class_from_json(options.at("class"));
    const double r = options.at("r").get<double>();
    locdisc::BoundReport report;
    if (theorem == "3.2-hdh") {
      report = locdisc::error_bound_rhs_thm32(h, source->value, target->value,
                                              cls, r,
                                              locdisc::Thm32Variant::kHdh);
    } else if (theorem == "3.2-disparity") {
      report = locdisc::error_bound_rhs_thm32(
          h, source->value, target->value, cls, r,
          locdisc::Thm32Variant::kDisparity);
    } else if (theorem == "6.2") {
      report = locdisc::error_bound_rhs_thm62(h, source->value, target->value,
                                              cls, r,
                                              options.at("gamma").get<double>());
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown theorem: " + theorem);
    }
    *out_report_json = dup_string(locdisc::to_json(report).dump());
  });
}

locdisc_status locdisc_run_scenario(const char* config_json,
                                    char** out_result_json) {
  return wrap([&] {
    require_arg(config_json && out_result_json, "null argument");
    const locdisc::ScenarioConfig cfg =
        locdisc::ScenarioConfig::from_json(locdisc::parse_json(config_json));
    const locdisc::ResultRecord rec = locdisc::run_scenario(cfg);
    *out_result_json = dup_string(rec.to_json().dump());
  });
}

locdisc_status locdisc_write_result(const char* result_json,
                                    const char* out_dir, char** out_path) {
  return wrap([&] {
    require_arg(result_json && out_dir, "null argument");
    const locdisc::ResultRecord rec =
        locdisc::ResultRecord::from_json(locdisc::parse_json(result_json));
    const std::string path = locdisc::write_results(rec, out_dir);
    if (out_path) *out_path = dup_string(path);
  });
}

locdisc_status locdisc_result_exit_code(const char* result_json,
                                        int32_t* out_code) {
  return wrap([&] {
    require_arg(result_json && out_code, "null argument");
    const locdisc::ResultRecord rec =
        locdisc::ResultRecord::from_json(locdisc::parse_json(result_json));
    *out_code = locdisc::exit_code_for(rec);
  });
}

}  // extern "C"
