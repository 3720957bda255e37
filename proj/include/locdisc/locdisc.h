/* Copyright 2026 The locdisc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the locdisc shared library.
 *
 * Objects are opaque handles created from JSON descriptions and released with
 * the matching _free call. Every function returns a locdisc_status; on
 * failure locdisc_last_error() carries a thread-local message. Strings
 * returned through char** are heap-allocated and must be released with
 * locdisc_string_free().
 */

#ifndef LOCDISC_LOCDISC_H
#define LOCDISC_LOCDISC_H

#include <stdint.h>

#if defined(_WIN32)
#define LOCDISC_API __declspec(dllexport)
#else
#define LOCDISC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t locdisc_status;

enum {
  LOCDISC_OK = 0,
  LOCDISC_ERR_INVALID_ARGUMENT = 1,
  LOCDISC_ERR_DIMENSION_MISMATCH = 2,
  LOCDISC_ERR_PARSE = 3,
  LOCDISC_ERR_EMPTY_LOCALIZED_SPACE = 4,
  LOCDISC_ERR_INFEASIBLE = 5,
  LOCDISC_ERR_RADIUS = 6,
  LOCDISC_ERR_IO = 7,
  LOCDISC_ERR_INTERNAL = 8
};

typedef struct locdisc_domain locdisc_domain;
typedef struct locdisc_dataset locdisc_dataset;
typedef struct locdisc_hypothesis locdisc_hypothesis;

LOCDISC_API const char* locdisc_version(void);

/* Thread-local message describing the most recent failure. */
LOCDISC_API const char* locdisc_last_error(void);

LOCDISC_API void locdisc_string_free(char* s);

/* ---- domains ---------------------------------------------------------- */
/* JSON: {"marginal": {...}, "labeling": {...}}. 1-D marginals carry
 * "components" of uniform_interval/gaussian shapes; 2-D marginals are a
 * uniform_rect or uniform_segment. */
LOCDISC_API locdisc_status locdisc_domain_from_json(const char* json,
                                                    locdisc_domain** out);
LOCDISC_API locdisc_status locdisc_domain_to_json(const locdisc_domain* domain,
                                                  char** out_json);
LOCDISC_API void locdisc_domain_free(locdisc_domain* domain);

/* ---- hypotheses ------------------------------------------------------- */
/* JSON: {"kind":"threshold","t":...,"orientation":"1-below"|"1-above"} or
 * {"kind":"linear2d","theta":...,"b":...}. */
LOCDISC_API locdisc_status locdisc_hypothesis_from_json(const char* json,
                                                        locdisc_hypothesis** out);
LOCDISC_API locdisc_status locdisc_hypothesis_to_json(
    const locdisc_hypothesis* hypothesis, char** out_json);
LOCDISC_API void locdisc_hypothesis_free(locdisc_hypothesis* hypothesis);

/* point has `dim` coordinates; label is 0 or 1. */
LOCDISC_API locdisc_status locdisc_predict(const locdisc_hypothesis* hypothesis,
                                           const double* point, int32_t dim,
                                           int32_t* out_label);

/* ---- datasets --------------------------------------------------------- */
LOCDISC_API locdisc_status locdisc_sample(const locdisc_domain* domain,
                                          int64_t count, uint64_t seed,
                                          int32_t labeled,
                                          locdisc_dataset** out);
LOCDISC_API locdisc_status locdisc_dataset_from_json(const char* json,
                                                     locdisc_dataset** out);
LOCDISC_API locdisc_status locdisc_dataset_to_json(const locdisc_dataset* data,
                                                   char** out_json);
LOCDISC_API locdisc_status locdisc_dataset_size(const locdisc_dataset* data,
                                                int64_t* out_size);
LOCDISC_API void locdisc_dataset_free(locdisc_dataset* data);

/* ---- errors of hypotheses --------------------------------------------- */
LOCDISC_API locdisc_status locdisc_expected_error(
    const locdisc_domain* domain, const locdisc_hypothesis* hypothesis,
    double* out_error);
LOCDISC_API locdisc_status locdisc_empirical_error(
    const locdisc_dataset* data, const locdisc_hypothesis* hypothesis,
    double* out_error);

/* ---- localization constants ------------------------------------------- */
/* params: {"n":...,"d":...,"delta":...,"r":...[,"gamma":...]}; the reply
 * carries the derived capacity term and the two margins. */
LOCDISC_API locdisc_status locdisc_localization_constants(const char* params_json,
                                                          char** out_json);

/* ---- discrepancies ----------------------------------------------------- */
/* options: {"kind": "hdh-divergence"|"disparity"|"localized-hdh"|
 *           "localized-disparity"|"boosted-localized-hdh",
 *           "r":..., "gamma":..., "anchor": {...},
 *           "class": {"kind":"threshold-1d"|"linear-2d",
 *                     "parameter_box": {...}},
 *           "mode": "population-grid"|"empirical-exact"|"empirical-grid"|
 *                   "monte-carlo"}.
 * Population and monte-carlo modes take domains, empirical modes datasets.
 * The reply is a full report: value, witnesses, mode, resolution. */
LOCDISC_API locdisc_status locdisc_discrepancy_population(
    const locdisc_domain* source, const locdisc_domain* target,
    const char* options_json, char** out_report_json);
LOCDISC_API locdisc_status locdisc_discrepancy_empirical(
    const locdisc_dataset* source, const locdisc_dataset* target,
    const char* options_json, char** out_report_json);

/* Reply: {"lambda":..., "witness": {...}}. */
LOCDISC_API locdisc_status locdisc_ideal_joint_error(
    const locdisc_domain* source, const locdisc_domain* target,
    const char* options_json, char** out_json);

/* ---- objectives and bounds --------------------------------------------- */
/* options: {"objective": 13|16|21, "constants": {"n":...,"d":...,
 *           "delta":...,"r":...[,"gamma":...]}, "class": {...}}. */
LOCDISC_API locdisc_status locdisc_solve_objective(
    const locdisc_dataset* source, const locdisc_dataset* target,
    const char* options_json, char** out_solution_json);

/* options: {"theorem":"3.2-hdh"|"3.2-disparity"|"6.2",
 *           "h": {...}, "r":..., "gamma":..., "class": {...}}. */
LOCDISC_API locdisc_status locdisc_error_bound(const locdisc_domain* source,
                                               const locdisc_domain* target,
                                               const char* options_json,
                                               char** out_report_json);

/* ---- scenario harness --------------------------------------------------- */
/* config: {"scenario":"ex41"|...|"oracle-compare", ...overrides}. The reply
 * is the full result record with claims and pass/fail statuses. */
LOCDISC_API locdisc_status locdisc_run_scenario(const char* config_json,
                                                char** out_result_json);

/* Writes <scenario>.json (+ .csv for tabular scenarios) under out_dir and
 * returns the JSON path. */
LOCDISC_API locdisc_status locdisc_write_result(const char* result_json,
                                                const char* out_dir,
                                                char** out_path);

/* 0 when every claim passed, 2 otherwise. */
LOCDISC_API locdisc_status locdisc_result_exit_code(const char* result_json,
                                                    int32_t* out_code);

#ifdef __cplusplus
}
#endif

#endif /* LOCDISC_LOCDISC_H */
