/* Copyright 2026 The polydrive Authors
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

/* C interface of libpolydrive.
 *
 * Every fallible call returns a pd_status. On failure the calling thread's
 * pd_last_error() holds a message until its next failing call. Handles are
 * opaque and owned by the caller; strings and arrays returned through a
 * handle stay valid until that handle is freed.
 */

#ifndef POLYDRIVE_POLYDRIVE_H_
#define POLYDRIVE_POLYDRIVE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(POLYDRIVE_BUILDING_LIBRARY)
#define PD_API __attribute__((visibility("default")))
#else
#define PD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
  PD_OK = 0,
  PD_INVALID_ARGUMENT = 1,
  PD_DIMENSION_MISMATCH = 2,
  PD_NOT_HERMITIAN = 3,
  PD_NEAR_SINGULAR = 4,
  PD_CORRUPTED_STATE = 5,
  PD_STEP_UNDERFLOW = 6,
  PD_NON_FINITE = 7,
  PD_NEGATIVE_DENSITY = 8,
  PD_UNKNOWN_LABEL = 9,
  PD_UNKNOWN_SCENARIO = 10,
  PD_IO = 11,
  PD_INTERNAL = 12
} pd_status;

typedef struct pd_scenario pd_scenario;
typedef struct pd_result pd_result;
typedef struct pd_verify_report pd_verify_report;

typedef struct pd_integrator_config {
  double rel_tol;
  double abs_tol;
  double initial_step; /* 0 selects automatically */
  double max_step;     /* 0 selects automatically */
  int norm_check_interval;
} pd_integrator_config;

typedef struct pd_diagnostics {
  const char* curve;
  int mixed;
  double max_norm_drift;
  double min_eigenvalue;
  uint64_t steps;
  uint64_t rejected_steps;
  uint64_t renormalizations;
} pd_diagnostics;

typedef enum pd_ratio_kind {
  PD_CONCLUSION_I = 1,
  PD_CONCLUSION_II = 2,
  PD_GENERIC = 3
} pd_ratio_kind;

typedef struct pd_ratio_class {
  pd_ratio_kind kind;
  int64_t j;
  int64_t k;
} pd_ratio_class;

typedef struct pd_scan_row {
  double value;
  double metric;
  int ok;
  char error[256];
} pd_scan_row;

typedef struct pd_verify_overrides {
  int has_interaction;
  double interaction; /* U / Omega */
  int has_rel_tol;
  double rel_tol;
} pd_verify_overrides;

typedef struct pd_check {
  const char* name;
  double value;
  double threshold;
  int at_least;
  int passed;
  const char* error; /* empty when the check was evaluated */
} pd_check;

PD_API const char* pd_version(void);
PD_API const char* pd_last_error(void);
PD_API const char* pd_status_string(pd_status status);
PD_API int pd_status_is_integration_failure(pd_status status);

PD_API void pd_integrator_config_default(pd_integrator_config* cfg);

/* Drive and classification queries. */
PD_API pd_status pd_classify(int64_t p, int64_t q, pd_ratio_class* out);
/* Writes e.g. "ConclusionI(j=0,k=0)" including the terminator; fails with
 * PD_INVALID_ARGUMENT when `capacity` is too small. */
PD_API pd_status pd_ratio_class_string(const pd_ratio_class* cls, char* buffer, size_t capacity);
PD_API pd_status pd_stabilization_windows(int64_t k, int count, double* starts, double* ends);
/* Delta for 2 sqrt(M) Omega / Delta = p / q. */
PD_API pd_status pd_spacing(double omega, int64_t p, int64_t q, int m, double* out);

/* Scenarios. */
PD_API size_t pd_builtin_count(void);
PD_API const char* pd_builtin_id(size_t index);
PD_API pd_status pd_scenario_builtin(const char* id, pd_scenario** out);
PD_API pd_status pd_scenario_from_json(const char* json, pd_scenario** out);
PD_API pd_status pd_scenario_set(pd_scenario* s, const char* axis, double value);
PD_API const char* pd_scenario_id(const pd_scenario* s);
PD_API void pd_scenario_free(pd_scenario* s);

PD_API pd_status pd_run(const pd_scenario* s, const pd_integrator_config* cfg, pd_result** out);
PD_API pd_status pd_scan(const pd_scenario* base, const char* axis, const double* values,
                         size_t count, const char* reduction, const pd_integrator_config* cfg,
                         pd_scan_row* rows);

/* Results. */
PD_API size_t pd_result_samples(const pd_result* r);
PD_API const char* pd_result_time_label(const pd_result* r);
PD_API const double* pd_result_times(const pd_result* r);
PD_API size_t pd_result_column_count(const pd_result* r);
PD_API const char* pd_result_column_name(const pd_result* r, size_t index);
PD_API const double* pd_result_column(const pd_result* r, size_t index);
PD_API pd_status pd_result_find_column(const pd_result* r, const char* name, size_t* index);
PD_API size_t pd_result_metadata_count(const pd_result* r);
PD_API const char* pd_result_metadata_key(const pd_result* r, size_t index);
PD_API const char* pd_result_metadata_value(const pd_result* r, size_t index);
PD_API size_t pd_result_diagnostics_count(const pd_result* r);
PD_API pd_status pd_result_diagnostics(const pd_result* r, size_t index, pd_diagnostics* out);
/* format: "csv" or "json". */
PD_API pd_status pd_result_write(const pd_result* r, const char* path, const char* format);
PD_API void pd_result_free(pd_result* r);

/* Verification suites: "two-level", "bell", "w", "lambda", "all". */
PD_API pd_status pd_verify(const char* suite, const pd_verify_overrides* overrides,
                           pd_verify_report** out);
PD_API int pd_verify_report_passed(const pd_verify_report* report);
PD_API size_t pd_verify_report_count(const pd_verify_report* report);
PD_API pd_status pd_verify_report_check(const pd_verify_report* report, size_t index, pd_check* out);
PD_API void pd_verify_report_free(pd_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* POLYDRIVE_POLYDRIVE_H_ */
