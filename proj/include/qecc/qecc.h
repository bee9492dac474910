// Copyright 2026 The qecc Authors
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

#ifndef QECC_QECC_H
#define QECC_QECC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QECC_API __declspec(dllexport)
#else
#define QECC_API __attribute__((visibility("default")))
#endif

typedef enum qecc_status {
  QECC_OK = 0,
  QECC_ERR_CONFIG = 1,
  QECC_ERR_NUMERICAL = 2,
  QECC_ERR_IO = 3,
  QECC_ERR_INTERNAL = 4
} qecc_status;

typedef struct qecc_config qecc_config;
typedef struct qecc_result qecc_result;
typedef struct qecc_code qecc_code;

/* Message for the last failing call on this thread; "" if none. */
QECC_API const char* qecc_last_error(void);
QECC_API const char* qecc_version(void);

/* Configuration. */
QECC_API qecc_status qecc_config_create(qecc_config** out);
QECC_API qecc_status qecc_config_parse(const char* text, qecc_config** out);
QECC_API qecc_status qecc_config_load(const char* path, qecc_config** out);
QECC_API qecc_status qecc_config_set(qecc_config* config, const char* key, const char* value);
/* Copies the value into buf (NUL-terminated). *needed receives the full
 * length including the terminator; QECC_ERR_CONFIG if buf is too small. */
QECC_API qecc_status qecc_config_get(const qecc_config* config, const char* key, char* buf,
                                     size_t size, size_t* needed);
QECC_API void qecc_config_destroy(qecc_config* config);

/* Runs one subcommand: theory, simulate, sweep, verify-code, chaos, census. */
QECC_API qecc_status qecc_run(const qecc_config* config, const char* command, qecc_result** out);
QECC_API const char* qecc_result_csv(const qecc_result* result);
QECC_API const char* qecc_result_summary(const qecc_result* result);
QECC_API int qecc_result_passed(const qecc_result* result);
QECC_API void qecc_result_destroy(qecc_result* result);

/* Codes: a builtin name (five_qubit, steane) or a code file path. */
QECC_API qecc_status qecc_code_open(const char* name_or_path, qecc_code** out);
QECC_API qecc_status qecc_code_info(const qecc_code* code, size_t* n_spins, size_t* n_logical,
                                    size_t* max_errors);
QECC_API qecc_status qecc_code_verify(const qecc_code* code, double threshold, int* passed,
                                      double* max_violation);
QECC_API void qecc_code_destroy(qecc_code* code);

/* Closed-form fidelity bound. */
QECC_API qecc_status qecc_theory_f1(size_t n_spins, size_t degree, double kappa, double b2, double j2,
                                    double t, double* exact_sum, double* erf_form);
QECC_API qecc_status qecc_theory_rates(size_t n_spins, size_t degree, double kappa, double b2,
                                       double j2, double* t_r, double* delta_t);

#ifdef __cplusplus
}
#endif

#endif /* QECC_QECC_H */
