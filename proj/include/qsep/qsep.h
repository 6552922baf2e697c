// Copyright 2026 The qsep Authors
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

/* C interface to the qsep entanglement-detection library.
 *
 * States are opaque handles owned by the caller and released with
 * qsep_state_free. Every fallible call returns a qsep_status; on failure a
 * description is available from qsep_last_error() on the same thread until
 * the next failing call. Complex matrices cross the boundary as row-major
 * arrays of interleaved (re, im) doubles. */
#ifndef QSEP_QSEP_H_
#define QSEP_QSEP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QSEP_BUILDING_LIBRARY)
#    define QSEP_API __declspec(dllexport)
#  else
#    define QSEP_API __declspec(dllimport)
#  endif
#else
#  define QSEP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsep_status {
  QSEP_OK = 0,
  QSEP_ERR_INVALID_ARGUMENT = 1, /* null pointer, short buffer, bad enum */
  QSEP_ERR_DOMAIN = 2,
  QSEP_ERR_DIMENSION = 3,
  QSEP_ERR_VALIDATION = 4,
  QSEP_ERR_NUMERICAL = 5,
  QSEP_ERR_SINGULAR_FILTER = 6,
  QSEP_ERR_SINGULAR_REDUCTION = 7,
  QSEP_ERR_IO = 8,
  QSEP_ERR_PARSE = 9,
  QSEP_ERR_INTERNAL = 10
} qsep_status;

typedef struct qsep_state qsep_state;

QSEP_API const char* qsep_version(void);
QSEP_API const char* qsep_status_string(qsep_status status);
QSEP_API const char* qsep_last_error(void);

/* ---- states ------------------------------------------------------------ */

/* matrix: (dim_a*dim_b)^2 complex entries, i.e. 2*(dim_a*dim_b)^2 doubles. */
QSEP_API qsep_status qsep_state_from_matrix(int dim_a, int dim_b,
                                            const double* matrix,
                                            qsep_state** out);
QSEP_API qsep_status qsep_state_maximally_mixed(int dim_a, int dim_b,
                                                qsep_state** out);
QSEP_API qsep_status qsep_state_gentiles2(int m, int n, qsep_state** out);
QSEP_API qsep_status qsep_state_max_entangled(int d, qsep_state** out);
QSEP_API qsep_status qsep_state_random_pure(int m, int n, uint64_t seed,
                                            qsep_state** out);
QSEP_API qsep_status qsep_state_random_mixed(int m, int n, int rank,
                                             uint64_t seed, qsep_state** out);
QSEP_API qsep_status qsep_state_random_separable(int m, int n, int terms,
                                                 uint64_t seed,
                                                 qsep_state** out);
/* p * base + (1 - p) * I / MN */
QSEP_API qsep_status qsep_state_white_noise(const qsep_state* base, double p,
                                            qsep_state** out);
QSEP_API qsep_status qsep_state_clone(const qsep_state* state, qsep_state** out);
QSEP_API void qsep_state_free(qsep_state* state);

QSEP_API qsep_status qsep_state_dims(const qsep_state* state, int* dim_a,
                                     int* dim_b);
/* len is the number of doubles available in out (>= 2*(MN)^2). */
QSEP_API qsep_status qsep_state_copy_matrix(const qsep_state* state,
                                            double* out, size_t len);
QSEP_API qsep_status qsep_state_purity(const qsep_state* state, double* out);

/* Optional metadata carried into and out of state files. name may be NULL to
 * clear it. qsep_state_name returns NULL when unset; the pointer is valid
 * until the state is modified or freed. */
QSEP_API qsep_status qsep_state_set_name(qsep_state* state, const char* name);
QSEP_API const char* qsep_state_name(const qsep_state* state);
QSEP_API qsep_status qsep_state_set_seed(qsep_state* state, uint64_t seed);
/* *has_seed receives 0 or 1. */
QSEP_API qsep_status qsep_state_seed(const qsep_state* state, int* has_seed,
                                     uint64_t* seed);

QSEP_API qsep_status qsep_state_load(const char* path, qsep_state** out);
QSEP_API qsep_status qsep_state_save(const qsep_state* state, const char* path);
/* Writes the state-file text (NUL-terminated) into buf. *required receives
 * the buffer size needed including the terminator; pass buf = NULL, cap = 0
 * to query it. Returns QSEP_ERR_INVALID_ARGUMENT if cap is too small. */
QSEP_API qsep_status qsep_state_to_json(const qsep_state* state, char* buf,
                                        size_t cap, size_t* required);

/* ---- criteria ---------------------------------------------------------- */

typedef enum qsep_criterion {
  QSEP_CRITERION_PPT = 0,
  QSEP_CRITERION_CCNR = 1,
  QSEP_CRITERION_CM_TRACE = 2,
  QSEP_CRITERION_CM_HS = 3
} qsep_criterion;

#define QSEP_CRITERION_COUNT 4

typedef struct qsep_criterion_report {
  qsep_criterion id;
  double value;
  double threshold;
  double margin; /* value - threshold */
  int entangled; /* margin > detection tolerance */
  qsep_status status; /* QSEP_OK unless this criterion failed */
} qsep_criterion_report;

QSEP_API const char* qsep_criterion_name(qsep_criterion id);

/* Fills out[0..3] in the order PPT, CCNR, CM_TRACE, CM_HS. A failing
 * criterion sets its own status and NaN values; the call still returns OK. */
QSEP_API qsep_status qsep_criteria_evaluate(const qsep_state* state,
                                            double detection_tol,
                                            qsep_criterion_report out[4]);

QSEP_API qsep_status qsep_criterion_evaluate(const qsep_state* state,
                                             qsep_criterion id,
                                             double detection_tol,
                                             qsep_criterion_report* out);

/* ---- filter normal form ------------------------------------------------ */

typedef struct qsep_fnf_options {
  double tol;
  int max_iter;
  double eps;
} qsep_fnf_options;

typedef struct qsep_fnf_info {
  int iterations;
  int converged;
  double residual; /* max(|r|, |s|) of the normal form */
} qsep_fnf_info;

QSEP_API qsep_fnf_options qsep_fnf_default_options(void);

/* f_a / f_b may be NULL; otherwise they receive 2*M*M / 2*N*N doubles. */
QSEP_API qsep_status qsep_fnf(const qsep_state* state,
                              const qsep_fnf_options* options,
                              qsep_state** normal_form, double* f_a,
                              double* f_b, qsep_fnf_info* info);

/* Normalized (F_A x F_B) rho (F_A x F_B)^dagger. */
QSEP_API qsep_status qsep_apply_filter(const qsep_state* state,
                                       const double* f_a, const double* f_b,
                                       qsep_state** out);

/* ---- measures ---------------------------------------------------------- */

typedef enum qsep_measure {
  QSEP_MEASURE_CONCURRENCE = 0,
  QSEP_MEASURE_TANGLE = 1,
  QSEP_MEASURE_MNB = 2
} qsep_measure;

typedef enum qsep_estimate_kind {
  QSEP_KIND_EXACT_PURE = 0,
  QSEP_KIND_LOWER_BOUND = 1,
  QSEP_KIND_UPPER_BOUND = 2,
  QSEP_KIND_EXACT_CLOSED_FORM = 3
} qsep_estimate_kind;

typedef enum qsep_bound_source {
  QSEP_SOURCE_PURE_REDUCTION = 0,
  QSEP_SOURCE_PURE_BLOCH = 1,
  QSEP_SOURCE_PURE_CM = 2,
  QSEP_SOURCE_CAF = 3,
  QSEP_SOURCE_CM_TRACE_BOUND = 4,
  QSEP_SOURCE_HS_TANGLE_BOUND = 5,
  QSEP_SOURCE_BLOCH_UPPER = 6,
  QSEP_SOURCE_MNB_DEF = 7,
  QSEP_SOURCE_MNB_CM = 8,
  QSEP_SOURCE_WOOTTERS = 9
} qsep_bound_source;

typedef struct qsep_measure_estimate {
  qsep_measure measure;
  qsep_estimate_kind kind;
  qsep_bound_source source;
  double value; /* clamped into the measure's range for lower bounds */
  double raw;   /* formula value before clamping */
  int swapped;  /* formula took dim_b as the smaller dimension */
} qsep_measure_estimate;

#define QSEP_MAX_ESTIMATES 16

QSEP_API const char* qsep_measure_name(qsep_measure id);
QSEP_API const char* qsep_estimate_kind_name(qsep_estimate_kind kind);
QSEP_API const char* qsep_bound_source_name(qsep_bound_source source);

/* Writes every applicable estimate; *count receives how many. capacity must
 * be at least QSEP_MAX_ESTIMATES. */
QSEP_API qsep_status qsep_measures_evaluate(const qsep_state* state,
                                            qsep_measure_estimate* out,
                                            size_t capacity, size_t* count);

/* ---- white-noise sweep ------------------------------------------------- */

typedef struct qsep_sweep_result {
  qsep_criterion id;
  int detected;     /* 0: never detected on [0, 1] */
  double threshold; /* smallest detected p when detected */
  int monotone;     /* criterion value non-decreasing along the pre-scan */
  int evaluations;
} qsep_sweep_result;

QSEP_API qsep_status qsep_sweep_noise(const qsep_state* state,
                                      qsep_criterion id, int resolution,
                                      double bisect_tol, double detection_tol,
                                      qsep_sweep_result* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSEP_QSEP_H_ */
