// Copyright 2026 The smoothmax Authors
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

#ifndef SMOOTHMAX_SMOOTHMAX_H_
#define SMOOTHMAX_SMOOTHMAX_H_

/* C interface to the smoothmax library.
 *
 * Objects are opaque handles created by sm_*_create / sm_* calls and released
 * with the matching sm_*_destroy. Every fallible call returns an sm_status;
 * on failure sm_last_error() describes the problem (per thread). Output
 * arguments are written only on success. */

#include <stddef.h>
#include <stdint.h>

#if defined(SMOOTHMAX_BUILDING_LIBRARY)
#define SM_API __attribute__((visibility("default")))
#else
#define SM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sm_status {
  SM_OK = 0,
  SM_ERR_INVALID_ARGUMENT = 1,
  SM_ERR_DOMAIN = 2,
  SM_ERR_NUMERICAL = 3,
  SM_ERR_CERTIFICATION = 4,
  SM_ERR_IO = 5,
  SM_ERR_RANGE = 6,
  SM_ERR_INTERNAL = 7
} sm_status;

SM_API const char* sm_version(void);
SM_API const char* sm_status_name(sm_status status);
SM_API const char* sm_last_error(void);

/* ---- text ---- */
typedef struct sm_text sm_text;
SM_API const char* sm_text_data(const sm_text* text);
SM_API size_t sm_text_size(const sm_text* text);
SM_API void sm_text_destroy(sm_text* text);

/* ---- vectors ---- */
typedef struct sm_vector sm_vector;
SM_API sm_status sm_vector_create(const double* data, size_t n, sm_vector** out);
SM_API sm_status sm_vector_parse(const char* text, sm_vector** out);
SM_API sm_status sm_vector_read_file(const char* path, sm_vector** out);
SM_API sm_status sm_vector_write_file(const sm_vector* v, const char* path);
SM_API void sm_vector_destroy(sm_vector* v);
SM_API size_t sm_vector_size(const sm_vector* v);
SM_API const double* sm_vector_data(const sm_vector* v);
SM_API int sm_vector_is_integral(const sm_vector* v);
SM_API sm_status sm_format_number(double x, sm_text** out);

/* ---- summary ---- */
typedef struct sm_summary sm_summary;
SM_API sm_status sm_summarize(const sm_vector* v, sm_summary** out);
SM_API void sm_summary_destroy(sm_summary* s);
SM_API double sm_summary_max(const sm_summary* s);
SM_API double sm_summary_min(const sm_summary* s);
SM_API size_t sm_summary_distinct_count(const sm_summary* s);
/* i-th largest distinct value, its multiplicity and its gap below the max. */
SM_API sm_status sm_summary_distinct(const sm_summary* s, size_t i, double* value,
                                     size_t* multiplicity, double* gap);

/* ---- smooth approximations ---- */
typedef enum sm_method {
  SM_METHOD_L = 0,
  SM_METHOD_R = 1,
  SM_METHOD_RK = 2,
  SM_METHOD_D = 3,
  SM_METHOD_PNORM = 4,
  SM_METHOD_CONTOUR = 5
} sm_method;

typedef struct sm_approx {
  double value;
  sm_method method;
  double t;     /* the exponent p for SM_METHOD_PNORM */
  int k;
  double alpha;
  int certified;
} sm_approx;

SM_API const char* sm_method_name(sm_method m);
SM_API sm_status sm_eval_lcal(const sm_vector* v, double u, double* out);
/* t is p for PNORM; k is used by RK; alpha by D. CONTOUR is not accepted here. */
SM_API sm_status sm_eval(const sm_vector* v, sm_method method, double t, int k, double alpha,
                         sm_approx* out);
SM_API sm_status sm_contour_max(const sm_vector* v, int k, double r, int n_points, double* out);
/* out[j - 1] = j-th u-derivative of log F_v at u = log t, j = 1..order. */
SM_API sm_status sm_log_derivatives(const sm_vector* v, double t, int order, double* out);

/* ---- bounds and certified recovery ---- */
typedef enum sm_theorem {
  SM_THEOREM_L = 0,
  SM_THEOREM_R = 1,
  SM_THEOREM_D = 2,
  SM_THEOREM_PNORM = 3
} sm_theorem;

typedef struct sm_bound_request {
  size_t n;
  size_t mu_max;
  double g2;       /* 1 for integral data */
  double delta;
  double alpha;    /* D only; 0 when unused */
  double m_upper;  /* PNORM only; 0 when unused */
} sm_bound_request;

SM_API sm_status sm_bound(sm_theorem theorem, const sm_bound_request* req, double* t_min,
                          int* closed_form);
SM_API sm_status sm_certified_max(const sm_vector* v, int64_t* out);
SM_API sm_status sm_certified_multiplicity(const sm_vector* v, int64_t* max, int64_t* mu);
SM_API sm_status sm_combined_max(const sm_vector* v, double t, double* out);
SM_API sm_status sm_combined_g2(const sm_vector* v, double t, double* out);
SM_API sm_status sm_second_value(const sm_vector* v, int64_t* value, double* t_used);
/* r x r row-major lower-triangular matrix of reduced fractions num/den. */
SM_API sm_status sm_stirling_matrix(int r, int64_t* num, int64_t* den);

/* ---- convolution ---- */
typedef enum sm_backend {
  SM_BACKEND_AUTO = 0,
  SM_BACKEND_FFT_FLOAT = 1,
  SM_BACKEND_EXACT_INT = 2,
  SM_BACKEND_DIRECT = 3
} sm_backend;

typedef enum sm_algorithm { SM_ALGORITHM_L = 0, SM_ALGORITHM_D = 1 } sm_algorithm;
typedef enum sm_rounding { SM_ROUND_FLOOR = 0, SM_ROUND_CEIL = 1, SM_ROUND_NEAREST = 2 } sm_rounding;

SM_API const char* sm_backend_name(sm_backend b);

/* Classical convolution; exact_decimal (optional) receives one decimal
 * integer per line for SM_BACKEND_EXACT_INT. */
SM_API sm_status sm_convolve(const sm_vector* x, const sm_vector* y, sm_backend backend,
                             sm_vector** values, double* max_error, sm_text** exact_decimal);

typedef struct sm_maxconv_options {
  sm_algorithm algorithm;
  double t_star;      /* 0 selects the default */
  double alpha_star;  /* 0 selects the default (D only) */
  sm_backend backend;
  int nearest;        /* two-sided rounding */
  int minimize;       /* min-plus instead of max-plus */
  int real_valued;    /* no rounding; t_star required */
  double delta;       /* audit tolerance for real_valued; 0 selects 1e-3 */
} sm_maxconv_options;

typedef struct sm_maxconv_result sm_maxconv_result;
SM_API void sm_maxconv_options_init(sm_maxconv_options* o);
SM_API sm_status sm_maxconv(const sm_vector* a, const sm_vector* b,
                            const sm_maxconv_options* options, sm_maxconv_result** out);
SM_API void sm_maxconv_result_destroy(sm_maxconv_result* r);
SM_API size_t sm_maxconv_result_size(const sm_maxconv_result* r);
SM_API const double* sm_maxconv_result_coefficients(const sm_maxconv_result* r);
SM_API const double* sm_maxconv_result_raw(const sm_maxconv_result* r);
SM_API const double* sm_maxconv_result_raw_error(const sm_maxconv_result* r);
SM_API int sm_maxconv_result_certified(const sm_maxconv_result* r);
SM_API sm_backend sm_maxconv_result_backend(const sm_maxconv_result* r);
SM_API sm_rounding sm_maxconv_result_rounding(const sm_maxconv_result* r);
SM_API double sm_maxconv_result_t_star(const sm_maxconv_result* r);
SM_API double sm_maxconv_result_alpha_star(const sm_maxconv_result* r); /* 0 for L */
SM_API double sm_maxconv_result_fft_error_bound(const sm_maxconv_result* r);
SM_API size_t sm_maxconv_result_patched(const sm_maxconv_result* r);
/* Exact power sums (integer base only): l_k = sums[k] * t*^offset. */
SM_API sm_status sm_maxconv_result_exact_sums(const sm_maxconv_result* r, sm_text** decimal,
                                              double* exponent_offset);

/* ---- applications ---- */
typedef struct sm_curve sm_curve;
SM_API sm_status sm_curve_create(const double* times, const double* values, size_t n,
                                 sm_curve** out);
SM_API sm_status sm_curve_read_csv(const char* path, sm_curve** out);
SM_API sm_status sm_curve_write_csv(const sm_curve* c, const char* path);
SM_API sm_status sm_curve_format_csv(const sm_curve* c, sm_text** out);
SM_API void sm_curve_destroy(sm_curve* c);
SM_API size_t sm_curve_size(const sm_curve* c);
SM_API const double* sm_curve_times(const sm_curve* c);
SM_API const double* sm_curve_values(const sm_curve* c);
SM_API int sm_curve_monotone(const sm_curve* c);

/* Ascending coefficients c_0 + c_1 T + ...; N samples on [0, t_max]. */
SM_API sm_status sm_discretize(const double* coefficients, size_t count, double t_max, size_t n,
                               sm_curve** out);
/* Built-in service example: R, beta(T) = T and gamma(T) = max(0, T - 3). */
SM_API sm_status sm_service_example(double t_max, size_t n, sm_curve** r, sm_curve** beta,
                                    sm_curve** gamma);

typedef struct sm_service_options {
  double alpha;    /* 0 selects 1.01 */
  double t;        /* 0 selects (1/(N-1))^25 */
  double delta;    /* 0 selects 1e-3 */
  sm_backend backend;
} sm_service_options;

SM_API sm_status sm_service_bounds(const sm_curve* r, const sm_curve* beta,
                                   const sm_curve* gamma, const sm_service_options* options,
                                   sm_curve** lower, sm_curve** upper);

/* out[k-1] = largest sum of k consecutive entries; t = 0 selects the default. */
SM_API sm_status sm_mcsp(const sm_vector* v, int include_full_sum, double t, sm_vector** out,
                         int* certified);

/* ---- tropical data ---- */
typedef struct sm_line {
  int vertical;
  double slope;
  double intercept;
  int min_tentacle; /* 0 = max tentacle, 1 = min tentacle */
} sm_line;

/* xy receives up to three (x, y) pairs; count is 2 or 3. */
SM_API sm_status sm_newton_polygon(const sm_vector* v, int64_t xy[6], size_t* count,
                                   int* degenerate);
SM_API sm_status sm_tentacle_lines(const sm_vector* v, sm_line out[2]);
SM_API sm_status sm_trop_rays(const sm_vector* v, int64_t xy[6]);
SM_API sm_status sm_amoeba_boundary(const sm_vector* v, double u_min, double u_max,
                                    size_t samples, double* u, double* s);
/* CSV emitters: `u,s` and `kind,slope,intercept,label`. */
SM_API sm_status sm_amoeba_csv(const sm_vector* v, double u_min, double u_max, size_t samples,
                               sm_text** out);
SM_API sm_status sm_tentacles_csv(const sm_vector* v, sm_text** out);

/* ---- experiments ---- */
typedef enum sm_experiment_kind {
  SM_EXPERIMENT_INTEGER = 0,
  SM_EXPERIMENT_UNIFORM = 1,
  SM_EXPERIMENT_CLUSTER = 2
} sm_experiment_kind;

typedef enum sm_delta_rule {
  SM_DELTA_ONE = 0,
  SM_DELTA_EXP1 = 1,
  SM_DELTA_INV_N = 2,
  SM_DELTA_HUNDREDTH = 3
} sm_delta_rule;

typedef struct sm_experiment_config {
  sm_experiment_kind kind;
  int M;
  int n_max;
  int reps;
  sm_delta_rule delta_rule;
  int g_steps;
  int eps_steps;
  uint64_t seed;
  unsigned threads; /* 0 = hardware concurrency */
} sm_experiment_config;

SM_API void sm_experiment_config_init(sm_experiment_config* cfg);
SM_API sm_status sm_run_experiment(const sm_experiment_config* cfg, sm_text** csv);
/* method is SM_METHOD_L or SM_METHOD_R. */
SM_API sm_status sm_find_tstar(const sm_vector* v, sm_method method, double delta, double* out);

#ifdef __cplusplus
}
#endif

#endif /* SMOOTHMAX_SMOOTHMAX_H_ */
