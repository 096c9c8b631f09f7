/* Copyright 2026 The Authors.
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

/* C interface to the hypercube analysis library. All functions return a
 * status code; HCUBE_OK means success. On failure the thread-local message
 * from hcube_last_error() describes what went wrong and output parameters
 * are left untouched. Strings returned through char** out parameters are
 * heap-allocated and must be released with hcube_string_free().
 */

#ifndef HCUBE_H_
#define HCUBE_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define HCUBE_API __declspec(dllexport)
#else
#define HCUBE_API __attribute__((visibility("default")))
#endif

typedef enum hcube_status {
  HCUBE_OK = 0,
  HCUBE_ERR_INVALID_ARGUMENT = 1,
  HCUBE_ERR_DIMENSION_MISMATCH = 2,
  HCUBE_ERR_PARSE = 3,
  HCUBE_ERR_IO = 4,
  HCUBE_ERR_NOT_APPLICABLE = 5,
  HCUBE_ERR_NO_CONVERGENCE = 6,
  HCUBE_ERR_INTERNAL = 7
} hcube_status;

/* Tri-state verdicts for verification calls. */
#define HCUBE_VERDICT_VIOLATED 0
#define HCUBE_VERDICT_SATISFIED 1
#define HCUBE_VERDICT_NOT_APPLICABLE (-1)

typedef struct hcube_function hcube_function;

HCUBE_API const char* hcube_version(void);

/* Message describing the most recent failure on this thread. */
HCUBE_API const char* hcube_last_error(void);

HCUBE_API void hcube_string_free(char* s);

/* Dimension guard for table-sized allocations (default 26, hard cap 40). */
HCUBE_API hcube_status hcube_set_max_dimension(int n);

/* ---- Function handles ------------------------------------------------- */

/* Accepts {"n", "kind", "values"} or the compact {"n", "bits_hex"} form. */
HCUBE_API hcube_status hcube_function_from_json(const char* json,
                                                hcube_function** out);

HCUBE_API hcube_status hcube_function_to_json(const hcube_function* f,
                                              int compact, char** out_json);

/* Family spec: {"name": "and", "n": 2, "coords": [1,2], "k": 0,
 * "width": 0, "count": 0, "seed": 1, "universe": 0, "terms": 0}.
 * Only "name" and "n" are required; the rest default as shown. */
HCUBE_API hcube_status hcube_function_generate(const char* family_spec_json,
                                               hcube_function** out);

HCUBE_API hcube_status hcube_function_dual(const hcube_function* f,
                                           hcube_function** out);

HCUBE_API int hcube_function_dimension(const hcube_function* f);

/* Copies the 2^n table values; buffer_len must be at least 2^n. */
HCUBE_API hcube_status hcube_function_values(const hcube_function* f,
                                             double* buffer,
                                             uint64_t buffer_len);

HCUBE_API void hcube_function_free(hcube_function* f);

/* ---- Scalar queries ---------------------------------------------------- */

HCUBE_API hcube_status hcube_mean(const hcube_function* f, double* out);
HCUBE_API hcube_status hcube_inner_product(const hcube_function* f,
                                           const hcube_function* g,
                                           double* out);
HCUBE_API hcube_status hcube_covariance(const hcube_function* f,
                                        const hcube_function* g, double* out);
HCUBE_API hcube_status hcube_lp_norm(const hcube_function* f, double p,
                                     double* out);
HCUBE_API hcube_status hcube_influence(const hcube_function* f, int i,
                                       double p, double* out);

/* ---- Operators (new handles) ------------------------------------------- */

HCUBE_API hcube_status hcube_derivative(const hcube_function* f, int i,
                                        hcube_function** out);
HCUBE_API hcube_status hcube_signed_difference(const hcube_function* f, int i,
                                               hcube_function** out);
HCUBE_API hcube_status hcube_second_derivative(const hcube_function* f, int i,
                                               int j, hcube_function** out);
HCUBE_API hcube_status hcube_signed_second_difference(const hcube_function* f,
                                                      int i, int j,
                                                      hcube_function** out);
HCUBE_API hcube_status hcube_noise(const hcube_function* f, double t,
                                   hcube_function** out);
HCUBE_API hcube_status hcube_restrict(const hcube_function* f, int i, int bit,
                                      hcube_function** out);

/* ---- Transforms --------------------------------------------------------- */

/* Function file JSON -> spectrum JSON {"n", "coeffs"}. */
HCUBE_API hcube_status hcube_transform_json(const char* function_json,
                                            char** out_spectrum_json);

/* Spectrum JSON -> function file JSON (kind "real"). */
HCUBE_API hcube_status hcube_inverse_transform_json(const char* spectrum_json,
                                                    char** out_function_json);

/* ---- Analysis ----------------------------------------------------------- */

/* Monotonicity, modularity class, antipodality, influences, interaction
 * graph, all in one JSON document. */
HCUBE_API hcube_status hcube_profile_json(const hcube_function* f,
                                          char** out_json);

/* ---- Verification -------------------------------------------------------
 * params_json may be NULL; recognized keys: theta, d, i, p, q, t.
 * A NULL g is treated as g = f (single-function bounds ignore g anyway).
 * out_verdict receives one of the HCUBE_VERDICT_* values.
 */

HCUBE_API hcube_status hcube_verify_json(const char* bound_id,
                                         const hcube_function* f,
                                         const hcube_function* g,
                                         const char* params_json,
                                         char** out_report_json,
                                         int* out_verdict);

/* Combined report for the two antipodal-pair lower bounds ("chvatal").
 * The verdict is violated if either sub-report is violated, else satisfied
 * if either applies, else not-applicable. */
HCUBE_API hcube_status hcube_chvatal_json(const hcube_function* f,
                                          const hcube_function* g,
                                          char** out_report_json,
                                          int* out_verdict);

/* Averaged covariance bound over a family of increasing boolean functions. */
HCUBE_API hcube_status hcube_verify_family_json(
    const hcube_function* const* family, uint64_t count,
    char** out_report_json, int* out_verdict);

/* ---- Integral identities -------------------------------------------------
 * identity_id: heat-partial | heat-d | level-d | restriction | barrier.
 * params_json may be NULL; recognized keys: d (level-d), i, j, s, t
 * (barrier), rel_tol. out_agree receives 1 or 0.
 */
HCUBE_API hcube_status hcube_identity_json(const char* identity_id,
                                           const hcube_function* f,
                                           const hcube_function* g,
                                           const char* params_json,
                                           char** out_report_json,
                                           int* out_agree);

/* ---- Monotone universe ---------------------------------------------------
 * Spec JSON keys (all optional except n): n, filter, bound, params{...},
 * threads, allow_large, sample_count, seed, exemplar_cap.
 */

HCUBE_API hcube_status hcube_scan_json(const char* scan_spec_json,
                                       char** out_report_json, char** out_csv,
                                       uint64_t* out_violations);

/* method: 0 = half-cube recursion, 1 = truth-table filter. */
HCUBE_API hcube_status hcube_monotone_count(int n, int method, int threads,
                                            uint64_t* out_count);

/* {"version", "n", "count", "tables": ["<bits_hex>", ...]} */
HCUBE_API hcube_status hcube_enumerate_monotone_json(int n, char** out_json);

/* mode: majority | dictator | tribes-dual; width is the tribe width for
 * tribes-dual (ignored otherwise). */
HCUBE_API hcube_status hcube_tightness_csv(const char* mode, const int* dims,
                                           uint64_t dims_len, int width,
                                           char** out_csv);

/* ---- Smoothing kernel ---------------------------------------------------- */

HCUBE_API hcube_status hcube_kernel_integral(double r, double* out_value);

HCUBE_API hcube_status hcube_kernel_bound_json(double r, char** out_json,
                                               int* out_verdict);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HCUBE_H_ */
