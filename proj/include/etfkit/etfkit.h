/*
 * Copyright 2026 The Etfkit Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to etfkit: equiangular tight frames from tournaments,
 * conference matrices, and quadratic residues.
 *
 * Every fallible call returns an etf_status. On failure, etf_last_error()
 * returns a message describing the most recent failure on the calling
 * thread. Objects are opaque and owned by the caller; release them with the
 * matching *_destroy function. Strings returned through char** out
 * parameters are released with etf_string_free.
 */

#ifndef ETFKIT_ETFKIT_H_
#define ETFKIT_ETFKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ETF_API __declspec(dllexport)
#else
#define ETF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum etf_status {
  ETF_OK = 0,
  ETF_ERR_INVALID_ARGUMENT = 1,
  ETF_ERR_NOT_PRIME = 2,
  ETF_ERR_DEGREE_ZERO = 3,
  ETF_ERR_ORDER_TOO_LARGE = 4,
  ETF_ERR_DIVISION_BY_ZERO = 5,
  ETF_ERR_FIELD_MISMATCH = 6,
  ETF_ERR_EVEN_CHARACTERISTIC = 7,
  ETF_ERR_NOT_HERMITIAN = 8,
  ETF_ERR_NO_CONVERGENCE = 9,
  ETF_ERR_DIMENSION_MISMATCH = 10,
  ETF_ERR_NEGATIVE_EIGENVALUE = 11,
  ETF_ERR_WRONG_RESIDUE_CLASS = 12,
  ETF_ERR_BAD_BORDER = 13,
  ETF_ERR_CORE_IDENTITY_FAILED = 14,
  ETF_ERR_SPECTRUM_MISMATCH = 15,
  ETF_ERR_RANK_DEFICIENT = 16,
  ETF_ERR_INDEX_OUT_OF_RANGE = 17,
  ETF_ERR_NOT_CONFERENCE = 18,
  ETF_ERR_INVALID_DIMENSIONS = 19,
  ETF_ERR_MALFORMED_FILE = 20,
  ETF_ERR_IO = 21,
  ETF_ERR_INTERNAL = 99
} etf_status;

typedef struct etf_field etf_field;
typedef struct etf_frame etf_frame;
typedef struct etf_report etf_report;

ETF_API const char* etf_status_name(etf_status status);
ETF_API const char* etf_last_error(void);
ETF_API void etf_string_free(char* s);

/* Finite fields. Elements are passed by their integer encoding in [0, q). */
ETF_API etf_status etf_field_create(uint32_t p, uint32_t m, etf_field** out);
ETF_API void etf_field_destroy(etf_field* field);
ETF_API uint32_t etf_field_order(const etf_field* field);
ETF_API uint32_t etf_field_characteristic(const etf_field* field);
ETF_API uint32_t etf_field_degree(const etf_field* field);
ETF_API etf_status etf_field_trace(const etf_field* field, uint32_t a, uint32_t* out);
ETF_API etf_status etf_field_quadratic_character(const etf_field* field, uint32_t a,
                                                 int* out);
ETF_API etf_status etf_field_sigma(const etf_field* field, uint32_t c, uint32_t a,
                                   double* re, double* im);
ETF_API etf_status etf_field_gauss_sum(const etf_field* field, uint32_t c, double* re,
                                       double* im);

/* Frame construction. Zero means "unset" for every size field. */
typedef struct etf_generate_params {
  const char* construction; /* paley-upper, zauner, ... */
  const char* source;       /* drop-one-canonical source; NULL means zauner */
  uint64_t n;
  uint64_t q;
  uint32_t p;
  uint32_t m;
  uint32_t k;
  uint64_t drop_index;
  uint32_t character_c;
} etf_generate_params;

ETF_API void etf_generate_params_init(etf_generate_params* params);
ETF_API etf_status etf_frame_generate(const etf_generate_params* params,
                                      etf_frame** out);
ETF_API etf_status etf_frame_read(const char* path, etf_frame** out);
ETF_API etf_status etf_frame_parse(const char* json, etf_frame** out);
ETF_API etf_status etf_frame_write(const etf_frame* frame, const char* path);
ETF_API etf_status etf_frame_to_json(const etf_frame* frame, char** out);
ETF_API etf_status etf_frame_drop_one(const etf_frame* frame, size_t index,
                                      etf_frame** out);
ETF_API void etf_frame_destroy(etf_frame* frame);

ETF_API size_t etf_frame_n(const etf_frame* frame);
ETF_API size_t etf_frame_d(const etf_frame* frame);
ETF_API const char* etf_frame_construction(const etf_frame* frame);
/* Component `component` of vector `vector`. */
ETF_API etf_status etf_frame_entry(const etf_frame* frame, size_t vector,
                                   size_t component, double* re, double* im);

/* (n - d) / (d (n - 1)). */
ETF_API etf_status etf_welch_target(size_t n, size_t d, double* out);

/* Verification. tol <= 0 selects the default 1e-9. */
ETF_API etf_status etf_frame_verify(const etf_frame* frame, double tol,
                                    etf_report** out);
ETF_API etf_status etf_experiment_run(uint32_t k, double tol, etf_report** out);
ETF_API void etf_report_destroy(etf_report* report);
ETF_API int etf_report_passed(const etf_report* report);
ETF_API size_t etf_report_check_count(const etf_report* report);
ETF_API etf_status etf_report_check(const etf_report* report, size_t index,
                                    const char** name, double* target,
                                    double* measured, double* tolerance, int* pass);
/* "Equal", "ConjugateEqual", "Different", or NULL when no comparison ran. */
ETF_API const char* etf_report_comparison(const etf_report* report);
ETF_API etf_status etf_report_to_json(const etf_report* report, char** out);

/* Builds and verifies every catalogued frame with n <= max_n and writes the
 * CSV to path. rows and failed may be NULL. */
ETF_API etf_status etf_catalog_write_csv(size_t max_n, const char* path, size_t* rows,
                                         size_t* failed);

#ifdef __cplusplus
}
#endif

#endif /* ETFKIT_ETFKIT_H_ */
