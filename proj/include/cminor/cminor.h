/* Copyright 2026 The Cminor Workbench Authors
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

/* C interface of the workbench. Objects are opaque handles released with
 * the matching *_free function. Every call returns a cminor_status; on
 * failure cminor_last_error() describes the problem (per thread). Strings
 * returned through handles stay valid until the handle is freed; strings
 * returned through char** are heap copies released with
 * cminor_string_free. */

#ifndef CMINOR_CMINOR_H_
#define CMINOR_CMINOR_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CMINOR_API __declspec(dllexport)
#else
#define CMINOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cminor_status {
  CMINOR_OK = 0,
  CMINOR_ERR_INVALID_ARGUMENT = 1,
  CMINOR_ERR_PARSE = 2,
  CMINOR_ERR_IO = 3,
  CMINOR_ERR_NOT_FOUND = 4,
  CMINOR_ERR_INTERNAL = 5
} cminor_status;

typedef enum cminor_value_kind {
  CMINOR_VUNDEF = 0,
  CMINOR_VINT = 1,
  CMINOR_VPTR = 2,
  CMINOR_VFLOAT = 3
} cminor_value_kind;

typedef struct cminor_value {
  cminor_value_kind kind;
  int32_t i;       /* CMINOR_VINT */
  uint32_t block;  /* CMINOR_VPTR */
  int32_t offset;  /* CMINOR_VPTR */
  double f;        /* CMINOR_VFLOAT */
} cminor_value;

typedef enum cminor_outcome_kind {
  CMINOR_FINISHED = 0,
  CMINOR_STUCK = 1,
  CMINOR_OUT_OF_FUEL = 2
} cminor_outcome_kind;

typedef struct cminor_program cminor_program;
typedef struct cminor_outcome cminor_outcome;
typedef struct cminor_report cminor_report;

typedef struct cminor_run_options {
  int erased;            /* nonzero: footprint checks off */
  int trace;             /* nonzero: record a step trace */
  const char* mutation;  /* NULL or a mutation name, e.g. "broken-exit" */
} cminor_run_options;

CMINOR_API const char* cminor_version(void);
CMINOR_API const char* cminor_last_error(void);
/* Position of the last parse error, 0 when unknown. */
CMINOR_API int cminor_last_error_line(void);
CMINOR_API int cminor_last_error_column(void);
CMINOR_API void cminor_string_free(char* s);

/* Literal syntax of the language: integers, floats, nan, inf, undef. */
CMINOR_API cminor_status cminor_value_parse(const char* text, cminor_value* out);
CMINOR_API cminor_status cminor_value_format(const cminor_value* v, char** out);

CMINOR_API cminor_status cminor_program_parse(const char* text,
                                              cminor_program** out);
CMINOR_API cminor_status cminor_program_load(const char* path,
                                             cminor_program** out);
CMINOR_API void cminor_program_free(cminor_program* p);
CMINOR_API cminor_status cminor_program_format(const cminor_program* p,
                                               char** out);
/* "main" when defined, else the first function. */
CMINOR_API cminor_status cminor_program_entry(const cminor_program* p,
                                              char** out);

CMINOR_API cminor_status cminor_run(const cminor_program* p, const char* entry,
                                    const cminor_value* args, size_t nargs,
                                    uint64_t fuel,
                                    const cminor_run_options* options,
                                    cminor_outcome** out);
CMINOR_API void cminor_outcome_free(cminor_outcome* o);
CMINOR_API cminor_outcome_kind cminor_outcome_kind_of(const cminor_outcome* o);
CMINOR_API uint64_t cminor_outcome_steps(const cminor_outcome* o);
CMINOR_API size_t cminor_outcome_result_count(const cminor_outcome* o);
CMINOR_API cminor_status cminor_outcome_result(const cminor_outcome* o,
                                               size_t i, cminor_value* out);
/* "Finished [42]", "Stuck after 3 steps: ...", "OutOfFuel after N steps". */
CMINOR_API const char* cminor_outcome_describe(const cminor_outcome* o);
/* Trace lines joined by '\n', empty unless tracing was requested. */
CMINOR_API const char* cminor_outcome_trace(const cminor_outcome* o);

CMINOR_API cminor_status cminor_check(const cminor_program* p,
                                      const char* entry,
                                      const cminor_value* args, size_t nargs,
                                      uint64_t fuel, int strict,
                                      cminor_report** out);
CMINOR_API void cminor_report_free(cminor_report* r);
CMINOR_API int cminor_report_passed(const cminor_report* r);
CMINOR_API const char* cminor_report_text(const cminor_report* r);
CMINOR_API const char* cminor_report_json(const cminor_report* r);
/* Step index of the first failing check, or -1. */
CMINOR_API int64_t cminor_report_first_failure_step(const cminor_report* r);

/* mode is "bigstep" or "erasure"; mutation may be NULL. *passed is set to
 * 1 when no divergence was found. */
CMINOR_API cminor_status cminor_difftest(const char* mode, uint64_t seed,
                                         size_t count, uint64_t fuel,
                                         const char* mutation, int* passed,
                                         char** report);

/* Absorption of the index-th top-level statement of `function`, started
 * in the function's entry state with the given arguments. */
CMINOR_API cminor_status cminor_max_absorb(const cminor_program* p,
                                           const char* function,
                                           size_t index,
                                           const cminor_value* args,
                                           size_t nargs, size_t bound,
                                           size_t* steps, int* at_least_bound);

#ifdef __cplusplus
}
#endif

#endif /* CMINOR_CMINOR_H_ */
