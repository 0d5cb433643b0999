/*
 * Copyright 2026 The pnpc Authors
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
 * C interface to the pnpc toolchain.
 *
 * Conventions:
 *  - Objects are opaque handles created by pnpc_*_parse / *_new functions
 *    and released with the matching *_free function. Freeing NULL is a no-op.
 *  - Functions return a pnpc_status. PNPC_DIAGNOSTICS means the input was
 *    rejected; the reasons are appended to the `diags` argument, which may
 *    be NULL when the caller does not want them. Warnings are appended
 *    too but do not change the status.
 *  - Output handles are set only on PNPC_OK (and, for pnpc_simulate, also
 *    on PNPC_DIAGNOSTICS so the partial trace can be inspected).
 *  - Strings returned through `char**` are NUL-terminated, owned by the
 *    caller and released with pnpc_string_free.
 *  - Handles are immutable after creation and may be shared across
 *    threads; a pnpc_diagnostics list must not be appended to concurrently.
 */

#ifndef PNPC_H
#define PNPC_H

#include <stddef.h>

#if defined(_WIN32)
#define PNPC_API __declspec(dllexport)
#else
#define PNPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pnpc_status {
  PNPC_OK = 0,
  PNPC_DIAGNOSTICS = 1,      /* input rejected, see diagnostics */
  PNPC_INVALID_ARGUMENT = 2, /* NULL handle or out-of-range index */
  PNPC_INTERNAL = 3          /* unexpected failure inside the library */
} pnpc_status;

typedef enum pnpc_severity { PNPC_SEVERITY_ERROR = 0, PNPC_SEVERITY_WARNING = 1 } pnpc_severity;

typedef struct pnpc_diagnostics pnpc_diagnostics;
typedef struct pnpc_program pnpc_program;
typedef struct pnpc_feature_model pnpc_feature_model;
typedef struct pnpc_configuration pnpc_configuration;
typedef struct pnpc_mapping pnpc_mapping;
typedef struct pnpc_templates pnpc_templates;
typedef struct pnpc_units pnpc_units;
typedef struct pnpc_sim_result pnpc_sim_result;

/* A view of one diagnostic. Pointers stay valid until the list is freed
 * or cleared. */
typedef struct pnpc_diagnostic {
  pnpc_severity severity;
  const char* code;
  const char* message;
  const char* file; /* "" when unknown */
  int line;
  int column;
} pnpc_diagnostic;

PNPC_API const char* pnpc_version(void);
PNPC_API const char* pnpc_status_string(pnpc_status status);
PNPC_API void pnpc_string_free(char* s);

/* --- diagnostics -------------------------------------------------------- */

PNPC_API pnpc_diagnostics* pnpc_diagnostics_new(void);
PNPC_API void pnpc_diagnostics_free(pnpc_diagnostics* diags);
PNPC_API void pnpc_diagnostics_clear(pnpc_diagnostics* diags);
PNPC_API size_t pnpc_diagnostics_count(const pnpc_diagnostics* diags);
PNPC_API size_t pnpc_diagnostics_error_count(const pnpc_diagnostics* diags);
PNPC_API pnpc_status pnpc_diagnostics_get(const pnpc_diagnostics* diags, size_t index, pnpc_diagnostic* out);
/* Sorts by file, line and column, keeping the order of equal positions. */
PNPC_API void pnpc_diagnostics_sort(pnpc_diagnostics* diags);
/* One `file:line:col: severity[code]: message` line per diagnostic. */
PNPC_API pnpc_status pnpc_diagnostics_format(const pnpc_diagnostics* diags, char** out);

/* --- programs ----------------------------------------------------------- */

/* Parses and analyzes a program. `file` names the source in diagnostics
 * and may be NULL. */
PNPC_API pnpc_status pnpc_program_parse(const char* source, size_t length, const char* file,
                                        pnpc_diagnostics* diags, pnpc_program** out);
PNPC_API void pnpc_program_free(pnpc_program* program);
PNPC_API pnpc_status pnpc_program_ast_json(const pnpc_program* program, char** out);
PNPC_API pnpc_status pnpc_program_pretty(const pnpc_program* program, char** out);
/* Structural equality, ignoring source positions. */
PNPC_API pnpc_status pnpc_program_equal(const pnpc_program* a, const pnpc_program* b, int* out);

/* --- feature models and configurations ---------------------------------- */

/* Parses and validates a feature model. */
PNPC_API pnpc_status pnpc_model_parse(const char* source, size_t length, const char* file,
                                      pnpc_diagnostics* diags, pnpc_feature_model** out);
PNPC_API void pnpc_model_free(pnpc_feature_model* model);
PNPC_API size_t pnpc_model_feature_count(const pnpc_feature_model* model);
/* Valid configurations, one single-line `.cfg` text per line, at most
 * `limit` of them. */
PNPC_API pnpc_status pnpc_model_enumerate(const pnpc_feature_model* model, size_t limit,
                                          pnpc_diagnostics* diags, char** out);

/* Parses a configuration against `model`. Does not check the model rules;
 * use pnpc_configuration_validate for that. */
PNPC_API pnpc_status pnpc_configuration_parse(const pnpc_feature_model* model, const char* source,
                                              size_t length, const char* file, pnpc_diagnostics* diags,
                                              pnpc_configuration** out);
PNPC_API void pnpc_configuration_free(pnpc_configuration* config);
PNPC_API pnpc_status pnpc_configuration_validate(const pnpc_configuration* config,
                                                 const pnpc_feature_model* model, pnpc_diagnostics* diags);
/* Sets *out to 1 when `feature` is selected. */
PNPC_API pnpc_status pnpc_configuration_includes(const pnpc_configuration* config, const char* feature,
                                                 int* out);

/* --- grammar variability ------------------------------------------------ */

PNPC_API pnpc_status pnpc_mapping_parse(const pnpc_feature_model* model, const char* source, size_t length,
                                        const char* file, pnpc_diagnostics* diags, pnpc_mapping** out);
PNPC_API void pnpc_mapping_free(pnpc_mapping* mapping);
/* E-VARIANT for every construct the configuration disables. */
PNPC_API pnpc_status pnpc_check(const pnpc_program* program, const pnpc_configuration* config,
                                const pnpc_mapping* mapping, pnpc_diagnostics* diags);

/* --- code generation ---------------------------------------------------- */

/* The template set compiled into the library. */
PNPC_API pnpc_status pnpc_templates_builtin(pnpc_diagnostics* diags, pnpc_templates** out);
/* Parses and links `count` template files given by name and content. */
PNPC_API pnpc_status pnpc_templates_load(const char* const* names, const char* const* sources, size_t count,
                                         pnpc_diagnostics* diags, pnpc_templates** out);
PNPC_API void pnpc_templates_free(pnpc_templates* templates);

/* A file recorded by content hash in the generation manifest. */
typedef struct pnpc_input {
  const char* path;
  const char* content;
  size_t length;
} pnpc_input;

PNPC_API pnpc_status pnpc_generate(const pnpc_program* program, const pnpc_configuration* config,
                                   const pnpc_mapping* mapping, const pnpc_templates* templates,
                                   const pnpc_input* inputs, size_t input_count, pnpc_diagnostics* diags,
                                   pnpc_units** out);
PNPC_API void pnpc_units_free(pnpc_units* units);
PNPC_API size_t pnpc_units_count(const pnpc_units* units);
/* Borrowed pointers valid until the units are freed. */
PNPC_API const char* pnpc_unit_path(const pnpc_units* units, size_t index);
PNPC_API const char* pnpc_unit_content(const pnpc_units* units, size_t index, size_t* length);

/* --- simulation --------------------------------------------------------- */

typedef struct pnpc_sim_options {
  int allow_unperceived; /* nonzero: pick may skip the perception check */
  long long max_steps;   /* 0 selects the default bound */
} pnpc_sim_options;

/* Runs the program in the world simulator. A runtime error is reported as
 * an error diagnostic (R-* code) with status PNPC_DIAGNOSTICS; *out then
 * holds the state and trace up to the failing statement. `options` may be
 * NULL. */
PNPC_API pnpc_status pnpc_simulate(const pnpc_program* program, const pnpc_sim_options* options,
                                   pnpc_diagnostics* diags, pnpc_sim_result** out);
PNPC_API void pnpc_sim_result_free(pnpc_sim_result* result);
PNPC_API int pnpc_sim_failed(const pnpc_sim_result* result);
PNPC_API pnpc_status pnpc_sim_final_state_json(const pnpc_sim_result* result, char** out);
PNPC_API pnpc_status pnpc_sim_trace_json(const pnpc_sim_result* result, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PNPC_H */
