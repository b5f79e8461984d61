// Copyright 2026 The cubecert Authors
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

#ifndef CUBECERT_CUBECERT_H_
#define CUBECERT_CUBECERT_H_

#include <stddef.h>

#if defined(CUBECERT_BUILDING_LIBRARY)
#define CUBECERT_API __attribute__((visibility("default")))
#else
#define CUBECERT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cubecert_status {
  CUBECERT_OK = 0,
  CUBECERT_ERR_INVALID_ARGUMENT = 1,
  CUBECERT_ERR_DOMAIN = 2,
  CUBECERT_ERR_PARSE = 3,
  CUBECERT_ERR_CONFIG = 4,
  CUBECERT_ERR_IO = 5,
  CUBECERT_ERR_DIVISION_BY_ZERO = 6,
  CUBECERT_ERR_ROOT_COUNT = 7,
  CUBECERT_ERR_INTERNAL = 8
} cubecert_status;

typedef struct cubecert_config cubecert_config;
typedef struct cubecert_report cubecert_report;

// Library version, static storage.
CUBECERT_API const char* cubecert_version(void);
// Message of the last failed call on this thread; "" if none.
CUBECERT_API const char* cubecert_last_error(void);
// Name of check i in canonical order, NULL past the end.
CUBECERT_API const char* cubecert_check_name(size_t i);

// Strings returned through char** are owned by the caller.
CUBECERT_API void cubecert_string_free(char* s);

CUBECERT_API cubecert_status cubecert_config_create(cubecert_config** out);
CUBECERT_API void cubecert_config_destroy(cubecert_config* config);
// "all" selects every check.
CUBECERT_API cubecert_status cubecert_config_select(cubecert_config* config, const char* check);
// Same keys as the config file.
CUBECERT_API cubecert_status cubecert_config_set(cubecert_config* config, const char* key, const char* value);
CUBECERT_API cubecert_status cubecert_config_load_file(cubecert_config* config, const char* path);
// Report path from the out key, "" if unset. Valid until the next change.
CUBECERT_API const char* cubecert_config_out(const cubecert_config* config);

// Runs the selected checks (all of them if none is selected).
CUBECERT_API cubecert_status cubecert_run(const cubecert_config* config, cubecert_report** out);
CUBECERT_API void cubecert_report_destroy(cubecert_report* report);
// 1 if every check passed.
CUBECERT_API int cubecert_report_pass(const cubecert_report* report);
// 0 pass, 1 refuted, 2 undecided.
CUBECERT_API int cubecert_report_exit_code(const cubecert_report* report);
CUBECERT_API size_t cubecert_report_check_count(const cubecert_report* report);
// Status of check i: "pass", "refuted", "undecided" or "error"; NULL past the end.
CUBECERT_API const char* cubecert_report_check_status(const cubecert_report* report, size_t i);
CUBECERT_API cubecert_status cubecert_report_json(const cubecert_report* report, char** out);
CUBECERT_API cubecert_status cubecert_report_summary(const cubecert_report* report, char** out);
CUBECERT_API cubecert_status cubecert_report_write(const cubecert_report* report, const char* path);

// Replays a witness file (single witness, array or full report). text gets the
// printout, json (optional, may be NULL) the values as a JSON array.
CUBECERT_API cubecert_status cubecert_replay_file(const char* path, char** text, char** json);
CUBECERT_API cubecert_status cubecert_replay_json(const char* document, char** text, char** json);

// M(x, y) = Re (x + iy)^{3/2}, y >= 0.
CUBECERT_API cubecert_status cubecert_eval_m(double x, double y, double* out);
// M(E f, 0) - E M(f, |grad f|) for f given by count = 2^n vertex values.
CUBECERT_API cubecert_status cubecert_theorem_margin(unsigned n, const double* values, size_t count, double* out);

#ifdef __cplusplus
}
#endif

#endif  // CUBECERT_CUBECERT_H_
