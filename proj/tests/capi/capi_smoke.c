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

// Plain C consumer of the shared library.

#include <stdio.h>
#include <string.h>

#include "cubecert/cubecert.h"

#define EXPECT(cond)                                    \
  do {                                                  \
    if (!(cond)) {                                      \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                         \
    }                                                   \
  } while (0)

int main(void) {
  double m = 0.0;
  cubecert_config* cfg = NULL;
  cubecert_report* rep = NULL;
  char* text = NULL;
  const double values[2] = {-1.0, 1.0};

  EXPECT(strlen(cubecert_version()) > 0);
  EXPECT(cubecert_eval_m(4.0, 0.0, &m) == CUBECERT_OK);
  EXPECT(m > 7.999999 && m < 8.000001);
  EXPECT(cubecert_eval_m(1.0, -1.0, &m) == CUBECERT_ERR_DOMAIN);
  EXPECT(strlen(cubecert_last_error()) > 0);
  EXPECT(cubecert_theorem_margin(1, values, 2, &m) == CUBECERT_OK);
  EXPECT(m > 0.45508 && m < 0.45510);

  EXPECT(cubecert_config_create(&cfg) == CUBECERT_OK);
  EXPECT(cubecert_config_select(cfg, "t3") == CUBECERT_OK);
  EXPECT(cubecert_config_select(cfg, "t9") == CUBECERT_ERR_CONFIG);
  EXPECT(cubecert_run(cfg, &rep) == CUBECERT_OK);
  EXPECT(cubecert_report_pass(rep) == 1);
  EXPECT(cubecert_report_check_count(rep) == 1);
  EXPECT(strcmp(cubecert_report_check_status(rep, 0), "pass") == 0);
  EXPECT(cubecert_report_summary(rep, &text) == CUBECERT_OK);
  EXPECT(strstr(text, "PASS") != NULL);
  cubecert_string_free(text);
  cubecert_report_destroy(rep);
  cubecert_config_destroy(cfg);
  printf("capi smoke ok\n");
  return 0;
}
