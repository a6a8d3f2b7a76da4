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

/* Compiles the public header as C and exercises a few calls. */

#include <stdio.h>
#include <string.h>

#include "polydrive/polydrive.h"

int main(void) {
  pd_ratio_class cls;
  char name[64];
  pd_scenario* s = NULL;
  pd_result* r = NULL;
  pd_integrator_config cfg;

  if (pd_classify(1, 3, &cls) != PD_OK || cls.kind != PD_CONCLUSION_II) return 1;
  if (pd_ratio_class_string(&cls, name, sizeof name) != PD_OK) return 1;
  if (strcmp(name, "ConclusionII(j=0,k=1)") != 0) return 1;

  pd_integrator_config_default(&cfg);
  cfg.rel_tol = 1e-8;
  if (pd_scenario_from_json("{\"N\": 2, \"t_stop\": 3, \"samples\": 31}", &s) != PD_OK) return 1;
  if (pd_run(s, &cfg, &r) != PD_OK) {
    fprintf(stderr, "%s\n", pd_last_error());
    return 1;
  }
  if (pd_result_samples(r) != 31 || pd_result_column_count(r) != 2) return 1;
  pd_result_free(r);
  pd_scenario_free(s);
  printf("c api ok (%s)\n", pd_version());
  return 0;
}
