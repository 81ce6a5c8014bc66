/*
 * Copyright 2026 The varord authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * varord -- variable-ordering heuristics for cylindrical algebraic
 * decomposition. C interface of the shared library.
 *
 * Conventions:
 *   - every fallible function returns a vo_status; VO_OK is 0;
 *   - on failure, vo_last_error() returns a thread-local message;
 *   - objects are opaque handles created/destroyed by matching calls;
 *   - returned strings and string arrays are heap-allocated and must be
 *     released with vo_string_destroy / vo_strings_destroy;
 *   - all numeric results are exact: rationals are rendered as "n" or
 *     "n/d", reports use fixed-point decimals. Output is byte-stable for
 *     fixed inputs and seed.
 */

#ifndef VARORD_H
#define VARORD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vo_status {
  VO_OK = 0,
  VO_EINVAL = 1,    /* invalid argument or domain violation */
  VO_EPARSE = 2,    /* malformed polynomial / feature / heuristic text */
  VO_EIO = 3,       /* file not readable or malformed input data */
  VO_EINTERNAL = 4  /* internal invariant violation */
} vo_status;

const char* vo_last_error(void);
const char* vo_version(void);

void vo_string_destroy(char* s);
void vo_strings_destroy(char** strings, size_t count);

/* ------------------------------------------------------------------ */
/* Polynomial systems                                                  */

typedef struct vo_system vo_system;

/* Parses `npolys` polynomial strings over the named variables. Grammar:
 * integer literals, identifiers, binary + - *, unary -, ^ with nonnegative
 * integer exponents, parentheses, explicit '*'. */
vo_status vo_system_create(const char* const* var_names, size_t nvars,
                           const char* const* polys, size_t npolys,
                           vo_system** out);
void vo_system_destroy(vo_system* s);

size_t vo_system_nvars(const vo_system* s);
size_t vo_system_size(const vo_system* s);
/* Canonical text of one member ("x1^2 - 2*x1*x2^2 + x2^2 - 3"). */
vo_status vo_system_poly(const vo_system* s, size_t index, char** out);
/* Name of one variable (0-based index). */
vo_status vo_system_var_name(const vo_system* s, size_t index, char** out);

/* Normalization: members canonicalized, constants and duplicates dropped. */
vo_status vo_system_normalize(const vo_system* s, vo_system** out);
/* Lazard projection basis with respect to variable `var` (0-based). */
vo_status vo_system_project(const vo_system* s, size_t var, vo_system** out);
/* Raw projection factors before basis reduction. */
vo_status vo_system_project_raw(const vo_system* s, size_t var,
                                vo_system** out);
/* Squarefree GCD-free basis of the system itself. */
vo_status vo_system_basis(const vo_system* s, vo_system** out);

/* ------------------------------------------------------------------ */
/* Features                                                            */

/* All distinct features for systems of `nvars` variables, as functional
 * names ("sum(max(v_1(S)))"), in canonical order. */
vo_status vo_feature_list(size_t nvars, char*** names_out, size_t* count_out);
/* Evaluates a feature (functional name or CamelCase alias; aliases are
 * evaluated per variable and must carry a concrete index when functional).
 * The exact rational value is rendered into *value_out. */
vo_status vo_feature_eval(const vo_system* s, const char* feature,
                          char** value_out);
/* Nested degree list, e.g. "[[0],[0,2,2,0]]"; kind is "v" or "sv". */
vo_status vo_degree_list(const vo_system* s, size_t var, const char* kind,
                         char** out);

/* ------------------------------------------------------------------ */
/* Heuristics                                                          */

typedef struct vo_chain vo_chain;

/* "A>B>C" chains of CamelCase merged features, or a registered alias:
 * Brown, gmods, T1, T2, random. */
vo_status vo_chain_parse(const char* name, vo_chain** out);
void vo_chain_destroy(vo_chain* c);
vo_status vo_chain_name(const vo_chain* c, char** out);

/* Greedy ordering for the system. order_out must hold nvars entries; the
 * first entry is projected first. tiestats_out (optional) receives a
 * human-readable tie summary. */
vo_status vo_choose(const vo_system* s, const vo_chain* c, uint64_t seed,
                    size_t* order_out, int* class_label_out,
                    char** tiestats_out);

/* Exhaustive minimization of the projection-size product over all
 * orderings (guarded to nvars <= 8). product_out receives the integer
 * product value. */
vo_status vo_mods(const vo_system* s, size_t* order_out, int* class_label_out,
                  char** product_out);

/* All ordered triples of the given distinct CamelCase features, as chain
 * names ("A>B>C"). 6 inputs yield 120 chains. */
vo_status vo_triples(const char* const* top_names, size_t ntop,
                     char*** chains_out, size_t* count_out);

/* ------------------------------------------------------------------ */
/* Attribution ranking pipeline                                        */

typedef struct vo_shap vo_shap;

/* CSV with header model,class,instance,feature,shap_value. */
vo_status vo_shap_load(const char* path, vo_shap** out);
void vo_shap_destroy(vo_shap* s);
vo_status vo_shap_models(const vo_shap* s, char*** models_out,
                         size_t* count_out);

/* Stage tables as "feature,score" CSV (exact rational scores).
 * stage: 0 = raw per-feature totals, 1 = variable-merged,
 * 2 = proportional-merged. */
vo_status vo_shap_ranking_csv(const vo_shap* s, const char* model, int stage,
                              char** csv_out);
/* Cross-model vote over the per-model rankings. method: "dowdall" or
 * "borda". merge_proportional selects the 18-feature universe. */
vo_status vo_shap_vote_csv(const vo_shap* s, const char* method,
                           int merge_proportional, char** csv_out);
vo_status vo_shap_top(const vo_shap* s, const char* method,
                      int merge_proportional, size_t k, char*** names_out,
                      size_t* count_out);

/* ------------------------------------------------------------------ */
/* Evaluation harness                                                  */

typedef struct vo_timings vo_timings;
typedef struct vo_problems vo_problems;

/* CSV with header problem,ord1,...,ord6; cells are decimal seconds or the
 * literal `timeout`. Problems with no finished ordering are dropped.
 * time_limit is a decimal string (e.g. "60"). */
vo_status vo_timings_load(const char* path, const char* time_limit,
                          vo_timings** out);
void vo_timings_destroy(vo_timings* t);
size_t vo_timings_count(const vo_timings* t);
size_t vo_timings_dropped(const vo_timings* t);

/* One JSON record per line: {"id": ..., "vars": [...], "polys": [...]}. */
vo_status vo_problems_load(const char* path, vo_problems** out);
void vo_problems_destroy(vo_problems* p);
size_t vo_problems_count(const vo_problems* p);
/* Copy of one problem's system, by id. */
vo_status vo_problems_get(const vo_problems* p, const char* id,
                          vo_system** out);

typedef struct vo_eval_options {
  uint64_t master_seed;
  unsigned repetitions;          /* >= 1 */
  int charge_heuristic_time;     /* adds wall-clock chain cost to total time */
  const char* penalty_factor;    /* decimal; NULL means "2" */
} vo_eval_options;

/* Evaluates the named heuristics ("virtual-best" is recognized alongside
 * chain names) and renders a report; format 0 = CSV, 1 = aligned table.
 * choices_csv_out (optional) receives the per-problem choice log of the
 * last heuristic. */
vo_status vo_evaluate(const vo_problems* p, const vo_timings* t,
                      const char* const* heuristics, size_t nheuristics,
                      const vo_eval_options* opts, int format,
                      char** report_out, char** choices_csv_out);

/* Survival curve of one heuristic as "time,completed" CSV. */
vo_status vo_survival(const vo_problems* p, const vo_timings* t,
                      const char* heuristic, const vo_eval_options* opts,
                      char** csv_out);

/* Evaluates all ordered triples of the given features and renders a
 * leaderboard sorted by markup (ascending); format as in vo_evaluate. */
vo_status vo_triples_leaderboard(const vo_problems* p, const vo_timings* t,
                                 const char* const* top_names, size_t ntop,
                                 const vo_eval_options* opts, int format,
                                 char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* VARORD_H */
