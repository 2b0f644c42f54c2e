/*
  Copyright 2026 The Butson Library Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

/*
  C interface to the Butson matrix library.

  Conventions: every function returns a bh_status; outputs are written
  through pointer arguments. Handles are opaque and freed with the matching
  *_free function. Strings returned through char** are heap-allocated and
  freed with bh_string_free. On failure, bh_last_error() returns a
  thread-local description of the most recent error.
*/

#ifndef BUTSON_H
#define BUTSON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bh_status {
  BH_OK = 0,
  BH_ERR_PARSE = 1,      /* malformed group string, JSON, or number */
  BH_ERR_CONDITIONS = 2, /* the sufficiency conditions reject (group, h) */
  BH_ERR_INGREDIENT = 3, /* an ingredient validation failed */
  BH_ERR_BOUND = 4,      /* work or size bound exceeded */
  BH_ERR_INTERNAL = 5    /* internal invariant violated */
} bh_status;

typedef struct bh_group bh_group;
typedef struct bh_row bh_row;

const char* bh_last_error(void);
void bh_string_free(char* s);

/* Group spec grammar: factors separated by "x", each "p^a" or "p". */
bh_status bh_group_parse(const char* text, bh_group** out);
void bh_group_free(bh_group* g);
uint64_t bh_group_order(const bh_group* g);
uint64_t bh_group_exponent(const bh_group* g);

/* Entry order of the default construction for this group. */
bh_status bh_group_default_h(const bh_group* g, uint64_t* e1);

/* Construct a matrix row. h = 0 means the default entry order. beta must be
   coprime to |G|. form_json may be NULL or a {"e":..,"gram":[[..]]} object. */
bh_status bh_construct(const bh_group* g, uint64_t h, int64_t beta,
                       const char* form_json, bh_row** out);

/* Circulant matrix over Z_v. */
bh_status bh_circulant(uint64_t v, uint64_t h, bh_row** out);

void bh_row_free(bh_row* r);
uint64_t bh_row_h(const bh_row* r);
uint64_t bh_row_length(const bh_row* r);

bh_status bh_row_to_json(const bh_row* r, char** out);
bh_status bh_row_from_json(const char* text, bh_row** out);
/* CSV of the materialized |K| x |K| exponent matrix. */
bh_status bh_row_to_csv(const bh_row* r, char** out);

/* Exact verification. *verified is 1 or 0; report_json (optional) receives
   a JSON report with the first failing shift / character. */
bh_status bh_verify(const bh_row* r, int* verified, char** report_json);

/* Existence verdict for (group, h) as JSON:
   {"status": "...", "provenance": "...", "witness": {...}?, "note": "..."?} */
bh_status bh_exists(const bh_group* g, uint64_t h, int include_witness,
                    char** verdict_json);

/* Exhaustive circulant search; limit = 0 uses the default work bound. */
bh_status bh_search(uint64_t v, uint64_t h, uint64_t limit,
                    char** result_json);

/* CSV of existence verdicts for all abelian groups of order <= order_max
   and all h <= h_max. */
bh_status bh_table(uint64_t order_max, uint64_t h_max, char** csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BUTSON_H */
