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

#include "butson.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "construct.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "search.hpp"
#include "verify.hpp"

using namespace butson;

struct bh_group {
  GroupSpec spec;
};

struct bh_row {
  BHRow row;
};

namespace {

thread_local std::string g_last_error;

bh_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse:
    case ErrorCode::Shape: return BH_ERR_PARSE;
    case ErrorCode::ConditionsNotMet: return BH_ERR_CONDITIONS;
    case ErrorCode::Ingredient:
    case ErrorCode::NoSquareRoot: return BH_ERR_INGREDIENT;
    case ErrorCode::Bound: return BH_ERR_BOUND;
    case ErrorCode::Internal: return BH_ERR_INTERNAL;
  }
  return BH_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
bh_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BH_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BH_ERR_INTERNAL;
  }
}

} // namespace

extern "C" {

const char* bh_last_error(void) { return g_last_error.c_str(); }

void bh_string_free(char* s) { std::free(s); }

bh_status bh_group_parse(const char* text, bh_group** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] { *out = new bh_group{parse_group_string(text)}; });
}

void bh_group_free(bh_group* g) { delete g; }

uint64_t bh_group_order(const bh_group* g) { return g ? g->spec.order() : 0; }

uint64_t bh_group_exponent(const bh_group* g) {
  return g ? g->spec.exponent() : 0;
}

bh_status bh_group_default_h(const bh_group* g, uint64_t* e1) {
  if (!g || !e1) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] { *e1 = compute_e1(default_ingredients(g->spec)); });
}

bh_status bh_construct(const bh_group* g, uint64_t h, int64_t beta,
                       const char* form_json, bh_row** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] {
    std::optional<BilinearForm> form;
    if (form_json) form = form_from_json(form_json);
    // with the default form the sufficiency gate produces the error message
    // naming the failed condition
    if (!form && h != 0) {
      auto report = sufficient_general(g->spec, h);
      if (!report.ok) throw Error(ErrorCode::ConditionsNotMet, report.failed);
    }
    BHRow row = build_with(g->spec, h, beta, form);
    *out = new bh_row{std::move(row)};
  });
}

bh_status bh_circulant(uint64_t v, uint64_t h, bh_row** out) {
  if (!out) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] { *out = new bh_row{circulant(v, h)}; });
}

void bh_row_free(bh_row* r) { delete r; }

uint64_t bh_row_h(const bh_row* r) { return r ? r->row.h : 0; }

uint64_t bh_row_length(const bh_row* r) {
  return r ? r->row.row.size() : 0;
}

bh_status bh_row_to_json(const bh_row* r, char** out) {
  if (!r || !out) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] { *out = dup_string(row_to_json(r->row)); });
}

bh_status bh_row_from_json(const char* text, bh_row** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] { *out = new bh_row{row_from_json(text)}; });
}

bh_status bh_row_to_csv(const bh_row* r, char** out) {
  if (!r || !out) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] { *out = dup_string(row_to_csv(r->row)); });
}

bh_status bh_verify(const bh_row* r, int* verified, char** report_json) {
  if (!r || !verified) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] {
    Verification v = verify(r->row);
    *verified = v.pass() ? 1 : 0;
    if (report_json) *report_json = dup_string(verification_to_json(r->row, v));
  });
}

bh_status bh_exists(const bh_group* g, uint64_t h, int include_witness,
                    char** verdict_json) {
  if (!g || !verdict_json) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] {
    Verdict verdict = decide(g->spec, h);
    *verdict_json = dup_string(verdict_to_json(verdict, include_witness != 0));
  });
}

bh_status bh_search(uint64_t v, uint64_t h, uint64_t limit,
                    char** result_json) {
  if (!result_json) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] {
    SearchResult r =
        exhaustive_cyclic(v, h, limit == 0 ? kDefaultSearchLimit : limit);
    *result_json = dup_string(search_result_to_json(r));
  });
}

bh_status bh_table(uint64_t order_max, uint64_t h_max, char** csv) {
  if (!csv) {
    g_last_error = "null argument";
    return BH_ERR_PARSE;
  }
  return guarded([&] { *csv = dup_string(table_csv(order_max, h_max)); });
}

} // extern "C"
