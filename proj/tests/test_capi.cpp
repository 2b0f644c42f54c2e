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

#include <doctest.h>

#include <string>

#include <butson.h>

namespace {

struct GroupHandle {
  bh_group* g = nullptr;
  ~GroupHandle() { bh_group_free(g); }
};

struct RowHandle {
  bh_row* r = nullptr;
  ~RowHandle() { bh_row_free(r); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  bh_string_free(s);
  return out;
}

} // namespace

TEST_CASE("group parse and queries") {
  GroupHandle g;
  REQUIRE(bh_group_parse("3^2", &g.g) == BH_OK);
  CHECK(bh_group_order(g.g) == 9);
  CHECK(bh_group_exponent(g.g) == 9);
  uint64_t e1 = 0;
  CHECK(bh_group_default_h(g.g, &e1) == BH_OK);
  CHECK(e1 == 3);

  bh_group* bad = nullptr;
  CHECK(bh_group_parse("4", &bad) == BH_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(bh_last_error()).size() > 0);
}

TEST_CASE("construct, verify, serialize") {
  GroupHandle g;
  REQUIRE(bh_group_parse("3^2", &g.g) == BH_OK);
  RowHandle r;
  REQUIRE(bh_construct(g.g, 3, 1, nullptr, &r.r) == BH_OK);
  CHECK(bh_row_h(r.r) == 3);
  CHECK(bh_row_length(r.r) == 9);

  int verified = 0;
  char* report = nullptr;
  REQUIRE(bh_verify(r.r, &verified, &report) == BH_OK);
  CHECK(verified == 1);
  auto rep = take(report);
  CHECK(rep.find("\"verified\":true") != std::string::npos);

  char* json = nullptr;
  REQUIRE(bh_row_to_json(r.r, &json) == BH_OK);
  auto text = take(json);
  RowHandle back;
  REQUIRE(bh_row_from_json(text.c_str(), &back.r) == BH_OK);
  CHECK(bh_row_h(back.r) == 3);

  char* csv = nullptr;
  REQUIRE(bh_row_to_csv(r.r, &csv) == BH_OK);
  CHECK(take(csv).find("0,0,0,0,1,2,0,2,1") != std::string::npos);
}

TEST_CASE("condition failures map to BH_ERR_CONDITIONS") {
  GroupHandle g;
  REQUIRE(bh_group_parse("2^3", &g.g) == BH_OK);
  bh_row* r = nullptr;
  CHECK(bh_construct(g.g, 2, 1, nullptr, &r) == BH_ERR_CONDITIONS);
  CHECK(r == nullptr);

  bh_row* c = nullptr;
  CHECK(bh_circulant(2, 2, &c) == BH_ERR_CONDITIONS);
}

TEST_CASE("custom form json") {
  GroupHandle g;
  REQUIRE(bh_group_parse("3^2", &g.g) == BH_OK);
  RowHandle r;
  REQUIRE(bh_construct(g.g, 0, 1, "{\"e\":9,\"gram\":[[2]]}", &r.r) == BH_OK);
  int verified = 0;
  REQUIRE(bh_verify(r.r, &verified, nullptr) == BH_OK);
  CHECK(verified == 1);

  bh_row* bad = nullptr;
  CHECK(bh_construct(g.g, 0, 1, "{\"e\":9,\"gram\":[[3]]}", &bad) ==
        BH_ERR_INGREDIENT);
}

TEST_CASE("exists, search, table") {
  GroupHandle g;
  REQUIRE(bh_group_parse("2^3", &g.g) == BH_OK);
  char* verdict = nullptr;
  REQUIRE(bh_exists(g.g, 2, 0, &verdict) == BH_OK);
  auto v = take(verdict);
  CHECK(v.find("NOT_EXISTS") != std::string::npos);
  CHECK(v.find("Theorem 3.6") != std::string::npos);

  char* search = nullptr;
  REQUIRE(bh_search(4, 2, 0, &search) == BH_OK);
  auto s = take(search);
  CHECK(s.find("\"outcome\":\"FOUND\"") != std::string::npos);

  char* table = nullptr;
  REQUIRE(bh_table(6, 3, &table) == BH_OK);
  CHECK(take(table).rfind("group,order,h,status,provenance", 0) == 0);
}

TEST_CASE("circulant round trip") {
  RowHandle r;
  REQUIRE(bh_circulant(9, 3, &r.r) == BH_OK);
  int verified = 0;
  REQUIRE(bh_verify(r.r, &verified, nullptr) == BH_OK);
  CHECK(verified == 1);

  char* json = nullptr;
  REQUIRE(bh_row_to_json(r.r, &json) == BH_OK);
  auto text = take(json);
  CHECK(text.find("\"cyclic\":true") != std::string::npos);
  RowHandle back;
  REQUIRE(bh_row_from_json(text.c_str(), &back.r) == BH_OK);
  int v2 = 0;
  REQUIRE(bh_verify(back.r, &v2, nullptr) == BH_OK);
  CHECK(v2 == 1);
}
