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

// Textual interfaces: the group spec grammar ("3^2 x 2 x 2"), JSON schemas
// for rows / forms / verdicts, CSV export, and the verdict table.

#ifndef BUTSON_IO_HPP
#define BUTSON_IO_HPP

#include <cstdint>
#include <string>

#include "construct.hpp"
#include "oracle.hpp"
#include "search.hpp"
#include "verify.hpp"

namespace butson {

// Factors separated by "x", each "p^a" or "p"; whitespace-insensitive.
GroupSpec parse_group_string(const std::string& text);
std::string group_to_string(const GroupSpec& spec);

// { "group": [[p,a],...], "l_rank": n, "h": h, "row": [...] }; a "cyclic"
// flag marks rows indexed by Z_v instead of the canonical order.
std::string row_to_json(const BHRow& row);
BHRow row_from_json(const std::string& text);

// CSV of the materialized exponent matrix, one row per line.
std::string row_to_csv(const BHRow& row, std::uint64_t bound = 256);

// { "e": int, "gram": [[int]] }
BilinearForm form_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& verdict, bool include_witness);
std::string verification_to_json(const BHRow& row, const Verification& v);
std::string search_result_to_json(const SearchResult& r);

// One verdict line per (K, h): groups ordered by order then lexicographic
// factor list, h ascending. Byte-identical across runs.
std::string table_csv(std::uint64_t order_max, std::uint64_t h_max);

} // namespace butson

#endif
