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

#include "io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace butson {

using nlohmann::json;

GroupSpec parse_group_string(const std::string& text) {
  std::string stripped;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  if (stripped == "1") return GroupSpec{};
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
  std::string token;
  auto flush = [&] {
    std::string t;
    for (char c : token)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    token.clear();
    if (t.empty()) throw Error(ErrorCode::Parse, "empty factor in group spec");
    std::uint64_t p = 0;
    std::uint32_t a = 1;
    std::size_t caret = t.find('^');
    try {
      if (caret == std::string::npos) {
        p = std::stoull(t);
      } else {
        p = std::stoull(t.substr(0, caret));
        a = static_cast<std::uint32_t>(std::stoul(t.substr(caret + 1)));
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "malformed factor '" + t + "'");
    }
    factors.emplace_back(p, a);
  };
  for (char c : text) {
    if (c == 'x' || c == 'X' || c == '*')
      flush();
    else
      token += c;
  }
  flush();
  return GroupSpec::from_factors(factors);
}

std::string group_to_string(const GroupSpec& spec) {
  if (spec.trivial()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, a] : spec.factor_list()) {
    if (!first) out << " x ";
    first = false;
    out << p;
    if (a > 1) out << "^" << a;
  }
  return out.str();
}

static json group_json(const GroupSpec& spec) {
  json g = json::array();
  for (const auto& f : spec.g_factors()) g.push_back({f.p, f.a});
  return g;
}

std::string row_to_json(const BHRow& row) {
  json j;
  j["group"] = group_json(row.spec);
  j["l_rank"] = row.spec.l_rank();
  j["h"] = row.h;
  j["row"] = row.row;
  if (row.cyclic) j["cyclic"] = true;
  return j.dump();
}

BHRow row_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad JSON: ") + e.what());
  }
  try {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
    for (const auto& f : j.at("group"))
      factors.emplace_back(f.at(0).get<std::uint64_t>(),
                           f.at(1).get<std::uint32_t>());
    std::uint32_t l_rank = j.value("l_rank", 0u);
    for (std::uint32_t i = 0; i < l_rank; ++i) factors.emplace_back(2, 1);
    BHRow row;
    row.spec = GroupSpec::from_factors(factors);
    if (row.spec.l_rank() != l_rank)
      throw Error(ErrorCode::Parse,
                  "group factors contain Z_2 entries; use l_rank instead");
    row.h = j.at("h").get<std::uint64_t>();
    if (row.h == 0) throw Error(ErrorCode::Parse, "h must be positive");
    row.row = j.at("row").get<std::vector<std::uint64_t>>();
    row.cyclic = j.value("cyclic", false);
    if (row.row.size() != row.spec.order())
      throw Error(ErrorCode::Parse, "row length does not match |K|");
    for (auto a : row.row)
      if (a >= row.h)
        throw Error(ErrorCode::Parse, "row exponent out of range [0, h)");
    return row;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad row JSON: ") + e.what());
  }
}

std::string row_to_csv(const BHRow& row, std::uint64_t bound) {
  auto h = materialize(row, bound);
  std::ostringstream out;
  for (const auto& line : h) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << ",";
      out << line[i];
    }
    out << "\n";
  }
  return out.str();
}

BilinearForm form_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad JSON: ") + e.what());
  }
  try {
    BilinearForm f;
    f.e = j.at("e").get<std::uint64_t>();
    if (f.e == 0) throw Error(ErrorCode::Parse, "form modulus must be positive");
    for (const auto& row : j.at("gram")) {
      std::vector<std::uint64_t> r;
      for (const auto& v : row) {
        std::int64_t x = v.get<std::int64_t>();
        std::int64_t e = static_cast<std::int64_t>(f.e);
        r.push_back(static_cast<std::uint64_t>(((x % e) + e) % e));
      }
      f.gram.push_back(std::move(r));
    }
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad form JSON: ") + e.what());
  }
}

std::string verdict_to_json(const Verdict& verdict, bool include_witness) {
  json j;
  j["status"] = to_string(verdict.status);
  j["provenance"] = verdict.provenance;
  if (!verdict.note.empty()) j["note"] = verdict.note;
  if (verdict.witness && include_witness)
    j["witness"] = json::parse(row_to_json(*verdict.witness));
  return j.dump();
}

std::string verification_to_json(const BHRow& row, const Verification& v) {
  json j;
  j["verified"] = v.pass();
  j["h"] = row.h;
  j["order"] = row.row.size();
  j["entries_order"] = entries_order(row);
  json d;
  d["pass"] = v.direct.pass;
  if (v.direct.first_fail) d["first_failing_shift"] = *v.direct.first_fail;
  j["direct"] = d;
  json c;
  c["pass"] = v.characters.pass;
  if (v.characters.first_fail)
    c["first_failing_character"] = *v.characters.first_fail;
  j["characters"] = c;
  return j.dump();
}

std::string search_result_to_json(const SearchResult& r) {
  json j;
  j["outcome"] = to_string(r.outcome);
  j["nodes"] = r.nodes;
  if (r.outcome == SearchOutcome::Found) j["row"] = r.row;
  return j.dump();
}

std::string table_csv(std::uint64_t order_max, std::uint64_t h_max) {
  std::ostringstream out;
  out << "group,order,h,status,provenance\n";
  for (std::uint64_t n = 1; n <= order_max; ++n) {
    for (const auto& spec : abelian_groups_of_order(n)) {
      for (std::uint64_t h = 1; h <= h_max; ++h) {
        auto verdict = decide(spec, h);
        out << "\"" << group_to_string(spec) << "\"," << n << "," << h << ","
            << to_string(verdict.status) << "," << verdict.provenance << "\n";
      }
    }
  }
  return out.str();
}

} // namespace butson
