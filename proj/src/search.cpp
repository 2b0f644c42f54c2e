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

#include "search.hpp"

#include "cyclotomic.hpp"

namespace butson {

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "FOUND";
    case SearchOutcome::NotFound: return "NOT_FOUND";
    case SearchOutcome::BoundExceeded: return "BOUND_EXCEEDED";
  }
  return "NOT_FOUND";
}

namespace {

bool leaf_accept(const std::vector<std::uint64_t>& row, std::uint64_t v,
                 std::uint64_t h) {
  // trivial-character bound first; it rejects most candidates cheaply
  CycInt s(h);
  for (auto a : row) s.add_root(static_cast<std::int64_t>(a));
  if (!s.norm_sq().equals_integer(BigInt(static_cast<long long>(v))))
    return false;
  for (std::uint64_t g = 1; g < v; ++g) {
    CycInt sum(h);
    for (std::uint64_t l = 0; l < v; ++l)
      sum.add_root(static_cast<std::int64_t>(row[(l + g) % v]) -
                   static_cast<std::int64_t>(row[l]) +
                   static_cast<std::int64_t>(h));
    if (!sum.is_zero()) return false;
  }
  return true;
}

} // namespace

SearchResult exhaustive_cyclic(std::uint64_t v, std::uint64_t h,
                               std::uint64_t limit) {
  if (v < 1 || h < 1)
    throw Error(ErrorCode::Parse, "v and h must be positive");
  SearchResult res;
  std::vector<std::uint64_t> row(v, 0); // a_0 = 0 normalization
  std::uint64_t depth = 1;
  if (v == 1) {
    res.nodes = 1;
    res.outcome = SearchOutcome::Found;
    res.row = row;
    return res;
  }
  // iterative DFS in lexicographic order; row[depth] is the next free slot
  std::vector<std::uint64_t> choice(v, 0);
  for (;;) {
    if (depth == v) {
      if (leaf_accept(row, v, h)) {
        res.outcome = SearchOutcome::Found;
        res.row = row;
        return res;
      }
      // backtrack
      do {
        --depth;
        if (depth == 0) {
          res.outcome = SearchOutcome::NotFound;
          return res;
        }
        ++choice[depth];
      } while (choice[depth] >= h);
      row[depth] = choice[depth];
      ++res.nodes;
      ++depth;
      std::fill(choice.begin() + depth, choice.end(), 0);
      continue;
    }
    if (res.nodes >= limit) {
      res.outcome = SearchOutcome::BoundExceeded;
      return res;
    }
    row[depth] = choice[depth];
    ++res.nodes;
    ++depth;
  }
}

const SweepEntry* SweepReport::find(std::uint64_t v, std::uint64_t h) const {
  for (const auto& e : entries)
    if (e.v == v && e.h == h) return &e;
  return nullptr;
}

SweepReport agreement_sweep(std::uint64_t v_max, std::uint64_t h_max,
                            std::uint64_t limit) {
  SweepReport report;
  for (std::uint64_t v = 1; v <= v_max; ++v) {
    GroupSpec spec = GroupSpec::from_factors([v] {
      std::vector<std::pair<std::uint64_t, std::uint32_t>> fs;
      std::uint64_t m = v;
      for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        std::uint32_t a = 0;
        while (m % p == 0) {
          ++a;
          m /= p;
        }
        fs.emplace_back(p, a);
      }
      if (m > 1) fs.emplace_back(m, 1);
      return fs;
    }());
    for (std::uint64_t h = 1; h <= h_max; ++h) {
      SweepEntry entry;
      entry.v = v;
      entry.h = h;
      auto sr = exhaustive_cyclic(v, h, limit);
      entry.search = sr.outcome;
      auto verdict = decide(spec, h);
      entry.oracle = verdict.status;
      entry.contradiction =
          (sr.outcome == SearchOutcome::Found &&
           verdict.status == ExistStatus::NotExists) ||
          (sr.outcome == SearchOutcome::NotFound &&
           verdict.status == ExistStatus::Exists);
      if (entry.contradiction) ++report.contradictions;
      report.entries.push_back(entry);
    }
  }
  return report;
}

} // namespace butson
