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

// Exhaustive search over circulant rows for tiny cyclic instances: the
// independent ground truth for the existence oracle and the construction.

#ifndef BUTSON_SEARCH_HPP
#define BUTSON_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace butson {

enum class SearchOutcome { Found, NotFound, BoundExceeded };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NotFound;
  std::vector<std::uint64_t> row; // lexicographically first witness
  std::uint64_t nodes = 0;        // visited assignments
};

inline constexpr std::uint64_t kDefaultSearchLimit = 10'000'000;

// Depth-first over rows with a_0 = 0 in lexicographic order; a candidate is
// accepted iff every nonzero shift autocorrelation vanishes exactly. The
// trivial-character bound |sum zeta_h^{a_i}|^2 = v is checked first at each
// leaf. Deterministic.
SearchResult exhaustive_cyclic(std::uint64_t v, std::uint64_t h,
                               std::uint64_t limit = kDefaultSearchLimit);

struct SweepEntry {
  std::uint64_t v = 0;
  std::uint64_t h = 0;
  SearchOutcome search = SearchOutcome::NotFound;
  ExistStatus oracle = ExistStatus::Unknown;
  bool contradiction = false;
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  std::uint64_t contradictions = 0;
  const SweepEntry* find(std::uint64_t v, std::uint64_t h) const;
};

// Compares the searcher against the oracle on all v <= v_max, h <= h_max.
// A contradiction is FOUND vs NOT_EXISTS or exhausted NOT_FOUND vs EXISTS.
SweepReport agreement_sweep(std::uint64_t v_max, std::uint64_t h_max,
                            std::uint64_t limit = kDefaultSearchLimit);

const char* to_string(SearchOutcome o);

} // namespace butson

#endif
