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

// Exact certification of a claimed row: the autocorrelation criterion (every
// nonzero shift sum vanishes in Z[zeta_h]) and, independently, the character
// criterion (every character sum has squared modulus |K|). No floating point
// anywhere on the pass/fail path.

#ifndef BUTSON_VERIFY_HPP
#define BUTSON_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "construct.hpp"

namespace butson {

// Minimal h' dividing h such that all entries are h'-th roots of unity.
std::uint64_t entries_order(const BHRow& row);

struct CheckResult {
  bool pass = true;
  // canonical index of the first failing shift / character
  std::optional<std::uint64_t> first_fail;
};

// Worker count from BUTSON_THREADS (>=1); affects speed only.
unsigned verify_worker_count();

CheckResult check_bh_direct(const BHRow& row);
CheckResult check_bh_characters(const BHRow& row);

struct Verification {
  CheckResult direct;
  CheckResult characters;
  bool pass() const { return direct.pass && characters.pass; }
};

// Runs both criteria; throws ErrorCode::Internal if they disagree.
Verification verify(const BHRow& row);

// Full |K| x |K| exponent matrix H_{y,x} = row[x - y].
std::vector<std::vector<std::uint64_t>> materialize(const BHRow& row,
                                                    std::uint64_t bound = 256);

} // namespace butson

#endif
