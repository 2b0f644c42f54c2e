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

// Existence oracle: answers EXISTS / NOT_EXISTS only where the implemented
// criteria are conclusive, UNKNOWN otherwise. EXISTS verdicts from a
// construction always carry a witness row.

#ifndef BUTSON_ORACLE_HPP
#define BUTSON_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "construct.hpp"
#include "groups.hpp"

namespace butson {

enum class ExistStatus { Exists, NotExists, Unknown };

struct Verdict {
  ExistStatus status = ExistStatus::Unknown;
  std::string provenance;
  std::optional<BHRow> witness;
  std::string note;
};

// p-adic valuation: largest k with p^k | t.
std::uint32_t nu(std::uint64_t p, std::uint64_t t);

struct SufficiencyReport {
  bool ok = true;
  std::string failed; // human-readable description of the first failure
};

// The two sufficiency conditions: nu_p(h) >= ceil(nu_p(exp K)/2) for every
// prime divisor p of |K|, and nu_2(h) >= 2 when nu_2(|K|) is odd and K has a
// Z_2 direct factor.
SufficiencyReport sufficient_general(const GroupSpec& spec, std::uint64_t h);

// Conclusive for cyclic groups of prime power order v: exists iff
// nu_p(h) >= ceil(nu_p(v)/2) and (v, nu_2(h)) != (2, 1). Throws
// ErrorCode::Parse when v is not a prime power.
Verdict decide_cyclic_prime_power(std::uint64_t v, std::uint64_t h);

Verdict decide(const GroupSpec& spec, std::uint64_t h);

const char* to_string(ExistStatus s);

} // namespace butson

#endif
