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

#include "oracle.hpp"

namespace butson {

const char* to_string(ExistStatus s) {
  switch (s) {
    case ExistStatus::Exists: return "EXISTS";
    case ExistStatus::NotExists: return "NOT_EXISTS";
    case ExistStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::uint32_t nu(std::uint64_t p, std::uint64_t t) {
  if (!is_prime(p)) throw Error(ErrorCode::Parse, "nu: p must be prime");
  if (t == 0) throw Error(ErrorCode::Parse, "nu: t must be positive");
  std::uint32_t k = 0;
  while (t % p == 0) {
    ++k;
    t /= p;
  }
  return k;
}

SufficiencyReport sufficient_general(const GroupSpec& spec, std::uint64_t h) {
  if (h == 0) throw Error(ErrorCode::Parse, "h must be positive");
  std::uint64_t n = spec.order();
  std::uint64_t exp_k = spec.exponent();
  std::uint64_t m = n;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);
  for (std::uint64_t p : primes) {
    std::uint32_t need = (nu(p, exp_k) + 1) / 2;
    if (nu(p, h) < need)
      return {false, "condition (i) fails at p = " + std::to_string(p) +
                         ": nu_p(h) = " + std::to_string(nu(p, h)) + " < " +
                         std::to_string(need)};
  }
  if (nu(2, n) % 2 == 1 && spec.l_rank() > 0 && nu(2, h) < 2)
    return {false, "condition (ii) fails: nu_2(|K|) odd with a Z_2 factor "
                   "requires nu_2(h) >= 2"};
  return {true, ""};
}

static bool is_prime_power(std::uint64_t v, std::uint64_t& p,
                           std::uint32_t& a) {
  if (v < 2) return false;
  for (std::uint64_t q = 2; q * q <= v; ++q) {
    if (v % q != 0) continue;
    p = q;
    a = 0;
    while (v % q == 0) {
      ++a;
      v /= q;
    }
    return v == 1;
  }
  p = v;
  a = 1;
  return true;
}

Verdict decide_cyclic_prime_power(std::uint64_t v, std::uint64_t h) {
  std::uint64_t p;
  std::uint32_t a;
  if (!is_prime_power(v, p, a))
    throw Error(ErrorCode::Parse, "v is not a prime power");
  if (h == 0) throw Error(ErrorCode::Parse, "h must be positive");

  std::uint32_t need = (a + 1) / 2;
  if (nu(p, h) == 0) {
    Verdict verdict;
    verdict.status = ExistStatus::NotExists;
    verdict.provenance = "Theorem 3.5";
    return verdict;
  }
  if (nu(p, h) < need || (v == 2 && nu(2, h) == 1)) {
    Verdict verdict;
    verdict.status = ExistStatus::NotExists;
    verdict.provenance = "Theorem 3.6";
    return verdict;
  }
  Verdict verdict;
  verdict.status = ExistStatus::Exists;
  verdict.provenance = "Theorem 3.6";
  verdict.witness = circulant(v, h);
  return verdict;
}

Verdict decide(const GroupSpec& spec, std::uint64_t h) {
  if (h == 0) throw Error(ErrorCode::Parse, "h must be positive");

  if (spec.trivial()) {
    Verdict verdict;
    verdict.status = ExistStatus::Exists;
    verdict.provenance = "trivial";
    BHRow row;
    row.spec = spec;
    row.h = h;
    row.row = {0};
    verdict.witness = std::move(row);
    return verdict;
  }

  bool cyclic_prime_power =
      (spec.g_factors().size() == 1 && spec.l_rank() == 0) ||
      (spec.g_factors().empty() && spec.l_rank() == 1);
  if (cyclic_prime_power) {
    std::uint64_t v = spec.order();
    return decide_cyclic_prime_power(v, h);
  }

  auto report = sufficient_general(spec, h);
  if (report.ok) {
    Verdict verdict;
    verdict.status = ExistStatus::Exists;
    verdict.provenance = "Corollary 2.3";
    verdict.witness = default_build(spec, h);
    return verdict;
  }

  Verdict verdict;
  verdict.status = ExistStatus::Unknown;
  verdict.provenance = "none";
  verdict.note = report.failed +
                 "; no encoded nonexistence criterion applies to this group";
  return verdict;
}

} // namespace butson
