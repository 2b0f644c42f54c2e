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

#include "verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "cyclotomic.hpp"

namespace butson {

std::uint64_t entries_order(const BHRow& row) {
  std::uint64_t g = row.h;
  for (auto a : row.row) g = gcd_u64(g, a % row.h);
  return row.h / g;
}

unsigned verify_worker_count() {
  const char* env = std::getenv("BUTSON_THREADS");
  if (!env) return 1;
  long v = std::atol(env);
  if (v < 1) return 1;
  if (v > 64) return 64;
  return static_cast<unsigned>(v);
}

namespace {

// checks indices [which] in [lo, hi); returns the first failure, if any
template <typename Fn>
std::optional<std::uint64_t> first_failure(std::uint64_t lo, std::uint64_t hi,
                                           Fn&& check_one) {
  unsigned workers = verify_worker_count();
  if (workers <= 1 || hi - lo < 2 * workers) {
    for (std::uint64_t i = lo; i < hi; ++i)
      if (!check_one(i)) return i;
    return std::nullopt;
  }
  std::vector<std::optional<std::uint64_t>> results(workers);
  std::vector<std::thread> threads;
  std::uint64_t span = hi - lo;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = lo + span * w / workers;
    std::uint64_t end = lo + span * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      for (std::uint64_t i = begin; i < end; ++i)
        if (!check_one(i)) {
          results[w] = i;
          return;
        }
    });
  }
  for (auto& t : threads) t.join();
  std::optional<std::uint64_t> best;
  for (const auto& r : results)
    if (r && (!best || *r < *best)) best = r;
  return best;
}

} // namespace

CheckResult check_bh_direct(const BHRow& row) {
  std::uint64_t n = row.row.size();
  std::int64_t h = static_cast<std::int64_t>(row.h);
  auto check_shift = [&](std::uint64_t g) {
    CycInt sum(row.h);
    for (std::uint64_t l = 0; l < n; ++l) {
      std::uint64_t lg = row.index_add(l, g);
      sum.add_root(static_cast<std::int64_t>(row.row[lg] % row.h) -
                   static_cast<std::int64_t>(row.row[l] % row.h) +
                   h);
    }
    return sum.is_zero();
  };
  CheckResult res;
  res.first_fail = first_failure(1, n, check_shift);
  res.pass = !res.first_fail.has_value();
  return res;
}

CheckResult check_bh_characters(const BHRow& row) {
  std::uint64_t n = row.row.size();
  std::uint64_t big_n = row.cyclic ? n : row.spec.exponent();
  std::uint64_t m = lcm_u64(row.h, big_n);
  BigInt target(static_cast<long long>(n));

  auto char_exp = [&](std::uint64_t chi, std::uint64_t g) -> std::uint64_t {
    if (row.cyclic) return chi * g % n;
    return char_exponent(row.spec, row.spec.element_at(chi),
                         row.spec.element_at(g));
  };
  auto check_char = [&](std::uint64_t chi) {
    CycInt sum(m);
    for (std::uint64_t g = 0; g < n; ++g) {
      std::uint64_t k =
          ((m / row.h) * (row.row[g] % row.h) + (m / big_n) * char_exp(chi, g)) %
          m;
      sum.add_root(static_cast<std::int64_t>(k));
    }
    return sum.norm_sq().equals_integer(target);
  };
  CheckResult res;
  res.first_fail = first_failure(0, n, check_char);
  res.pass = !res.first_fail.has_value();
  return res;
}

Verification verify(const BHRow& row) {
  Verification v;
  v.direct = check_bh_direct(row);
  v.characters = check_bh_characters(row);
  if (v.direct.pass != v.characters.pass)
    throw Error(ErrorCode::Internal,
                "autocorrelation and character criteria disagree");
  return v;
}

std::vector<std::vector<std::uint64_t>> materialize(const BHRow& row,
                                                    std::uint64_t bound) {
  std::uint64_t n = row.row.size();
  if (n > bound)
    throw Error(ErrorCode::Bound, "materialization bound exceeded");
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (std::uint64_t y = 0; y < n; ++y)
    for (std::uint64_t x = 0; x < n; ++x) h[y][x] = row.row[row.index_sub(x, y)];
  return h;
}

} // namespace butson
