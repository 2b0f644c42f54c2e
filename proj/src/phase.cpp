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

#include "phase.hpp"

#include <bit>
#include <random>

#include "cyclotomic.hpp"

namespace butson {

std::vector<std::uint8_t> inner_product_table(std::uint32_t a) {
  std::size_t n = std::size_t{1} << (2 * a);
  std::vector<std::uint8_t> table(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint32_t lo = static_cast<std::uint32_t>(x) & ((1u << a) - 1);
    std::uint32_t hi = static_cast<std::uint32_t>(x >> a) & ((1u << a) - 1);
    table[x] = static_cast<std::uint8_t>(std::popcount(lo & hi) & 1);
  }
  return table;
}

PhaseFn default_phase(std::uint32_t c) {
  PhaseFn s;
  s.a = c / 2;
  s.d = c % 2;
  s.truth_table = inner_product_table(s.a);
  return s;
}

std::uint32_t sl_eval(const PhaseFn& s, const std::vector<std::uint8_t>& g) {
  if (g.size() != s.rank())
    throw Error(ErrorCode::Shape, "phase input length mismatch");
  std::uint32_t x = 0;
  for (std::uint32_t i = 0; i < 2 * s.a; ++i)
    x |= static_cast<std::uint32_t>(g[i] & 1) << i;
  std::uint32_t v = 2u * (s.truth_table.at(x) & 1);
  for (std::uint32_t i = 2 * s.a; i < s.rank(); ++i) v += g[i] & 1;
  return v % 4;
}

BentResult bent_check(const std::vector<std::uint8_t>& truth_table) {
  std::size_t n = truth_table.size();
  std::uint32_t two_a = 0;
  while ((std::size_t{1} << two_a) < n) ++two_a;
  if ((std::size_t{1} << two_a) != n || two_a % 2 != 0)
    throw Error(ErrorCode::Shape, "truth table length must be a power of 4");
  std::int64_t target = std::int64_t{1} << (two_a / 2);
  BentResult res;
  res.bent = true;
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    std::int64_t sum = 0;
    for (std::size_t x = 0; x < n; ++x) {
      std::uint32_t sgn =
          (truth_table[x] & 1) ^ (std::popcount(alpha & x) & 1);
      sum += sgn ? -1 : 1;
    }
    bool ok = sum == target || sum == -target;
    if (alpha == 0)
      res.alpha_zero_ok = ok;
    else if (!ok)
      res.bent = false;
  }
  return res;
}

bool sl_vanishing_check(std::uint32_t c, const PhaseFn& s) {
  if (s.rank() != c) return false;
  std::size_t n = std::size_t{1} << c;
  auto bits = [c](std::size_t v) {
    std::vector<std::uint8_t> b(c);
    for (std::uint32_t i = 0; i < c; ++i)
      b[i] = static_cast<std::uint8_t>((v >> i) & 1);
    return b;
  };
  std::vector<std::uint32_t> val(n);
  for (std::size_t x = 0; x < n; ++x) val[x] = sl_eval(s, bits(x));
  for (std::size_t g = 0; g < n; ++g) {
    CycInt sum(4);
    for (std::size_t x = 0; x < n; ++x)
      sum.add_root(static_cast<std::int64_t>(val[x]) -
                   static_cast<std::int64_t>(val[x ^ g]));
    if (g == 0) {
      if (!sum.equals_integer(BigInt(static_cast<long long>(n)))) return false;
    } else if (!sum.is_zero()) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint8_t> random_bent(std::uint32_t a, std::uint64_t seed) {
  std::uint32_t m = 2 * a;
  std::size_t n = std::size_t{1} << m;
  auto base = inner_product_table(a);
  std::mt19937_64 rng(seed);

  // random invertible matrix over GF(2), rows as bitmasks
  std::vector<std::uint32_t> mat(m);
  for (;;) {
    for (auto& row : mat) row = static_cast<std::uint32_t>(rng()) & (n - 1);
    auto work = mat;
    bool invertible = true;
    for (std::uint32_t col = 0; col < m && invertible; ++col) {
      std::uint32_t pivot = col;
      while (pivot < m && !((work[pivot] >> col) & 1)) ++pivot;
      if (pivot == m) {
        invertible = false;
        break;
      }
      std::swap(work[col], work[pivot]);
      for (std::uint32_t r = 0; r < m; ++r)
        if (r != col && ((work[r] >> col) & 1)) work[r] ^= work[col];
    }
    if (invertible) break;
  }
  std::uint32_t b = static_cast<std::uint32_t>(rng()) & (n - 1);
  std::uint32_t lin = static_cast<std::uint32_t>(rng()) & (n - 1);
  std::uint32_t cst = static_cast<std::uint32_t>(rng()) & 1;

  std::vector<std::uint8_t> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint32_t y = 0;
    for (std::uint32_t i = 0; i < m; ++i)
      y |= static_cast<std::uint32_t>(std::popcount(mat[i] & x) & 1) << i;
    y ^= b;
    out[x] = static_cast<std::uint8_t>((base[y] ^ (std::popcount(lin & x) & 1) ^
                                        cst) &
                                       1);
  }
  return out;
}

} // namespace butson
