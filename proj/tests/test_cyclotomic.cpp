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

#include <random>

#include "cyclotomic.hpp"

using namespace butson;

namespace {

CycInt from_coeffs(std::uint64_t order, std::vector<long long> coeffs) {
  CycInt z(order);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    z.add_root(static_cast<std::int64_t>(i), BigInt(coeffs[i]));
  return z;
}

// independent oracle: polynomial multiplication of Phi_d factors
std::vector<BigInt> poly_mul(const std::vector<BigInt>& a,
                             const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

} // namespace

TEST_CASE("roots multiply by exponent addition") {
  auto i = CycInt::root(4, 1);
  CHECK((i * i).equals(CycInt::root(4, 2)));
  CHECK((i * i).equals_integer(BigInt(-1)));
  CHECK(CycInt::root(3, 1).conj().equals(CycInt::root(3, 2)));
  CHECK(CycInt::root(3, 1).rescale(12).equals(CycInt::root(12, 4)));
  CHECK_THROWS_AS(CycInt::root(3, 1).rescale(10), Error);
  CHECK_THROWS_AS(CycInt::root(3, 1) + CycInt::root(4, 1), Error);
}

TEST_CASE("cyclotomic polynomials, known values") {
  auto as_ll = [](const std::vector<BigInt>& v) {
    std::vector<long long> out;
    for (const auto& c : v) out.push_back(static_cast<long long>(c));
    return out;
  };
  CHECK(as_ll(cyclotomic_poly(1)) == std::vector<long long>{-1, 1});
  CHECK(as_ll(cyclotomic_poly(6)) == std::vector<long long>{1, -1, 1});
  CHECK(as_ll(cyclotomic_poly(12)) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("product of Phi_d over d | M reproduces x^M - 1, M <= 100") {
  for (std::uint64_t m = 1; m <= 100; ++m) {
    std::vector<BigInt> prod{BigInt(1)};
    for (std::uint64_t d = 1; d <= m; ++d)
      if (m % d == 0) prod = poly_mul(prod, cyclotomic_poly(d));
    REQUIRE(prod.size() == m + 1);
    CHECK(prod[0] == -1);
    CHECK(prod[m] == 1);
    for (std::uint64_t i = 1; i < m; ++i) CHECK(prod[i] == 0);
  }
}

TEST_CASE("is_zero") {
  CHECK(from_coeffs(3, {1, 1, 1}).is_zero());
  CHECK(!from_coeffs(3, {5, 2, 2}).is_zero());
  CHECK(from_coeffs(4, {0, 1, 0, 1}).is_zero());
}

TEST_CASE("full prime sums vanish, truncated ones do not") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    CycInt full(p);
    for (std::uint64_t i = 0; i < p; ++i) full.add_root(i);
    CHECK(full.is_zero());
    CycInt trunc(p);
    for (std::uint64_t i = 0; i + 1 < p; ++i) trunc.add_root(i);
    CHECK(!trunc.is_zero());
  }
}

TEST_CASE("norm_sq and equals_integer") {
  CHECK(from_coeffs(3, {5, 2, 2}).norm_sq().equals_integer(BigInt(9)));
  for (std::uint64_t m : {1, 2, 3, 4, 6, 12}) {
    for (std::uint64_t k = 0; k < m; ++k)
      CHECK(CycInt::root(m, k).norm_sq().equals_integer(BigInt(1)));
  }
  CHECK(CycInt::root(4, 2).equals_integer(BigInt(-1)));
}

TEST_CASE("mul is commutative and associative on random triples") {
  std::mt19937_64 rng(0);
  for (int rep = 0; rep < 50; ++rep) {
    std::uint64_t m = 1 + rng() % 24;
    auto rand_elt = [&] {
      CycInt z(m);
      for (std::uint64_t i = 0; i < m; ++i)
        z.add_root(i, BigInt(static_cast<long long>(rng() % 11) - 5));
      return z;
    };
    auto a = rand_elt(), b = rand_elt(), c = rand_elt();
    CHECK((a * b).equals(b * a));
    CHECK(((a * b) * c).equals(a * (b * c)));
    CHECK(a.conj().conj().equals(a));
    CHECK(a.norm_sq().equals(a.conj().norm_sq()));
  }
}
