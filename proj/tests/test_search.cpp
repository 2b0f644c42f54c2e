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

#include "search.hpp"
#include "verify.hpp"

using namespace butson;

TEST_CASE("tiny instances") {
  CHECK(exhaustive_cyclic(2, 2).outcome == SearchOutcome::NotFound);

  auto r24 = exhaustive_cyclic(2, 4);
  CHECK(r24.outcome == SearchOutcome::Found);
  CHECK(r24.row == std::vector<std::uint64_t>{0, 1});

  auto r42 = exhaustive_cyclic(4, 2);
  CHECK(r42.outcome == SearchOutcome::Found);
  CHECK(r42.row == std::vector<std::uint64_t>{0, 0, 0, 1});

  auto r33 = exhaustive_cyclic(3, 3);
  CHECK(r33.outcome == SearchOutcome::Found);
}

TEST_CASE("found rows pass the verifier") {
  for (auto [v, h] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {2, 4}, {3, 3}, {4, 2}, {4, 4}, {5, 5}}) {
    auto r = exhaustive_cyclic(v, h);
    REQUIRE(r.outcome == SearchOutcome::Found);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
    std::uint64_t rest = v;
    for (std::uint64_t p = 2; p <= rest; ++p)
      if (rest % p == 0) {
        std::uint32_t a = 0;
        while (rest % p == 0) rest /= p, ++a;
        factors.push_back({p, a});
      }
    BHRow row{GroupSpec::from_factors(factors), h, r.row, true};
    CHECK(verify(row).pass());
  }
}

TEST_CASE("bound is respected") {
  auto r = exhaustive_cyclic(6, 6, 10);
  CHECK(r.outcome == SearchOutcome::BoundExceeded);
  CHECK(r.nodes <= 11);
}

TEST_CASE("determinism") {
  auto a = exhaustive_cyclic(4, 4);
  auto b = exhaustive_cyclic(4, 4);
  CHECK(a.outcome == b.outcome);
  CHECK(a.row == b.row);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("agreement sweep") {
  auto rep = agreement_sweep(5, 6);
  CHECK(rep.contradictions == 0);
  auto* e22 = rep.find(2, 2);
  REQUIRE(e22);
  CHECK(e22->search == SearchOutcome::NotFound);
  CHECK(e22->oracle == ExistStatus::NotExists);
  auto* e24 = rep.find(2, 4);
  REQUIRE(e24);
  CHECK(e24->search == SearchOutcome::Found);
  CHECK(e24->oracle == ExistStatus::Exists);
  auto* e42 = rep.find(4, 2);
  REQUIRE(e42);
  CHECK(e42->search == SearchOutcome::Found);
  CHECK(e42->oracle == ExistStatus::Exists);
  auto* e33 = rep.find(3, 3);
  REQUIRE(e33);
  CHECK(e33->search == SearchOutcome::Found);
  for (std::uint64_t h : {2ull, 4ull, 5ull}) {
    auto* e = rep.find(3, h);
    REQUIRE(e);
    CHECK(e->search == SearchOutcome::NotFound);
    CHECK(e->oracle == ExistStatus::NotExists);
  }
}
