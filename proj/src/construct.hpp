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

// The bilinear-form matrix builder: row exponent at z = z1 + z2 + z3 is
// f(z1/2, z1) + beta f(z1, z2) in zeta_e combined with the quadratic phase
// at z3 in zeta_4, reduced to the promised entry order e1.

#ifndef BUTSON_CONSTRUCT_HPP
#define BUTSON_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forms.hpp"
#include "groups.hpp"
#include "phase.hpp"

namespace butson {

struct Ingredients {
  GroupSpec spec;
  SubgroupU u;
  CosetReps r;
  BilinearForm f;
  std::int64_t beta = 1;
  SqrtChooser chooser = SqrtChooser::Halve;
  PhaseFn s;
};

Ingredients default_ingredients(const GroupSpec& spec);

// Empty when valid; otherwise one message per failed hypothesis.
std::vector<std::string> validate_ingredients(const Ingredients& ing);

struct BHRow {
  GroupSpec spec;
  std::uint64_t h = 1;
  std::vector<std::uint64_t> row; // exponents in [0, h), canonical order
  // When set, the row is indexed by Z_v (v = |K|) through the componentwise
  // residue map instead of the canonical mixed-radix order.
  bool cyclic = false;

  std::uint64_t index_add(std::uint64_t i, std::uint64_t j) const;
  std::uint64_t index_sub(std::uint64_t i, std::uint64_t j) const;
};

// Promised entry order: exp(U) without a 2-part; lcm(2, exp(U)) when the
// phase takes only even values (d = 0); lcm(4, exp(U)) otherwise.
std::uint64_t compute_e1(const Ingredients& ing);

// Throws ErrorCode::Ingredient when validation fails and ErrorCode::Internal
// if an entry is not an e1-th root of unity (never expected).
BHRow build(const Ingredients& ing);

// Default ingredients, then lift exponents from e1 to h. Throws
// ErrorCode::ConditionsNotMet with the failed condition when (spec, h) is
// not covered by the sufficiency conditions.
BHRow default_build(const GroupSpec& spec, std::uint64_t h);

// As default_build but with selected overrides; h = 0 means h = e1.
BHRow build_with(const GroupSpec& spec, std::uint64_t h, std::int64_t beta,
                 const std::optional<BilinearForm>& form,
                 SqrtChooser chooser = SqrtChooser::Halve,
                 const std::optional<PhaseFn>& phase = std::nullopt);

// Circulant matrix over Z_v, reindexed from the primary decomposition by the
// componentwise residue isomorphism.
BHRow circulant(std::uint64_t v, std::uint64_t h);

} // namespace butson

#endif
