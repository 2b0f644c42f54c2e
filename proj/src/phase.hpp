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

// The quadratic phase on the elementary abelian 2-part: a bent function F on
// the first 2a bits plus the sum of the remaining d bits, as an exponent of
// zeta_4.

#ifndef BUTSON_PHASE_HPP
#define BUTSON_PHASE_HPP

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace butson {

struct PhaseFn {
  std::uint32_t a = 0;
  std::uint32_t d = 0;
  // truth table of F: (Z_2)^{2a} -> Z_2, length 4^a; x is indexed with the
  // first variable as the least significant bit
  std::vector<std::uint8_t> truth_table;

  std::uint32_t rank() const { return 2 * a + d; }
};

// Inner product of the first and second halves of the input; bent.
std::vector<std::uint8_t> inner_product_table(std::uint32_t a);

// a = floor(c/2), d = c mod 2, inner-product F; matches the construction's
// stated phase exactly.
PhaseFn default_phase(std::uint32_t c);

// 2 F(g_1..g_{2a}) + sum_{i>2a} g_i, mod 4.
std::uint32_t sl_eval(const PhaseFn& s, const std::vector<std::uint8_t>& g);

struct BentResult {
  bool bent = false;          // |correlation| = 2^a at every nonzero alpha
  bool alpha_zero_ok = false; // the same bound at alpha = 0, reported apart
};

BentResult bent_check(const std::vector<std::uint8_t>& truth_table);

// For every nonzero g in (Z_2)^c the sum over x of zeta_4^{s(x)-s(x xor g)}
// vanishes exactly, and the g = 0 sum is |L|.
bool sl_vanishing_check(std::uint32_t c, const PhaseFn& s);

// Seeded bent function: the inner-product table composed with a random
// invertible affine input substitution, plus a random affine function.
std::vector<std::uint8_t> random_bent(std::uint32_t a, std::uint64_t seed);

} // namespace butson

#endif
