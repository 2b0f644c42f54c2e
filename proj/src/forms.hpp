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

// Symmetric bilinear forms f: G x G -> Z_e, given by a Gram table on the
// coordinate generators of G.

#ifndef BUTSON_FORMS_HPP
#define BUTSON_FORMS_HPP

#include <cstdint>
#include <vector>

#include "groups.hpp"

namespace butson {

struct BilinearForm {
  std::uint64_t e = 1; // modulus, normally exp(G)
  std::vector<std::vector<std::uint64_t>> gram; // s x s, entries in [0, e)
};

// f(g, h) = sum_{i,j} g_i h_j gram[i][j] mod e. L coordinates are ignored.
std::uint64_t eval(const BilinearForm& f, const GroupSpec& spec,
                   const GroupElement& g, const GroupElement& h);

// Diagonal e / p_i^{a_i}; the form (g, h) -> sum (e/p_i^{a_i}) g_i h_i.
BilinearForm default_form(const GroupSpec& spec);

bool check_symmetric(const BilinearForm& f);

// ord(e_i) * gram[i][j] = 0 mod e for all i, j.
bool check_well_defined(const BilinearForm& f, const GroupSpec& spec);

// No nonzero g with f(g, .) identically zero; tested against the coordinate
// generators, which determine the homomorphism f(g, .).
bool check_nondegenerate(const BilinearForm& f, const GroupSpec& spec);

// No g outside U orthogonal to all of U; tested against the U generators
// stride_i * e_i, exhaustively over G.
bool check_U_orthogonality(const BilinearForm& f, const GroupSpec& spec,
                           const SubgroupU& u);

} // namespace butson

#endif
