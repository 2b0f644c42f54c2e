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

// Finite abelian groups K = G x L in primary decomposition, where L collects
// the Z_2 direct factors so that G has none. Elements, characters, the
// canonical subgroup U, coset representatives and square roots live here.

#ifndef BUTSON_GROUPS_HPP
#define BUTSON_GROUPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace butson {

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t a = 0;
  std::uint64_t order() const;
  bool operator==(const PrimePower&) const = default;
};

struct GroupElement {
  std::vector<std::uint64_t> g_coords; // coordinate i in [0, p_i^{a_i})
  std::vector<std::uint8_t> l_coords;  // bits, length l_rank
  bool operator==(const GroupElement&) const = default;
};

class GroupSpec {
public:
  GroupSpec() = default; // trivial group

  // Canonical split: every (2,1) factor is moved into L (in input order the
  // remaining factors form G). Throws ErrorCode::Parse on non-prime p or a=0.
  static GroupSpec from_factors(
      const std::vector<std::pair<std::uint64_t, std::uint32_t>>& factors);

  const std::vector<PrimePower>& g_factors() const { return g_; }
  std::uint32_t l_rank() const { return l_rank_; }

  std::uint64_t order() const;      // |K|
  std::uint64_t g_order() const;    // |G|
  std::uint64_t exponent() const;   // exp(K); 1 for the trivial group
  std::uint64_t g_exponent() const; // exp(G)
  bool trivial() const { return g_.empty() && l_rank_ == 0; }

  // Full factor list including the split-off (2,1) factors.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_list() const;

  // Canonical enumeration: mixed radix over (G coords, then L bits), last
  // coordinate varying fastest. index_of is its inverse.
  GroupElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const GroupElement& x) const;

  GroupElement zero() const;
  void check_shape(const GroupElement& x) const;

  bool operator==(const GroupSpec&) const = default;

private:
  std::vector<PrimePower> g_;
  std::uint32_t l_rank_ = 0;
};

GroupElement add(const GroupSpec& spec, const GroupElement& x,
                 const GroupElement& y);
GroupElement neg(const GroupSpec& spec, const GroupElement& x);
GroupElement sub(const GroupSpec& spec, const GroupElement& x,
                 const GroupElement& y);
GroupElement scalar_mul(const GroupSpec& spec, std::int64_t k,
                        const GroupElement& x);

// Subgroup U of G: coordinate i restricted to multiples of stride_i.
struct SubgroupU {
  std::vector<std::uint64_t> strides; // one per G coordinate

  bool contains(const GroupSpec& spec, const GroupElement& x) const;
  std::uint64_t order(const GroupSpec& spec) const;
  std::uint64_t exponent(const GroupSpec& spec) const;
};

// The canonical choice: stride p_i^{floor(a_i/2)}.
SubgroupU default_U(const GroupSpec& spec);

// All elements of U, as elements of K with zero L part.
std::vector<GroupElement> elements_of_U(const GroupSpec& spec,
                                        const SubgroupU& u);

// Complete system of coset representatives of U in G with 0 representing the
// zero coset. Cosets are labelled by the residues (x_i mod stride_i), mixed
// radix with the last coordinate fastest.
class CosetReps {
public:
  CosetReps(const GroupSpec& spec, const SubgroupU& u,
            std::vector<GroupElement> reps);

  std::uint64_t size() const { return reps_.size(); }
  const std::vector<GroupElement>& elements() const { return reps_; }

  std::uint64_t coset_label(const GroupSpec& spec,
                            const GroupElement& x) const;
  const GroupElement& rep_for_label(std::uint64_t label) const;

private:
  std::vector<std::uint64_t> strides_;
  std::vector<GroupElement> reps_; // indexed by coset label
};

// Representatives with every coordinate below its stride (label element
// itself); contains 0.
CosetReps default_R(const GroupSpec& spec, const SubgroupU& u);

// Random complete system: each nonzero coset gets its label element shifted
// by a random element of U; the zero coset keeps 0.
CosetReps random_R(const GroupSpec& spec, const SubgroupU& u,
                   std::uint64_t seed);

struct Decomposition {
  GroupElement u_part; // in U
  GroupElement r_part; // in R
  GroupElement l_part; // in L (g coords zero)
};

// Unique x = x1 + x2 + x3 with x1 in U, x2 in R, x3 in L.
Decomposition decompose(const GroupSpec& spec, const GroupElement& x,
                        const SubgroupU& u, const CosetReps& r);

enum class SqrtChooser {
  Halve,      // odd p: u*inv(2); p=2: integer halving
  HalveOffset // as Halve, plus 2^{a-1} on p=2 coordinates
};

// y with 2y = u. Throws ErrorCode::NoSquareRoot for an odd residue on a
// 2-adic coordinate. Requires zero L part.
GroupElement square_root(const GroupSpec& spec, const GroupElement& u,
                         SqrtChooser chooser = SqrtChooser::Halve);

// Characters are indexed by group elements t; the value on g is
// zeta_N^{sum_i (N/n_i) t_i g_i} with N = exp(K) and n_i the coordinate
// order. characters() enumerates all |K| of them in canonical order.
using Character = GroupElement;

std::vector<Character> characters(const GroupSpec& spec);
std::uint64_t char_exponent(const GroupSpec& spec, const Character& chi,
                            const GroupElement& g); // residue mod exp(K)

// All isomorphism types of abelian groups of the given order, as canonical
// GroupSpecs, ordered by lexicographic factor list. Deterministic.
std::vector<GroupSpec> abelian_groups_of_order(std::uint64_t n);
std::vector<GroupSpec> abelian_groups_up_to(std::uint64_t n);

bool is_prime(std::uint64_t p);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

} // namespace butson

#endif
