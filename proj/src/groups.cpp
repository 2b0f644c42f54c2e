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

#include "groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace butson {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::uint64_t PrimePower::order() const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < a; ++i) r *= p;
  return r;
}

GroupSpec GroupSpec::from_factors(
    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& factors) {
  GroupSpec spec;
  for (const auto& [p, a] : factors) {
    if (!is_prime(p))
      throw Error(ErrorCode::Parse, "factor base " + std::to_string(p) +
                                        " is not prime");
    if (a < 1)
      throw Error(ErrorCode::Parse, "factor exponent must be positive");
    if (p == 2 && a == 1)
      ++spec.l_rank_;
    else
      spec.g_.push_back(PrimePower{p, a});
  }
  return spec;
}

std::uint64_t GroupSpec::order() const {
  std::uint64_t n = 1;
  for (const auto& f : g_) n *= f.order();
  return n << l_rank_;
}

std::uint64_t GroupSpec::g_order() const {
  std::uint64_t n = 1;
  for (const auto& f : g_) n *= f.order();
  return n;
}

std::uint64_t GroupSpec::exponent() const {
  std::uint64_t e = g_exponent();
  if (l_rank_ > 0) e = lcm_u64(e, 2);
  return e;
}

std::uint64_t GroupSpec::g_exponent() const {
  std::uint64_t e = 1;
  for (const auto& f : g_) e = lcm_u64(e, f.order());
  return e;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>>
GroupSpec::factor_list() const {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (const auto& f : g_) out.emplace_back(f.p, f.a);
  for (std::uint32_t i = 0; i < l_rank_; ++i) out.emplace_back(2, 1);
  return out;
}

GroupElement GroupSpec::element_at(std::uint64_t index) const {
  GroupElement x;
  x.g_coords.resize(g_.size());
  x.l_coords.resize(l_rank_);
  for (std::uint32_t i = l_rank_; i-- > 0;) {
    x.l_coords[i] = static_cast<std::uint8_t>(index & 1);
    index >>= 1;
  }
  for (std::size_t i = g_.size(); i-- > 0;) {
    std::uint64_t r = g_[i].order();
    x.g_coords[i] = index % r;
    index /= r;
  }
  if (index != 0)
    throw Error(ErrorCode::Shape, "element index out of range");
  return x;
}

std::uint64_t GroupSpec::index_of(const GroupElement& x) const {
  check_shape(x);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < g_.size(); ++i)
    idx = idx * g_[i].order() + x.g_coords[i];
  for (std::uint32_t i = 0; i < l_rank_; ++i)
    idx = (idx << 1) | (x.l_coords[i] & 1);
  return idx;
}

GroupElement GroupSpec::zero() const {
  GroupElement x;
  x.g_coords.assign(g_.size(), 0);
  x.l_coords.assign(l_rank_, 0);
  return x;
}

void GroupSpec::check_shape(const GroupElement& x) const {
  if (x.g_coords.size() != g_.size() || x.l_coords.size() != l_rank_)
    throw Error(ErrorCode::Shape, "element shape does not match group");
  for (std::size_t i = 0; i < g_.size(); ++i)
    if (x.g_coords[i] >= g_[i].order())
      throw Error(ErrorCode::Shape, "coordinate out of range");
  for (std::uint32_t i = 0; i < l_rank_; ++i)
    if (x.l_coords[i] > 1)
      throw Error(ErrorCode::Shape, "L coordinate must be a bit");
}

GroupElement add(const GroupSpec& spec, const GroupElement& x,
                 const GroupElement& y) {
  spec.check_shape(x);
  spec.check_shape(y);
  GroupElement z = x;
  const auto& fs = spec.g_factors();
  for (std::size_t i = 0; i < fs.size(); ++i)
    z.g_coords[i] = (x.g_coords[i] + y.g_coords[i]) % fs[i].order();
  for (std::size_t i = 0; i < z.l_coords.size(); ++i)
    z.l_coords[i] = (x.l_coords[i] + y.l_coords[i]) & 1;
  return z;
}

GroupElement neg(const GroupSpec& spec, const GroupElement& x) {
  spec.check_shape(x);
  GroupElement z = x;
  const auto& fs = spec.g_factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::uint64_t r = fs[i].order();
    z.g_coords[i] = (r - x.g_coords[i]) % r;
  }
  return z; // L bits are self-inverse
}

GroupElement sub(const GroupSpec& spec, const GroupElement& x,
                 const GroupElement& y) {
  return add(spec, x, neg(spec, y));
}

GroupElement scalar_mul(const GroupSpec& spec, std::int64_t k,
                        const GroupElement& x) {
  spec.check_shape(x);
  GroupElement z = x;
  const auto& fs = spec.g_factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::uint64_t r = fs[i].order();
    std::uint64_t kk = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(r)) +
                                                   static_cast<std::int64_t>(r)) %
                                                  static_cast<std::int64_t>(r));
    z.g_coords[i] = (kk * x.g_coords[i]) % r;
  }
  std::uint8_t bit = static_cast<std::uint8_t>(((k % 2) + 2) % 2);
  for (std::size_t i = 0; i < z.l_coords.size(); ++i)
    z.l_coords[i] = static_cast<std::uint8_t>(bit & x.l_coords[i]);
  return z;
}

bool SubgroupU::contains(const GroupSpec& spec, const GroupElement& x) const {
  spec.check_shape(x);
  for (std::size_t i = 0; i < strides.size(); ++i)
    if (x.g_coords[i] % strides[i] != 0) return false;
  for (auto b : x.l_coords)
    if (b) return false;
  return true;
}

std::uint64_t SubgroupU::order(const GroupSpec& spec) const {
  std::uint64_t n = 1;
  const auto& fs = spec.g_factors();
  for (std::size_t i = 0; i < fs.size(); ++i) n *= fs[i].order() / strides[i];
  return n;
}

std::uint64_t SubgroupU::exponent(const GroupSpec& spec) const {
  std::uint64_t e = 1;
  const auto& fs = spec.g_factors();
  for (std::size_t i = 0; i < fs.size(); ++i)
    e = lcm_u64(e, fs[i].order() / strides[i]);
  return e;
}

SubgroupU default_U(const GroupSpec& spec) {
  SubgroupU u;
  for (const auto& f : spec.g_factors()) {
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < f.a / 2; ++i) s *= f.p;
    u.strides.push_back(s);
  }
  return u;
}

std::vector<GroupElement> elements_of_U(const GroupSpec& spec,
                                        const SubgroupU& u) {
  const auto& fs = spec.g_factors();
  std::vector<std::uint64_t> counts(fs.size());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    counts[i] = fs[i].order() / u.strides[i];
    total *= counts[i];
  }
  std::vector<GroupElement> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    GroupElement x = spec.zero();
    std::uint64_t rem = idx;
    for (std::size_t i = fs.size(); i-- > 0;) {
      x.g_coords[i] = (rem % counts[i]) * u.strides[i];
      rem /= counts[i];
    }
    out.push_back(std::move(x));
  }
  return out;
}

CosetReps::CosetReps(const GroupSpec& spec, const SubgroupU& u,
                     std::vector<GroupElement> reps)
    : strides_(u.strides), reps_(std::move(reps)) {
  std::uint64_t n_cosets = 1;
  for (auto s : strides_) n_cosets *= s;
  if (reps_.size() != n_cosets)
    throw Error(ErrorCode::Ingredient, "coset representative count mismatch");
  for (std::uint64_t l = 0; l < n_cosets; ++l) {
    if (coset_label(spec, reps_[l]) != l)
      throw Error(ErrorCode::Ingredient,
                  "representative stored under wrong coset");
  }
  if (!(reps_[0] == spec.zero()))
    throw Error(ErrorCode::Ingredient, "zero coset must be represented by 0");
}

std::uint64_t CosetReps::coset_label(const GroupSpec& spec,
                                     const GroupElement& x) const {
  spec.check_shape(x);
  std::uint64_t label = 0;
  for (std::size_t i = 0; i < strides_.size(); ++i)
    label = label * strides_[i] + (x.g_coords[i] % strides_[i]);
  return label;
}

const GroupElement& CosetReps::rep_for_label(std::uint64_t label) const {
  return reps_.at(label);
}

static GroupElement label_element(const GroupSpec& spec, const SubgroupU& u,
                                  std::uint64_t label) {
  GroupElement x = spec.zero();
  for (std::size_t i = u.strides.size(); i-- > 0;) {
    x.g_coords[i] = label % u.strides[i];
    label /= u.strides[i];
  }
  return x;
}

CosetReps default_R(const GroupSpec& spec, const SubgroupU& u) {
  std::uint64_t n_cosets = 1;
  for (auto s : u.strides) n_cosets *= s;
  std::vector<GroupElement> reps;
  reps.reserve(n_cosets);
  for (std::uint64_t l = 0; l < n_cosets; ++l)
    reps.push_back(label_element(spec, u, l));
  return CosetReps(spec, u, std::move(reps));
}

CosetReps random_R(const GroupSpec& spec, const SubgroupU& u,
                   std::uint64_t seed) {
  std::uint64_t n_cosets = 1;
  for (auto s : u.strides) n_cosets *= s;
  auto u_elems = elements_of_U(spec, u);
  std::mt19937_64 rng(seed);
  std::vector<GroupElement> reps;
  reps.reserve(n_cosets);
  for (std::uint64_t l = 0; l < n_cosets; ++l) {
    GroupElement x = label_element(spec, u, l);
    if (l != 0) {
      const auto& shift = u_elems[rng() % u_elems.size()];
      x = add(spec, x, shift);
    }
    reps.push_back(std::move(x));
  }
  return CosetReps(spec, u, std::move(reps));
}

Decomposition decompose(const GroupSpec& spec, const GroupElement& x,
                        const SubgroupU& u, const CosetReps& r) {
  spec.check_shape(x);
  Decomposition d;
  d.l_part = spec.zero();
  d.l_part.l_coords = x.l_coords;
  GroupElement xg = x;
  std::fill(xg.l_coords.begin(), xg.l_coords.end(), 0);
  std::uint64_t label = r.coset_label(spec, xg);
  d.r_part = r.rep_for_label(label);
  d.u_part = sub(spec, xg, d.r_part);
  if (!u.contains(spec, d.u_part))
    throw Error(ErrorCode::Internal, "decomposition left non-U remainder");
  return d;
}

GroupElement square_root(const GroupSpec& spec, const GroupElement& u,
                         SqrtChooser chooser) {
  spec.check_shape(u);
  for (auto b : u.l_coords)
    if (b)
      throw Error(ErrorCode::Shape, "square roots are taken inside G");
  GroupElement y = u;
  const auto& fs = spec.g_factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::uint64_t r = fs[i].order();
    if (fs[i].p == 2) {
      if (u.g_coords[i] % 2 != 0)
        throw Error(ErrorCode::NoSquareRoot,
                    "odd residue on a 2-adic coordinate has no square root");
      y.g_coords[i] = u.g_coords[i] / 2;
      if (chooser == SqrtChooser::HalveOffset)
        y.g_coords[i] = (y.g_coords[i] + r / 2) % r;
    } else {
      std::uint64_t inv2 = (r + 1) / 2; // 2*inv2 = r+1 = 1 mod r
      y.g_coords[i] = (u.g_coords[i] % r) * inv2 % r;
    }
  }
  return y;
}

std::vector<Character> characters(const GroupSpec& spec) {
  std::uint64_t n = spec.order();
  std::vector<Character> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(spec.element_at(i));
  return out;
}

std::uint64_t char_exponent(const GroupSpec& spec, const Character& chi,
                            const GroupElement& g) {
  spec.check_shape(chi);
  spec.check_shape(g);
  std::uint64_t n_exp = spec.exponent();
  std::uint64_t acc = 0;
  const auto& fs = spec.g_factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::uint64_t w = n_exp / fs[i].order();
    acc = (acc + w % n_exp * (chi.g_coords[i] % n_exp) % n_exp *
                     (g.g_coords[i] % n_exp)) %
          n_exp;
  }
  for (std::size_t i = 0; i < chi.l_coords.size(); ++i) {
    std::uint64_t w = n_exp / 2;
    acc = (acc + w * (chi.l_coords[i] & g.l_coords[i])) % n_exp;
  }
  return acc;
}

// -------- enumeration of abelian groups --------

static void partitions_of(std::uint32_t n, std::uint32_t max_part,
                          std::vector<std::uint32_t>& cur,
                          std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_of(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<GroupSpec> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::Parse, "group order must be positive");
  std::map<std::uint64_t, std::uint32_t> fact;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      ++fact[p];
      m /= p;
    }
  if (m > 1) ++fact[m];

  std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> lists = {{}};
  for (const auto& [p, e] : fact) {
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> cur;
    partitions_of(e, e, cur, parts);
    std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> next;
    for (const auto& base : lists)
      for (const auto& part : parts) {
        auto ext = base;
        // ascending exponent order within a prime, for lexicographic sorting
        for (auto it = part.rbegin(); it != part.rend(); ++it)
          ext.emplace_back(p, *it);
        next.push_back(std::move(ext));
      }
    lists = std::move(next);
  }
  std::sort(lists.begin(), lists.end());
  std::vector<GroupSpec> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.push_back(GroupSpec::from_factors(l));
  return out;
}

std::vector<GroupSpec> abelian_groups_up_to(std::uint64_t n) {
  std::vector<GroupSpec> out;
  for (std::uint64_t k = 1; k <= n; ++k) {
    auto groups = abelian_groups_of_order(k);
    out.insert(out.end(), groups.begin(), groups.end());
  }
  return out;
}

} // namespace butson
