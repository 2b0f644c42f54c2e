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

#include "construct.hpp"

#include <numeric>

#include "oracle.hpp"

namespace butson {

Ingredients default_ingredients(const GroupSpec& spec) {
  SubgroupU u = default_U(spec);
  CosetReps r = default_R(spec, u);
  return Ingredients{spec,
                     u,
                     std::move(r),
                     default_form(spec),
                     1,
                     SqrtChooser::Halve,
                     default_phase(spec.l_rank())};
}

std::vector<std::string> validate_ingredients(const Ingredients& ing) {
  std::vector<std::string> errs;
  const GroupSpec& spec = ing.spec;

  if (ing.u.strides.size() != spec.g_factors().size()) {
    errs.push_back("subgroup U shape does not match G");
    return errs;
  }
  for (std::size_t i = 0; i < ing.u.strides.size(); ++i) {
    std::uint64_t ord = spec.g_factors()[i].order();
    if (ing.u.strides[i] == 0 || ord % ing.u.strides[i] != 0)
      errs.push_back("U stride must divide the coordinate order");
  }

  if (ing.f.e != spec.g_exponent())
    errs.push_back("form modulus must equal exp(G)");
  if (ing.f.gram.size() != spec.g_factors().size())
    errs.push_back("gram table size does not match G");
  if (errs.empty()) {
    if (!check_symmetric(ing.f)) errs.push_back("form is not symmetric");
    if (!check_well_defined(ing.f, spec))
      errs.push_back("form is not well defined on G");
    else {
      if (!check_nondegenerate(ing.f, spec))
        errs.push_back("form is degenerate");
      if (!check_U_orthogonality(ing.f, spec, ing.u))
        errs.push_back("an element outside U is orthogonal to all of U");
    }
  }

  std::uint64_t g_ord = spec.g_order();
  std::int64_t bmod = ing.beta % static_cast<std::int64_t>(g_ord);
  if (bmod < 0) bmod += static_cast<std::int64_t>(g_ord);
  if (std::gcd(static_cast<std::uint64_t>(bmod), g_ord) != 1)
    errs.push_back("beta must be coprime to |G|");

  try {
    for (const auto& u_elem : elements_of_U(spec, ing.u))
      (void)square_root(spec, u_elem, ing.chooser);
  } catch (const Error&) {
    errs.push_back("an element of U has no square root in G");
  }

  if (ing.s.rank() != spec.l_rank())
    errs.push_back("phase rank does not match the 2-part of K");
  if (ing.s.truth_table.size() != (std::size_t{1} << (2 * ing.s.a)))
    errs.push_back("phase truth table length must be 4^a");
  else if (ing.s.a > 0 && !bent_check(ing.s.truth_table).bent)
    errs.push_back("phase truth table is not bent");

  return errs;
}

std::uint64_t compute_e1(const Ingredients& ing) {
  std::uint64_t exp_u = ing.u.exponent(ing.spec);
  if (ing.spec.l_rank() == 0) return exp_u;
  if (ing.s.d == 0) return lcm_u64(2, exp_u);
  return lcm_u64(4, exp_u);
}

std::uint64_t BHRow::index_add(std::uint64_t i, std::uint64_t j) const {
  if (cyclic) return (i + j) % row.size();
  return spec.index_of(add(spec, spec.element_at(i), spec.element_at(j)));
}

std::uint64_t BHRow::index_sub(std::uint64_t i, std::uint64_t j) const {
  if (cyclic) return (i + row.size() - j % row.size()) % row.size();
  return spec.index_of(sub(spec, spec.element_at(i), spec.element_at(j)));
}

BHRow build(const Ingredients& ing) {
  auto errs = validate_ingredients(ing);
  if (!errs.empty()) {
    std::string msg = "invalid ingredients:";
    for (const auto& e : errs) msg += " " + e + ";";
    throw Error(ErrorCode::Ingredient, msg);
  }

  const GroupSpec& spec = ing.spec;
  std::uint64_t e = spec.g_exponent();
  bool has_l = spec.l_rank() > 0;
  std::uint64_t m = has_l ? lcm_u64(e, 4) : e;
  std::uint64_t e1 = compute_e1(ing);
  std::uint64_t step = m / e1; // entries are e1-th roots inside zeta_m

  std::int64_t beta = ing.beta % static_cast<std::int64_t>(e);
  if (beta < 0) beta += static_cast<std::int64_t>(e);
  std::uint64_t beta_u = static_cast<std::uint64_t>(beta);

  BHRow out;
  out.spec = spec;
  out.h = e1;
  std::uint64_t n = spec.order();
  out.row.resize(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    GroupElement z = spec.element_at(idx);
    Decomposition d = decompose(spec, z, ing.u, ing.r);
    GroupElement half = square_root(spec, d.u_part, ing.chooser);
    std::uint64_t fe = (eval(ing.f, spec, half, d.u_part) +
                        beta_u * eval(ing.f, spec, d.u_part, d.r_part)) %
                       e;
    std::uint64_t exp_m = (m / e) * fe % m;
    if (has_l) {
      std::uint32_t se = sl_eval(ing.s, d.l_part.l_coords);
      exp_m = (exp_m + (m / 4) * se) % m;
    }
    if (exp_m % step != 0)
      throw Error(ErrorCode::Internal,
                  "entry is not an e1-th root of unity at index " +
                      std::to_string(idx));
    out.row[idx] = (exp_m / step) % e1;
  }
  return out;
}

static BHRow lift(BHRow row, std::uint64_t h) {
  if (h % row.h != 0)
    throw Error(ErrorCode::Internal,
                "lift target is not a multiple of the entry order");
  std::uint64_t factor = h / row.h;
  for (auto& x : row.row) x *= factor;
  row.h = h;
  return row;
}

BHRow default_build(const GroupSpec& spec, std::uint64_t h) {
  auto report = sufficient_general(spec, h);
  if (!report.ok)
    throw Error(ErrorCode::ConditionsNotMet, report.failed);
  BHRow base = build(default_ingredients(spec));
  if (h % base.h != 0)
    throw Error(ErrorCode::Internal,
                "sufficiency accepted an h not divisible by e1");
  return lift(std::move(base), h);
}

BHRow build_with(const GroupSpec& spec, std::uint64_t h, std::int64_t beta,
                 const std::optional<BilinearForm>& form, SqrtChooser chooser,
                 const std::optional<PhaseFn>& phase) {
  Ingredients ing = default_ingredients(spec);
  ing.beta = beta;
  ing.chooser = chooser;
  if (form) ing.f = *form;
  if (phase) ing.s = *phase;
  BHRow base = build(ing);
  if (h == 0 || h == base.h) return base;
  if (h % base.h != 0)
    throw Error(ErrorCode::ConditionsNotMet,
                "h = " + std::to_string(h) +
                    " is not a multiple of the constructed entry order " +
                    std::to_string(base.h));
  return lift(std::move(base), h);
}

static std::vector<std::pair<std::uint64_t, std::uint32_t>>
prime_power_factorization(std::uint64_t v) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  std::uint64_t m = v;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    std::uint32_t a = 0;
    while (m % p == 0) {
      ++a;
      m /= p;
    }
    out.emplace_back(p, a);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

BHRow circulant(std::uint64_t v, std::uint64_t h) {
  if (v == 0) throw Error(ErrorCode::Parse, "order must be positive");
  auto factors = prime_power_factorization(v);
  // sufficiency conditions on (v, h)
  for (const auto& [p, a] : factors) {
    std::uint32_t need = (a + 1) / 2;
    if (nu(p, h) < need)
      throw Error(ErrorCode::ConditionsNotMet,
                  "condition (i) fails: nu_" + std::to_string(p) + "(h) < " +
                      std::to_string(need));
  }
  if (v % 4 == 2 && nu(2, h) < 2)
    throw Error(ErrorCode::ConditionsNotMet,
                "condition (ii) fails: v = 2 mod 4 requires nu_2(h) >= 2");

  GroupSpec spec = GroupSpec::from_factors(factors);
  BHRow base = default_build(spec, h);

  BHRow out;
  out.spec = spec;
  out.h = base.h;
  out.cyclic = true;
  out.row.resize(v);
  for (std::uint64_t x = 0; x < v; ++x) {
    GroupElement z = spec.zero();
    const auto& fs = spec.g_factors();
    for (std::size_t i = 0; i < fs.size(); ++i)
      z.g_coords[i] = x % fs[i].order();
    for (std::uint32_t i = 0; i < spec.l_rank(); ++i)
      z.l_coords[i] = static_cast<std::uint8_t>(x % 2);
    out.row[x] = base.row[spec.index_of(z)];
  }
  return out;
}

} // namespace butson
