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

#include "forms.hpp"

namespace butson {

static void check_gram_shape(const BilinearForm& f, const GroupSpec& spec) {
  std::size_t s = spec.g_factors().size();
  if (f.gram.size() != s)
    throw Error(ErrorCode::Shape, "gram table size does not match G");
  for (const auto& row : f.gram)
    if (row.size() != s)
      throw Error(ErrorCode::Shape, "gram table is not square");
  if (f.e == 0) throw Error(ErrorCode::Parse, "form modulus must be positive");
}

std::uint64_t eval(const BilinearForm& f, const GroupSpec& spec,
                   const GroupElement& g, const GroupElement& h) {
  check_gram_shape(f, spec);
  spec.check_shape(g);
  spec.check_shape(h);
  std::uint64_t acc = 0;
  std::size_t s = f.gram.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (g.g_coords[i] == 0) continue;
    std::uint64_t gi = g.g_coords[i] % f.e;
    for (std::size_t j = 0; j < s; ++j) {
      std::uint64_t t = gi * (h.g_coords[j] % f.e) % f.e;
      acc = (acc + t * (f.gram[i][j] % f.e)) % f.e;
    }
  }
  return acc;
}

BilinearForm default_form(const GroupSpec& spec) {
  BilinearForm f;
  f.e = spec.g_exponent();
  std::size_t s = spec.g_factors().size();
  f.gram.assign(s, std::vector<std::uint64_t>(s, 0));
  for (std::size_t i = 0; i < s; ++i)
    f.gram[i][i] = f.e / spec.g_factors()[i].order();
  return f;
}

bool check_symmetric(const BilinearForm& f) {
  for (std::size_t i = 0; i < f.gram.size(); ++i)
    for (std::size_t j = 0; j < f.gram.size(); ++j)
      if (f.gram[i][j] % f.e != f.gram[j][i] % f.e) return false;
  return true;
}

bool check_well_defined(const BilinearForm& f, const GroupSpec& spec) {
  check_gram_shape(f, spec);
  for (std::size_t i = 0; i < f.gram.size(); ++i) {
    std::uint64_t ord = spec.g_factors()[i].order();
    for (std::size_t j = 0; j < f.gram.size(); ++j)
      if ((ord % f.e) * (f.gram[i][j] % f.e) % f.e != 0) return false;
  }
  return true;
}

static GroupElement generator(const GroupSpec& spec, std::size_t i) {
  GroupElement t = spec.zero();
  t.g_coords[i] = 1;
  return t;
}

bool check_nondegenerate(const BilinearForm& f, const GroupSpec& spec) {
  check_gram_shape(f, spec);
  std::uint64_t n = spec.g_order();
  std::size_t s = spec.g_factors().size();
  GroupSpec g_only = GroupSpec::from_factors(
      [&] {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> fs;
        for (const auto& pf : spec.g_factors()) fs.emplace_back(pf.p, pf.a);
        return fs;
      }());
  for (std::uint64_t idx = 1; idx < n; ++idx) {
    GroupElement g = spec.zero();
    g.g_coords = g_only.element_at(idx).g_coords;
    bool hit = false;
    for (std::size_t j = 0; j < s && !hit; ++j)
      if (eval(f, spec, g, generator(spec, j)) != 0) hit = true;
    if (!hit) return false;
  }
  return true;
}

bool check_U_orthogonality(const BilinearForm& f, const GroupSpec& spec,
                           const SubgroupU& u) {
  check_gram_shape(f, spec);
  std::uint64_t n = spec.g_order();
  std::size_t s = spec.g_factors().size();
  GroupSpec g_only = GroupSpec::from_factors(
      [&] {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> fs;
        for (const auto& pf : spec.g_factors()) fs.emplace_back(pf.p, pf.a);
        return fs;
      }());
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    GroupElement g = spec.zero();
    g.g_coords = g_only.element_at(idx).g_coords;
    if (u.contains(spec, g)) continue;
    bool hit = false;
    for (std::size_t j = 0; j < s && !hit; ++j) {
      GroupElement ug = generator(spec, j);
      ug.g_coords[j] = u.strides[j] % spec.g_factors()[j].order();
      if (eval(f, spec, g, ug) != 0) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

} // namespace butson
