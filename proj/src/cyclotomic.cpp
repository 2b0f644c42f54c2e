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

#include "cyclotomic.hpp"

#include <map>
#include <mutex>

namespace butson {

CycInt::CycInt(std::uint64_t order) : order_(order) {
  if (order == 0)
    throw Error(ErrorCode::Parse, "cyclotomic order must be positive");
  c_.assign(order, BigInt(0));
}

CycInt CycInt::root(std::uint64_t order, std::int64_t k) {
  CycInt z(order);
  z.add_root(k);
  return z;
}

CycInt CycInt::integer(std::uint64_t order, const BigInt& n) {
  CycInt z(order);
  z.c_[0] = n;
  return z;
}

void CycInt::add_root(std::int64_t k, const BigInt& weight) {
  std::int64_t m = static_cast<std::int64_t>(order_);
  std::int64_t i = ((k % m) + m) % m;
  c_[static_cast<std::size_t>(i)] += weight;
}

void CycInt::check_same_order(const CycInt& o) const {
  if (order_ != o.order_)
    throw Error(ErrorCode::Shape,
                "cyclotomic order mismatch; rescale to a common order first");
}

CycInt CycInt::operator+(const CycInt& o) const {
  check_same_order(o);
  CycInt z(order_);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] + o.c_[i];
  return z;
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_same_order(o);
  CycInt z(order_);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] - o.c_[i];
  return z;
}

CycInt CycInt::operator-() const {
  CycInt z(order_);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = -c_[i];
  return z;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_same_order(o);
  CycInt z(order_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= order_) k -= order_;
      z.c_[k] += c_[i] * o.c_[j];
    }
  }
  return z;
}

CycInt CycInt::conj() const {
  CycInt z(order_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    z.c_[(order_ - i) % order_] = c_[i];
  return z;
}

CycInt CycInt::rescale(std::uint64_t new_order) const {
  if (new_order % order_ != 0)
    throw Error(ErrorCode::Shape, "rescale target must be a multiple of order");
  std::uint64_t d = new_order / order_;
  CycInt z(new_order);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i * d] = c_[i];
  return z;
}

CycInt CycInt::norm_sq() const { return *this * conj(); }

bool CycInt::is_zero() const {
  // Divisible by Phi_M over Z iff the value is zero.
  const auto& phi = cyclotomic_poly(order_);
  std::size_t deg_phi = phi.size() - 1;
  std::vector<BigInt> rem = c_;
  // long division by the monic phi; only the remainder matters
  for (std::size_t d = rem.size(); d-- > 0;) {
    if (d < deg_phi) break;
    if (rem[d] == 0) continue;
    BigInt q = rem[d];
    std::size_t shift = d - deg_phi;
    for (std::size_t j = 0; j < phi.size(); ++j) rem[shift + j] -= q * phi[j];
  }
  for (std::size_t i = 0; i < deg_phi && i < rem.size(); ++i)
    if (rem[i] != 0) return false;
  return true;
}

bool CycInt::equals_integer(const BigInt& n) const {
  return (*this - integer(order_, n)).is_zero();
}

bool CycInt::equals(const CycInt& o) const { return (*this - o).is_zero(); }

// -------- cyclotomic polynomials --------

namespace {

// exact division of a by monic b, both constant-term-first; throws on nonzero
// remainder
std::vector<BigInt> exact_div(std::vector<BigInt> a,
                              const std::vector<BigInt>& b) {
  std::size_t deg_b = b.size() - 1;
  if (a.size() < b.size())
    throw Error(ErrorCode::Internal, "bad cyclotomic division");
  std::vector<BigInt> q(a.size() - deg_b, BigInt(0));
  for (std::size_t d = a.size(); d-- > deg_b;) {
    BigInt coef = a[d];
    if (coef == 0) continue;
    std::size_t shift = d - deg_b;
    q[shift] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= coef * b[j];
  }
  for (const auto& r : a)
    if (r != 0) throw Error(ErrorCode::Internal, "bad cyclotomic division");
  return q;
}

std::vector<BigInt> compute_phi(std::uint64_t m,
                                std::map<std::uint64_t, std::vector<BigInt>>& memo);

const std::vector<BigInt>& phi_memo(std::uint64_t m,
                                    std::map<std::uint64_t, std::vector<BigInt>>& memo) {
  auto it = memo.find(m);
  if (it == memo.end()) it = memo.emplace(m, compute_phi(m, memo)).first;
  return it->second;
}

std::vector<BigInt> compute_phi(std::uint64_t m,
                                std::map<std::uint64_t, std::vector<BigInt>>& memo) {
  // x^m - 1
  std::vector<BigInt> num(m + 1, BigInt(0));
  num[0] = -1;
  num[m] = 1;
  if (m == 1) return num; // Phi_1 = x - 1
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = exact_div(std::move(num), phi_memo(d, memo));
  }
  return num;
}

} // namespace

std::vector<BigInt> cyclotomic_poly(std::uint64_t m) {
  if (m == 0)
    throw Error(ErrorCode::Parse, "cyclotomic order must be positive");
  static std::map<std::uint64_t, std::vector<BigInt>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return phi_memo(m, memo);
}

} // namespace butson
