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

// Exact arithmetic in Z[zeta_M]. Elements are integer coefficient vectors of
// length M (value = sum c_i zeta_M^i). The representation is non-canonical;
// zero testing divides the coefficient polynomial by the M-th cyclotomic
// polynomial, which is the exact criterion for a vanishing sum of M-th roots
// of unity.

#ifndef BUTSON_CYCLOTOMIC_HPP
#define BUTSON_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace butson {

using BigInt = boost::multiprecision::cpp_int;

class CycInt {
public:
  explicit CycInt(std::uint64_t order);

  static CycInt root(std::uint64_t order, std::int64_t k); // zeta_order^k
  static CycInt integer(std::uint64_t order, const BigInt& n);

  std::uint64_t order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  void add_root(std::int64_t k, const BigInt& weight = 1);

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const; // cyclic convolution
  CycInt operator-() const;

  CycInt conj() const;             // negate indices mod M
  CycInt rescale(std::uint64_t new_order) const; // index dilation, M | M'
  CycInt norm_sq() const;          // z * conj(z)

  bool is_zero() const;
  bool equals_integer(const BigInt& n) const;
  bool equals(const CycInt& o) const;

private:
  void check_same_order(const CycInt& o) const;

  std::uint64_t order_;
  std::vector<BigInt> c_;
};

// Coefficients of the M-th cyclotomic polynomial, constant term first.
// Computed by exact division of x^M - 1 by the proper-divisor product.
std::vector<BigInt> cyclotomic_poly(std::uint64_t m);

} // namespace butson

#endif
