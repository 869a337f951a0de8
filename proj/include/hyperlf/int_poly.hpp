// Copyright 2026 The hyperlf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hyperlf/bigint.hpp"

namespace hyperlf {

/// Degree reported for the zero polynomial.
inline constexpr long kMinusInfinity = std::numeric_limits<long>::min();

/// Univariate polynomial over Z, coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient sequence.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  long degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;

  IntPoly derivative() const;
  BigInt eval(const BigInt& x) const;

  std::string to_string(char var = 'x') const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Resultant via the fraction-free (Bareiss) determinant of the Sylvester matrix.
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f). Requires deg f >= 1.
BigInt discriminant(const IntPoly& f);

}  // namespace hyperlf
