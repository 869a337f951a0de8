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

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hyperlf/field_poly.hpp"
#include "hyperlf/prime_field.hpp"

namespace hyperlf {

/// F_{p^d} = F_p[a]/(m(a)) for a monic irreducible modulus m of degree d.
/// Elements are coefficient vectors of length d in the power basis.
class ExtField {
 public:
  struct Element {
    std::vector<BigInt> c;
    friend bool operator==(const Element& a, const Element& b) { return a.c == b.c; }
  };
  using BasePoly = FieldPoly<PrimeField>;

  /// Throws InvalidArgument unless the modulus is monic and irreducible.
  ExtField(std::shared_ptr<const PrimeField> base, BasePoly modulus);
  static std::shared_ptr<const ExtField> make(std::shared_ptr<const PrimeField> base, BasePoly modulus);
  /// Field of degree d over the base, modulus chosen by seeded random search.
  static std::shared_ptr<const ExtField> random(std::shared_ptr<const PrimeField> base, unsigned d,
                                                std::uint64_t seed = 1);

  const PrimeField& base() const { return *base_; }
  const std::shared_ptr<const PrimeField>& base_ptr() const { return base_; }
  const BasePoly& modulus() const { return modulus_; }
  const BigInt& characteristic() const { return base_->characteristic(); }
  const BigInt& order() const { return order_; }
  unsigned degree() const { return d_; }

  Element zero() const;
  Element one() const;
  /// Class of the polynomial variable.
  Element generator() const;
  Element from_int(const BigInt& v) const;
  Element from_long(long v) const { return from_int(BigInt(v)); }
  Element embed(const BigInt& base_elt) const { return from_int(base_elt); }
  Element from_poly(const BasePoly& f) const;
  BasePoly to_poly(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element pow(const Element& a, const BigInt& e) const;
  Element frobenius(const Element& a) const;
  Element pth_root(const Element& a) const;
  bool is_zero(const Element& a) const;

  Element random(std::mt19937_64& rng) const;
  std::string to_string(const Element& a) const;

 private:
  std::shared_ptr<const PrimeField> base_;
  BasePoly modulus_;
  unsigned d_;
  BigInt order_;
};

}  // namespace hyperlf
