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

#include "hyperlf/ext_field.hpp"

#include <sstream>

#include "hyperlf/errors.hpp"
#include "hyperlf/factor.hpp"

namespace hyperlf {

ExtField::ExtField(std::shared_ptr<const PrimeField> base, BasePoly modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1 || modulus_.leading() != 1) {
    throw InvalidArgument("extension modulus must be monic of degree >= 1");
  }
  if (!is_irreducible(modulus_)) throw InvalidArgument("extension modulus " + modulus_.to_string() + " is reducible");
  d_ = static_cast<unsigned>(modulus_.degree());
  order_ = int_pow(base_->characteristic(), d_);
}

std::shared_ptr<const ExtField> ExtField::make(std::shared_ptr<const PrimeField> base, BasePoly modulus) {
  return std::make_shared<const ExtField>(std::move(base), std::move(modulus));
}

std::shared_ptr<const ExtField> ExtField::random(std::shared_ptr<const PrimeField> base, unsigned d,
                                                 std::uint64_t seed) {
  if (d == 0) throw InvalidArgument("extension degree must be positive");
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<BigInt> c(d + 1);
    for (unsigned i = 0; i < d; ++i) c[i] = base->random(rng);
    c[d] = 1;
    BasePoly m(base, std::move(c));
    if (is_irreducible(m)) return make(base, std::move(m));
  }
}

ExtField::Element ExtField::zero() const { return Element{std::vector<BigInt>(d_)}; }

ExtField::Element ExtField::one() const {
  Element e = zero();
  e.c[0] = 1;
  return e;
}

ExtField::Element ExtField::generator() const {
  if (d_ == 1) return from_int(base_->neg(modulus_.coeff(0)));
  Element e = zero();
  e.c[1] = 1;
  return e;
}

ExtField::Element ExtField::from_int(const BigInt& v) const {
  Element e = zero();
  e.c[0] = base_->from_int(v);
  return e;
}

ExtField::Element ExtField::from_poly(const BasePoly& f) const {
  BasePoly r = f % modulus_;
  Element e = zero();
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.c[i] = r.coeffs()[i];
  return e;
}

ExtField::BasePoly ExtField::to_poly(const Element& a) const { return BasePoly(base_, a.c); }

ExtField::Element ExtField::add(const Element& a, const Element& b) const {
  Element e = zero();
  for (unsigned i = 0; i < d_; ++i) e.c[i] = base_->add(a.c[i], b.c[i]);
  return e;
}

ExtField::Element ExtField::sub(const Element& a, const Element& b) const {
  Element e = zero();
  for (unsigned i = 0; i < d_; ++i) e.c[i] = base_->sub(a.c[i], b.c[i]);
  return e;
}

ExtField::Element ExtField::neg(const Element& a) const {
  Element e = zero();
  for (unsigned i = 0; i < d_; ++i) e.c[i] = base_->neg(a.c[i]);
  return e;
}

ExtField::Element ExtField::mul(const Element& a, const Element& b) const {
  std::vector<BigInt> r(2 * d_ - 1);
  for (unsigned i = 0; i < d_; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < d_; ++j) r[i + j] = base_->add(r[i + j], base_->mul(a.c[i], b.c[j]));
  }
  for (std::size_t k = r.size(); k-- > d_;) {
    if (r[k] == 0) continue;
    const BigInt c = r[k];
    for (unsigned j = 0; j < d_; ++j) r[k - d_ + j] = base_->sub(r[k - d_ + j], base_->mul(c, modulus_.coeff(j)));
    r[k] = 0;
  }
  r.resize(d_);
  return Element{std::move(r)};
}

ExtField::Element ExtField::inv(const Element& a) const {
  if (is_zero(a)) throw InvalidArgument("inverse of zero in F_" + order_.get_str());
  return from_poly(inverse_mod(to_poly(a), modulus_));
}

ExtField::Element ExtField::pow(const Element& a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), BigInt(-e));
  Element result = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

ExtField::Element ExtField::frobenius(const Element& a) const { return pow(a, base_->characteristic()); }

ExtField::Element ExtField::pth_root(const Element& a) const {
  return pow(a, int_pow(base_->characteristic(), d_ - 1));
}

bool ExtField::is_zero(const Element& a) const {
  for (const auto& c : a.c) {
    if (c != 0) return false;
  }
  return true;
}

ExtField::Element ExtField::random(std::mt19937_64& rng) const {
  Element e = zero();
  for (unsigned i = 0; i < d_; ++i) e.c[i] = base_->random(rng);
  return e;
}

std::string ExtField::to_string(const Element& a) const {
  std::ostringstream out;
  out << "[";
  for (unsigned i = 0; i < d_; ++i) out << (i ? "," : "") << a.c[i].get_str();
  out << "]";
  return out.str();
}

}  // namespace hyperlf
