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

#include "hyperlf/prime_field.hpp"

#include "hyperlf/errors.hpp"

namespace hyperlf {

PrimeField::PrimeField(BigInt p) : p_(std::move(p)) {
  if (!is_prime(p_)) throw InvalidArgument("field characteristic " + p_.get_str() + " is not prime");
  word_sized_ = p_ < (BigInt(1) << 62);
  if (word_sized_) p64_ = to_u64(p_);
}

std::shared_ptr<const PrimeField> PrimeField::make(const BigInt& p) {
  return std::make_shared<const PrimeField>(p);
}

PrimeField::Element PrimeField::from_int(const BigInt& v) const {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
  return r;
}

PrimeField::Element PrimeField::add(const Element& a, const Element& b) const {
  BigInt r = a + b;
  if (r >= p_) r -= p_;
  return r;
}

PrimeField::Element PrimeField::sub(const Element& a, const Element& b) const {
  BigInt r = a - b;
  if (r < 0) r += p_;
  return r;
}

PrimeField::Element PrimeField::neg(const Element& a) const { return a == 0 ? BigInt(0) : BigInt(p_ - a); }

PrimeField::Element PrimeField::mul(const Element& a, const Element& b) const {
  if (word_sized_) {
    using u128 = unsigned __int128;
    const auto prod = static_cast<u128>(mpz_get_ui(a.get_mpz_t())) * mpz_get_ui(b.get_mpz_t());
    return BigInt(static_cast<unsigned long>(prod % p64_));
  }
  BigInt r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
  return r;
}

PrimeField::Element PrimeField::inv(const Element& a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in F_" + p_.get_str());
  BigInt r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
  return r;
}

PrimeField::Element PrimeField::pow(const Element& a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), BigInt(-e));
  BigInt r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
  return r;
}

PrimeField::Element PrimeField::random(std::mt19937_64& rng) const {
  if (word_sized_) return BigInt(static_cast<unsigned long>(rng() % p64_));
  BigInt r = 0;
  for (std::size_t bits = 0; bits < mpz_sizeinbase(p_.get_mpz_t(), 2) + 64; bits += 64) {
    r <<= 64;
    r += BigInt(static_cast<unsigned long>(rng()));
  }
  return from_int(r);
}

}  // namespace hyperlf
