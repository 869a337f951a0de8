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

#include "hyperlf/zech_field.hpp"

#include <bit>
#include <random>

#include "hyperlf/errors.hpp"
#include "hyperlf/factor.hpp"
#include "hyperlf/prime_field.hpp"

namespace hyperlf {

namespace {

using Poly = FieldPoly<PrimeField>;

bool x_is_primitive(const Poly& m, const BigInt& q) {
  const Poly x = Poly::x(m.field_ptr());
  const BigInt order = q - 1;
  if (order == 1) return !(x % m).is_zero();
  for (const auto& [ell, e] : factor_integer(order)) {
    if (powmod(x, BigInt(order / ell), m).is_one()) return false;
  }
  return true;
}

std::vector<std::uint64_t> primitive_modulus(std::uint64_t p, unsigned n, std::uint64_t seed) {
  auto F = PrimeField::make(from_u64(p));
  const BigInt q = int_pow(from_u64(p), n);
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<BigInt> c(n + 1);
    for (unsigned i = 0; i < n; ++i) c[i] = BigInt(static_cast<unsigned long>(rng() % p));
    c[n] = 1;
    if (c[0] == 0) continue;
    Poly m(F, c);
    if (!is_irreducible(m) || !x_is_primitive(m, q)) continue;
    std::vector<std::uint64_t> out(n + 1);
    for (unsigned i = 0; i <= n; ++i) out[i] = to_u64(c[i]);
    return out;
  }
}

}  // namespace

ZechField::ZechField(std::uint64_t p, unsigned n, std::uint64_t seed) : p_(p), n_(n) {
  if (!is_prime_u64(p)) throw InvalidArgument("table field characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw InvalidArgument("table field degree must be positive");
  q_ = 1;
  for (unsigned i = 0; i < n; ++i) {
    q_ *= p;
    if (q_ > kMaxOrder) {
      throw InvalidArgument("field of order " + std::to_string(p) + "^" + std::to_string(n) +
                            " exceeds the counting table limit");
    }
  }
  modulus_ = primitive_modulus(p, n, seed);

  const Log zero_log = zero();
  std::vector<Log> log(q_, zero_log);
  exp_.assign(q_ - 1, 0);
  std::vector<std::uint64_t> digits(n, 0);
  digits[0] = 1;
  std::vector<std::uint64_t> pow_p(n, 1);
  for (unsigned i = 1; i < n; ++i) pow_p[i] = pow_p[i - 1] * p;
  for (std::uint64_t k = 0; k + 1 < q_; ++k) {
    std::uint64_t enc = 0;
    for (unsigned i = 0; i < n; ++i) enc += digits[i] * pow_p[i];
    exp_[k] = static_cast<std::uint32_t>(enc);
    log[enc] = static_cast<Log>(k);
    // Multiply by x and reduce with the monic modulus.
    const std::uint64_t top = digits[n - 1];
    for (unsigned i = n; i-- > 1;) digits[i] = (digits[i - 1] + (p - top) * modulus_[i] % p) % p;
    digits[0] = (p - top) * modulus_[0] % p;
  }

  zech_.assign(q_ - 1, zero_log);
  for (std::uint64_t k = 0; k + 1 < q_; ++k) {
    const std::uint64_t enc = exp_[k];
    const std::uint64_t d0 = enc % p;
    const std::uint64_t plus_one = d0 == p - 1 ? enc - (p - 1) : enc + 1;
    zech_[k] = log[plus_one];
  }
  prime_log_.resize(p);
  for (std::uint64_t c = 0; c < p; ++c) prime_log_[c] = log[c];
  minus_one_ = log[p - 1];

  if (p == 2) {
    // Tr(x^i) for the basis elements, then Tr is the parity of enc & mask.
    for (unsigned i = 0; i < n; ++i) {
      const Log base = log[std::uint64_t{1} << i];
      Log acc = zero_log;
      std::uint64_t e = base;
      for (unsigned j = 0; j < n; ++j) {
        acc = add(acc, static_cast<Log>(e % (q_ - 1)));
        e = (e * 2) % (q_ - 1);
      }
      if (acc == one()) trace_mask_ |= std::uint64_t{1} << i;
    }
  }
}

bool ZechField::trace_is_zero(Log a) const {
  if (p_ != 2) throw InvalidArgument("trace_is_zero requires characteristic 2");
  if (a == zero()) return true;
  return (std::popcount(exp_[a] & trace_mask_) & 1) == 0;
}

std::uint64_t ZechField::encoding(Log a) const { return a == zero() ? 0 : exp_[a]; }

}  // namespace hyperlf
