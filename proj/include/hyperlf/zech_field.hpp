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
#include <vector>

namespace hyperlf {

/// Table-driven F_q, q = p^n <= kMaxOrder, for point counting. An element
/// is its discrete logarithm to a fixed primitive element; zero is the
/// sentinel q - 1. Addition goes through a Zech logarithm table.
class ZechField {
 public:
  using Log = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 23;

  /// Throws InvalidArgument when p is not prime or p^n exceeds kMaxOrder.
  ZechField(std::uint64_t p, unsigned n, std::uint64_t seed = 1);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t order() const { return q_; }

  Log zero() const { return static_cast<Log>(q_ - 1); }
  Log one() const { return 0; }
  bool is_zero(Log a) const { return a == zero(); }

  /// Image of c in the prime subfield, c reduced mod p.
  Log from_prime(std::uint64_t c) const { return prime_log_[c % p_]; }
  /// The i-th nonzero element (0 <= i < q-1), i.e. the primitive element to the power i.
  Log nth_unit(std::uint64_t i) const { return static_cast<Log>(i); }

  Log mul(Log a, Log b) const {
    if (a == zero() || b == zero()) return zero();
    std::uint64_t s = std::uint64_t{a} + b;
    if (s >= q_ - 1) s -= q_ - 1;
    return static_cast<Log>(s);
  }

  Log add(Log a, Log b) const {
    if (a == zero()) return b;
    if (b == zero()) return a;
    std::uint64_t k = b >= a ? b - a : b + (q_ - 1) - a;
    const Log z = zech_[k];
    if (z == zero()) return zero();
    std::uint64_t s = std::uint64_t{a} + z;
    if (s >= q_ - 1) s -= q_ - 1;
    return static_cast<Log>(s);
  }

  Log neg(Log a) const { return mul(a, minus_one_); }
  Log sub(Log a, Log b) const { return add(a, neg(b)); }

  Log inv(Log a) const { return a == 0 ? 0 : static_cast<Log>(q_ - 1 - a); }

  /// Absolute trace to F_2 is zero; characteristic 2 only.
  bool trace_is_zero(Log a) const;

  /// Base-p digit encoding of an element in the power basis of the modulus.
  std::uint64_t encoding(Log a) const;
  /// Coefficients (ascending) of the defining modulus, monic of degree n.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

 private:
  std::uint64_t p_;
  unsigned n_;
  std::uint64_t q_;
  Log minus_one_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::vector<Log> zech_;
  std::vector<Log> prime_log_;
  std::vector<std::uint32_t> exp_;
  std::uint64_t trace_mask_ = 0;
};

}  // namespace hyperlf
