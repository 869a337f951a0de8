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

#include "hyperlf/bigint.hpp"

namespace hyperlf {

/// The prime field F_p. Elements are residues in [0, p). Products use
/// 128-bit machine arithmetic while p < 2^62 and GMP above.
class PrimeField {
 public:
  using Element = BigInt;

  /// Throws InvalidArgument unless p is prime.
  explicit PrimeField(BigInt p);
  static std::shared_ptr<const PrimeField> make(const BigInt& p);

  const BigInt& characteristic() const { return p_; }
  BigInt order() const { return p_; }
  unsigned degree() const { return 1; }
  bool word_sized() const { return word_sized_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(const BigInt& v) const;
  Element from_long(long v) const { return from_int(BigInt(v)); }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element pow(const Element& a, const BigInt& e) const;
  Element pth_root(const Element& a) const { return a; }
  Element frobenius(const Element& a) const { return a; }
  bool is_zero(const Element& a) const { return a == 0; }

  Element random(std::mt19937_64& rng) const;
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  BigInt p_;
  std::uint64_t p64_ = 0;
  bool word_sized_ = false;
};

}  // namespace hyperlf
