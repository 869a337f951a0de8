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

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace hyperlf {

using BigInt = mpz_class;

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& value);

bool fits_u64(const BigInt& value);
std::uint64_t to_u64(const BigInt& value);
BigInt from_u64(std::uint64_t value);

BigInt int_pow(const BigInt& base, unsigned long exponent);

/// Deterministic Miller-Rabin below 2^64; above that, 64 rounds of a
/// probabilistic test.
bool is_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

/// Prime factorization of |n| (n != 0). Trial division for small factors,
/// then Pollard-Brent rho.
std::map<BigInt, unsigned> factor_integer(const BigInt& n);

}  // namespace hyperlf
