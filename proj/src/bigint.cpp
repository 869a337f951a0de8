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

#include "hyperlf/bigint.hpp"

#include <array>
#include <vector>

#include "hyperlf/errors.hpp"

namespace hyperlf {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InvalidArgument("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidArgument("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

bool fits_u64(const BigInt& value) {
  static_assert(sizeof(unsigned long) == 8);
  return value >= 0 && mpz_fits_ulong_p(value.get_mpz_t());
}

std::uint64_t to_u64(const BigInt& value) {
  if (!fits_u64(value)) throw InvalidArgument("integer " + to_string(value) + " exceeds 64 bits");
  return mpz_get_ui(value.get_mpz_t());
}

BigInt from_u64(std::uint64_t value) { return BigInt(static_cast<unsigned long>(value)); }

BigInt int_pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr std::array<std::uint64_t, 12> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (auto p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

namespace {

BigInt pollard_brent(const BigInt& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  BigInt y = seed % n, c = (seed * 7 + 3) % n, m = 128;
  BigInt g = 1, r = 1, q = 1, x, ys;
  auto step = [&](const BigInt& v) {
    BigInt w = v * v + c;
    return BigInt(w % n);
  };
  while (g == 1) {
    x = y;
    for (BigInt i = 0; i < r; ++i) y = step(y);
    BigInt k = 0;
    while (k < r && g == 1) {
      ys = y;
      BigInt lim = (m < r - k) ? m : BigInt(r - k);
      for (BigInt i = 0; i < lim; ++i) {
        y = step(y);
        BigInt diff = x - y;
        q = (q * abs(diff)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      BigInt diff = x - ys;
      diff = abs(diff);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = n;
  for (unsigned long seed = 2; d == n || d == 1; ++seed) d = pollard_brent(n, seed);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

std::map<BigInt, unsigned> factor_integer(const BigInt& n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  std::map<BigInt, unsigned> out;
  BigInt m = abs(n);
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (m < BigInt(p) * p) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[BigInt(p)];
      m /= p;
    }
  }
  if (m > 1) factor_into(m, out);
  return out;
}

}  // namespace hyperlf
