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

// Random smooth models over small primes and their point counts by
// enumeration, shared by the counting tests and the acceptance binary.

#pragma once

#include <map>
#include <memory>
#include <random>
#include <vector>

#include "brute_field.hpp"
#include "hyperlf/zeta.hpp"

namespace hyperlf::oracle {

inline FPoly poly_mod(std::uint64_t p, const std::vector<std::int64_t>& c) {
  auto F = PrimeField::make(from_u64(p));
  std::vector<BigInt> v;
  for (auto x : c) v.push_back(F->from_long(x));
  return FPoly(F, std::move(v));
}

inline const oracle::BruteField& brute(std::uint64_t p, unsigned n) {
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<oracle::BruteField>> cache;
  auto& slot = cache[{p, n}];
  if (!slot) slot = std::make_unique<oracle::BruteField>(p, n);
  return *slot;
}

struct RandomModel {
  CurveModel model;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
};

// A random smooth model over a small prime.
inline RandomModel random_model(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  for (;;) {
    const std::uint64_t p = primes[rng() % 6];
    const int kind = static_cast<int>(rng() % 3);
    auto coeffs = [&](std::size_t n) {
      std::vector<std::int64_t> c(n);
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % p);
      return c;
    };
    if (p == 2) {
      const int genus = 1 + static_cast<int>(rng() % 3);
      auto g = coeffs(2 * genus + 2);
      auto h = coeffs(genus + 1);
      g.back() = 1;
      const FPoly hb = poly_mod(2, h), gb = poly_mod(2, g);
      if (hb.is_zero()) continue;
      const FPoly hd = hb.derivative(), gd = gb.derivative();
      if (gcd(hb, hd * hd * gb + gd * gd).degree() != 0) continue;  // affine part smooth
      return {CurveModel::char2(hb, gb), h, g};
    }
    if (kind == 2 && p % 3 != 0) {
      const long deg = (rng() % 2) ? 4 : 5;
      auto f = coeffs(deg + 1);
      f.back() = 1 + static_cast<std::int64_t>(rng() % (p - 1));
      const FPoly fb = poly_mod(p, f);
      if (gcd(fb, fb.derivative()).degree() != 0) continue;
      return {CurveModel::superelliptic(3, fb), f, {}};
    }
    const long deg = 3 + static_cast<long>(rng() % 5);  // degrees 3..7, even ones included
    auto f = coeffs(deg + 1);
    f.back() = 1 + static_cast<std::int64_t>(rng() % (p - 1));
    const FPoly fb = poly_mod(p, f);
    if (gcd(fb, fb.derivative()).degree() != 0) continue;
    return {CurveModel::odd_square(fb), f, {}};
  }
}

inline std::uint64_t oracle_count(const RandomModel& rm, unsigned n) {
  const auto& F = brute(rm.model.p(), n);
  switch (rm.model.kind) {
    case CurveModel::Kind::kOddSquare:
      return oracle::count_square(F, rm.a);
    case CurveModel::Kind::kChar2:
      return oracle::count_artin_schreier(F, rm.a, rm.b);
    case CurveModel::Kind::kSuperelliptic:
      return oracle::count_power(F, rm.model.m, rm.a);
  }
  return 0;
}

}  // namespace hyperlf::oracle
