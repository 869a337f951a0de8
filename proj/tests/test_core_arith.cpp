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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperlf/bigint.hpp"
#include "hyperlf/ext_field.hpp"
#include "hyperlf/factor.hpp"
#include "hyperlf/field_ops.hpp"
#include "hyperlf/int_poly.hpp"
#include "hyperlf/prime_field.hpp"

namespace hyperlf {
namespace {

using Poly = FieldPoly<PrimeField>;
using EPoly = FieldPoly<ExtField>;

// Resultant by the Euclidean algorithm over Q; independent of the Sylvester
// determinant used in the library.
mpq_class euclid_resultant(std::vector<mpq_class> a, std::vector<mpq_class> b) {
  auto trim = [](std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  mpq_class acc = 1;
  for (;;) {
    if (a.empty() || b.empty()) return 0;
    const long m = static_cast<long>(a.size()) - 1;
    const long n = static_cast<long>(b.size()) - 1;
    if (n == 0) {
      mpq_class r = acc;
      for (long i = 0; i < m; ++i) r *= b[0];
      return r;
    }
    if (m < n) {
      if ((m * n) % 2) acc = -acc;
      std::swap(a, b);
      continue;
    }
    // Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r), r = a mod b.
    std::vector<mpq_class> r = a;
    for (long k = m; k >= n; --k) {
      mpq_class c = r[k] / b[n];
      for (long j = 0; j <= n; ++j) r[k - n + j] -= c * b[j];
    }
    r.resize(n);
    trim(r);
    if (r.empty()) return 0;
    const long dr = static_cast<long>(r.size()) - 1;
    if ((m * n) % 2) acc = -acc;
    for (long i = 0; i < m - dr; ++i) acc *= b[n];
    a = std::move(b);
    b = std::move(r);
  }
}

std::vector<mpq_class> to_q(const IntPoly& f) {
  std::vector<mpq_class> v;
  for (const auto& c : f.coeffs()) v.emplace_back(c);
  return v;
}

IntPoly combined(const IntPoly& g, const IntPoly& h) { return BigInt(4) * g + h * h; }

TEST(Discriminant, MatchesEuclideanResultantOnRandomPolynomials) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 9);
    std::vector<BigInt> c(deg + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 41) - 20;
    if (c.back() == 0) c.back() = 3;
    IntPoly f(c);
    mpq_class res = euclid_resultant(to_q(f), to_q(f.derivative()));
    mpq_class expect = res / mpq_class(f.leading());
    if ((deg * (deg - 1) / 2) % 2) expect = -expect;
    EXPECT_EQ(mpq_class(discriminant(f)), expect) << f.to_string();
  }
}

TEST(Discriminant, SeptimicExampleFactorsAsExpected) {
  IntPoly g{0, 1, 3, 1, -2, 0, -2, 1};
  IntPoly h{1, 2, 3, 3};
  BigInt expect = -int_pow(2, 12) * 3 * int_pow(5, 3) * int_pow(13, 2) * 97;
  EXPECT_EQ(discriminant(combined(g, h)), expect);
}

TEST(Discriminant, NonicExampleFactorsAsExpected) {
  IntPoly g{0, 0, 0, 1, 0, 1, 0, 1, -1, 1};
  IntPoly h{1, 0, 0, 0, -1};
  // Standard sign convention; the prime support {2, 317} is what matters downstream.
  EXPECT_EQ(discriminant(combined(g, h)), int_pow(2, 32) * 317);
}

TEST(Discriminant, RejectsConstants) { EXPECT_THROW(discriminant(IntPoly{5}), InvalidArgument); }

TEST(Integers, PrimalityAgreesWithTrialDivision) {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime_u64(n), slow(n)) << n;
  EXPECT_TRUE(is_prime(BigInt("170141183460469231731687303715884105727")));
  EXPECT_FALSE(is_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST(Integers, FactorizationReconstructs) {
  BigInt n = int_pow(2, 16) * 317 * BigInt("1000000007") * BigInt("998244353");
  auto fac = factor_integer(-n);
  BigInt prod = 1;
  for (auto& [p, e] : fac) {
    EXPECT_TRUE(is_prime(p));
    prod *= int_pow(p, e);
  }
  EXPECT_EQ(prod, n);
  EXPECT_EQ(fac.at(2), 16u);
}

Poly make_poly(const std::shared_ptr<const PrimeField>& F, std::vector<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.push_back(F->from_long(x));
  return Poly(F, std::move(v));
}

// All monic polynomials of degree d over F_p.
std::vector<Poly> monic_polys(const std::shared_ptr<const PrimeField>& F, long d) {
  const long p = F->characteristic().get_si();
  std::vector<Poly> out;
  long total = 1;
  for (long i = 0; i < d; ++i) total *= p;
  for (long idx = 0; idx < total; ++idx) {
    std::vector<long> c(d + 1);
    long t = idx;
    for (long i = 0; i < d; ++i) {
      c[i] = t % p;
      t /= p;
    }
    c[d] = 1;
    out.push_back(make_poly(F, c));
  }
  return out;
}

bool brute_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  for (long d = 1; 2 * d <= f.degree(); ++d) {
    for (const auto& g : monic_polys(f.field_ptr(), d)) {
      if ((f % g).is_zero()) return false;
    }
  }
  return true;
}

TEST(Factor, IrreducibilityAgreesWithTrialDivision) {
  for (long p : {2, 3, 5}) {
    auto F = PrimeField::make(p);
    for (long d = 1; d <= (p == 2 ? 7 : 4); ++d) {
      for (const auto& f : monic_polys(F, d)) EXPECT_EQ(is_irreducible(f), brute_irreducible(f)) << f.to_string();
    }
  }
}

TEST(Factor, RandomPolynomialsReconstruct) {
  std::mt19937_64 rng(11);
  for (long p : {2, 3, 7, 101, 65537}) {
    auto F = PrimeField::make(p);
    for (int trial = 0; trial < 25; ++trial) {
      // Build with deliberate repeated factors.
      Poly f = Poly::constant(F, F->from_long(1 + static_cast<long>(rng() % (p - 1))));
      const int parts = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < parts; ++k) {
        Poly g = factor_detail::random_poly<PrimeField>(F, 1 + static_cast<long>(rng() % 4), rng);
        if (g.degree() < 1) continue;
        const int e = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < e; ++j) f = f * g;
      }
      auto fac = factor(f);
      Poly prod = Poly::constant(F, fac.unit);
      for (auto& [q, m] : fac.factors) {
        EXPECT_EQ(q.leading(), 1);
        EXPECT_TRUE(is_irreducible(q));
        for (unsigned j = 0; j < m; ++j) prod = prod * q;
      }
      EXPECT_EQ(prod, f) << f.to_string();
    }
  }
}

TEST(Factor, PthPowersInCharacteristicTwo) {
  auto F = PrimeField::make(2);
  Poly f = make_poly(F, {1, 1, 1});  // x^2 + x + 1
  Poly x1 = make_poly(F, {1, 1});
  Poly target = f * f * f * f * x1 * x1;
  auto fac = factor(target);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0].first, x1);
  EXPECT_EQ(fac.factors[0].second, 2u);
  EXPECT_EQ(fac.factors[1].first, f);
  EXPECT_EQ(fac.factors[1].second, 4u);
}

TEST(Factor, OverExtensionField) {
  auto F2 = PrimeField::make(2);
  auto F4 = ExtField::make(F2, make_poly(F2, {1, 1, 1}));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    EPoly a = factor_detail::random_poly<ExtField>(F4, 4, rng);
    EPoly b = factor_detail::random_poly<ExtField>(F4, 3, rng);
    if (a.degree() < 1 || b.degree() < 1) continue;
    EPoly f = a * b * b;
    auto fac = factor(f, 99);
    EPoly prod = EPoly::constant(F4, fac.unit);
    for (auto& [q, m] : fac.factors) {
      EXPECT_TRUE(is_irreducible(q));
      for (unsigned j = 0; j < m; ++j) prod = prod * q;
    }
    EXPECT_EQ(prod, f);
  }
}

TEST(Gcd, BezoutIdentityHolds) {
  auto F = PrimeField::make(13);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Poly a = factor_detail::random_poly<PrimeField>(F, 7, rng);
    Poly b = factor_detail::random_poly<PrimeField>(F, 5, rng);
    if (a.is_zero() && b.is_zero()) continue;
    auto e = xgcd(a, b);
    EXPECT_EQ(e.s * a + e.t * b, e.gcd);
    EXPECT_EQ(e.gcd, gcd(a, b));
    if (!a.is_zero()) EXPECT_TRUE((a % e.gcd).is_zero());
  }
  EXPECT_THROW(gcd(Poly(F), Poly(F)), InvalidArgument);
}

TEST(ExtField, FieldAxiomsOnRandomElements) {
  auto F3 = PrimeField::make(3);
  auto F = ExtField::random(F3, 5, 17);
  EXPECT_EQ(F->order(), 243);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = F->random(rng);
    auto b = F->random(rng);
    EXPECT_EQ(F->mul(a, b), F->mul(b, a));
    if (!F->is_zero(a)) {
      EXPECT_EQ(F->mul(a, F->inv(a)), F->one());
      EXPECT_EQ(F->pow(a, F->order() - 1), F->one());
    }
    EXPECT_EQ(F->pth_root(F->frobenius(a)), a);
    // Frobenius is additive.
    EXPECT_EQ(F->frobenius(F->add(a, b)), F->add(F->frobenius(a), F->frobenius(b)));
  }
  EXPECT_THROW(F->inv(F->zero()), InvalidArgument);
  EXPECT_THROW(ExtField::make(F3, make_poly(F3, {2, 0, 1})), InvalidArgument);  // x^2 - 1
}

TEST(FieldOps, IsSquareMatchesEnumeration) {
  for (long p : {3, 5, 7, 11, 13}) {
    auto F = PrimeField::make(p);
    std::set<BigInt> squares;
    for (long x = 1; x < p; ++x) squares.insert(F->mul(F->from_long(x), F->from_long(x)));
    for (long a = 1; a < p; ++a) EXPECT_EQ(is_square(*F, F->from_long(a)), squares.count(F->from_long(a)) > 0);
  }
  auto F3 = PrimeField::make(3);
  auto F9 = ExtField::random(F3, 2, 4);
  std::vector<ExtField::Element> all;
  for (long a = 0; a < 3; ++a) {
    for (long b = 0; b < 3; ++b) all.push_back(F9->from_poly(make_poly(F3, {a, b})));
  }
  for (const auto& a : all) {
    if (F9->is_zero(a)) continue;
    bool found = false;
    for (const auto& y : all) found = found || F9->mul(y, y) == a;
    EXPECT_EQ(is_square(*F9, a), found);
  }
  EXPECT_THROW(is_square(*F3, F3->zero()), InvalidArgument);
}

TEST(FieldOps, QuadSolutionsMatchesEnumerationOverF8) {
  auto F2 = PrimeField::make(2);
  auto F8 = ExtField::make(F2, make_poly(F2, {1, 1, 0, 1}));
  std::vector<ExtField::Element> all;
  for (long i = 0; i < 8; ++i) all.push_back(F8->from_poly(make_poly(F2, {i & 1, (i >> 1) & 1, (i >> 2) & 1})));
  for (const auto& h0 : all) {
    for (const auto& g0 : all) {
      unsigned count = 0;
      for (const auto& y : all) count += F8->add(F8->mul(y, y), F8->mul(h0, y)) == g0;
      EXPECT_EQ(quad_solutions(*F8, h0, g0), count);
    }
  }
  for (long h0 = 0; h0 < 2; ++h0) {
    for (long g0 = 0; g0 < 2; ++g0) {
      unsigned count = 0;
      for (long y = 0; y < 2; ++y) count += ((y * y + h0 * y) % 2) == g0;
      EXPECT_EQ(quad_solutions(*F2, F2->from_long(h0), F2->from_long(g0)), count);
    }
  }
}

TEST(FieldOps, SqrtModSquaresBack) {
  auto F2 = PrimeField::make(2);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    Poly r = factor_detail::random_poly<PrimeField>(F2, 2 + static_cast<long>(rng() % 8), rng);
    if (r.degree() < 1 || gcd(r, r.derivative()).degree() > 0) continue;
    Poly g = factor_detail::random_poly<PrimeField>(F2, 12, rng);
    Poly s = sqrt_mod(g, r);
    EXPECT_LT(s.degree(), r.degree());
    EXPECT_EQ(mulmod(s, s, r), g % r);
  }
  Poly sq = make_poly(F2, {1, 0, 1});  // (x+1)^2
  EXPECT_THROW(sqrt_mod(make_poly(F2, {1, 1}), sq), InvalidArgument);
}


// Every element of F = base[a]/(m), from the base-p digits of 0..q-1.
std::vector<ExtField::Element> all_elements(const ExtField& F) {
  const long p = F.characteristic().get_si();
  const long q = F.order().get_si();
  std::vector<ExtField::Element> out;
  for (long i = 0; i < q; ++i) {
    std::vector<long> digits;
    for (long v = i, k = 0; k < static_cast<long>(F.degree()); ++k, v /= p) digits.push_back(v % p);
    out.push_back(F.from_poly(make_poly(F.base_ptr(), digits)));
  }
  return out;
}

TEST(Factor, ThousandSmallPolynomialsReconstruct) {
  std::mt19937_64 rng(1000);
  const long primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 1200; ++trial) {
    const long p = primes[rng() % 4];
    auto F = PrimeField::make(p);
    const long deg = 1 + static_cast<long>(rng() % 8);
    std::vector<long> c(deg + 1);
    for (auto& x : c) x = static_cast<long>(rng() % p);
    c.back() = 1 + static_cast<long>(rng() % (p - 1));
    const Poly f = make_poly(F, c);
    const auto fac = factor(f);
    Poly prod = Poly::constant(F, fac.unit);
    for (const auto& [q, m] : fac.factors) {
      EXPECT_TRUE(is_irreducible(q));
      for (unsigned j = 0; j < m; ++j) prod = prod * q;
    }
    ASSERT_EQ(prod, f) << "p=" << p << " f=" << f.to_string();
  }
}

TEST(ExtField, FrobeniusFixesEveryElementUpToOrder1024) {
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    auto Fp = PrimeField::make(p);
    long q = p;
    for (unsigned d = 2; q * p <= 1024; ++d) {
      q *= p;
      const auto F = ExtField::random(Fp, d, 7 + d);
      for (const auto& a : all_elements(*F)) {
        ASSERT_EQ(F->pow(a, F->order()), a) << "q=" << q;
        auto b = a;
        for (unsigned k = 0; k < d; ++k) b = F->frobenius(b);
        ASSERT_EQ(b, a) << "q=" << q;
      }
    }
  }
}

TEST(FieldOps, IsSquareMatchesEnumerationForEveryFieldUpTo121) {
  for (long p = 2; p <= 113; ++p) {
    if (!is_prime(BigInt(p))) continue;
    auto F = PrimeField::make(p);
    std::set<BigInt> squares;
    for (long x = 1; x < p; ++x) squares.insert(F->mul(F->from_long(x), F->from_long(x)));
    for (long a = 1; a < p; ++a) {
      EXPECT_EQ(is_square(*F, F->from_long(a)), squares.count(F->from_long(a)) > 0) << p << " " << a;
    }
  }
  for (auto [p, d] : std::vector<std::pair<long, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3},
                                                            {3, 4}, {5, 2}, {7, 2}, {11, 2}}) {
    const auto F = ExtField::random(PrimeField::make(p), d, 3);
    const auto all = all_elements(*F);
    std::set<std::vector<BigInt>> squares;
    for (const auto& y : all) {
      if (!F->is_zero(y)) squares.insert(F->mul(y, y).c);
    }
    for (const auto& a : all) {
      if (F->is_zero(a)) continue;
      EXPECT_EQ(is_square(*F, a), squares.count(a.c) > 0) << "q=" << F->order().get_str() << " a=" << F->to_string(a);
    }
  }
}

}  // namespace
}  // namespace hyperlf
