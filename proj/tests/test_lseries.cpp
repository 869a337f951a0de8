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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>

#include "fixtures_data.hpp"
#include "hyperlf/errors.hpp"
#include "hyperlf/lseries.hpp"

namespace hyperlf {
namespace {

std::vector<BadPrimeReport> reports_for(const CurveSpec& curve, const std::vector<long>& primes) {
  std::vector<BadPrimeReport> out;
  for (long p : primes) out.push_back(p == 2 ? analyze_p2(curve) : analyze_podd(curve, BigInt(p)));
  return out;
}

// Local factors of the genus-2 five-prime curve for all p <= M.
std::map<BigInt, LocalFactorInv> genus2_factors(std::uint64_t M) {
  const auto pc = testdata::genus2_five_primes();
  CurveSpec curve(pc.g, pc.h);
  std::map<BigInt, LocalFactorInv> out;
  for (auto p : primes_up_to(M)) {
    const BigInt P = from_u64(p);
    if (pc.exponents.count(static_cast<long>(p))) {
      out[P] = bad_local_factor(p == 2 ? analyze_p2(curve) : analyze_podd(curve, P), M);
    } else {
      out[P] = good_local_factor(curve, P, M);
    }
  }
  return out;
}

// Trivial factors everywhere except the given primes.
std::map<BigInt, LocalFactorInv> sparse_factors(std::uint64_t M, const std::map<long, std::vector<BigInt>>& given) {
  std::map<BigInt, LocalFactorInv> out;
  for (auto p : primes_up_to(M)) {
    LocalFactorInv lf;
    lf.p = from_u64(p);
    lf.coeffs = {BigInt(1)};
    auto it = given.find(static_cast<long>(p));
    if (it != given.end()) lf.coeffs = it->second;
    out[lf.p] = lf;
  }
  return out;
}

TEST(Conductor, PrintedConductorsFromComputedData) {
  const auto pc = testdata::genus2_five_primes();
  CurveSpec curve(pc.g, pc.h);
  const auto bad = bad_prime_candidates(curve);
  EXPECT_EQ(conductor(bad, reports_for(curve, {2, 3, 7, 101, 163}), {}), testdata::product({}).front() * 4 * 3 * 7 * 101 * 163);
  EXPECT_EQ(conductor({}, {}, {}), 1);
}

TEST(Conductor, OverrideSuppliesTheExponent) {
  const auto pc = testdata::genus4_override_at_2();
  CurveSpec curve(pc.g, pc.h);
  const auto bad = bad_prime_candidates(curve);
  LocalFactorInv over;
  over.p = 2;
  over.coeffs = pc.factors.at(2);
  over.f_p = 16;
  const auto reports = reports_for(curve, {317});
  EXPECT_EQ(conductor(bad, reports, {{BigInt(2), over}}), int_pow(2, 16) * 317);
  // Missing source, duplicate source, and an override for a good prime.
  EXPECT_THROW(conductor(bad, reports, {}), ConfigurationError);
  auto twice = reports;
  twice.push_back(reports.front());
  EXPECT_THROW(conductor(bad, twice, {{BigInt(2), over}}), ConfigurationError);
  LocalFactorInv stray = over;
  stray.p = 3;
  EXPECT_THROW(conductor(bad, reports, {{BigInt(2), over}, {BigInt(3), stray}}), ConfigurationError);
}

TEST(Dirichlet, GeometricSeriesAtTwoAndThree) {
  // 1/(1+T^2) = 1 - T^2 + T^4 - ...; 1/(1 + 2T^2 + 3T^3) = 1 - 2T^2 - 3T^3 + ...
  const std::uint64_t M = 100;
  const auto factors = sparse_factors(M, {{2, testdata::product({{1, 0, 1}})}, {3, testdata::product({{1, 1}, {1, -1, 3}})}});
  EXPECT_EQ(factors.at(BigInt(3)).coeffs, (std::vector<BigInt>{1, 0, 2, 3}));
  const auto a = dirichlet_coefficients(factors, M);
  EXPECT_EQ(a[1], 1);
  EXPECT_EQ(a[2], 0);
  EXPECT_EQ(a[4], -1);
  EXPECT_EQ(a[8], 0);
  EXPECT_EQ(a[16], 1);
  EXPECT_EQ(a[3], 0);
  EXPECT_EQ(a[9], -2);
  EXPECT_EQ(a[27], -3);
  EXPECT_EQ(a[36], 2);
  EXPECT_EQ(a[5], 0);
}

TEST(Dirichlet, MatchesDirectEulerProductExpansion) {
  const std::uint64_t M = 600;
  const auto factors = genus2_factors(M);
  const auto a = dirichlet_coefficients(factors, M);
  // Oracle: multiply the Dirichlet series sum_k b_{p,k} p^{-ks} prime by prime.
  std::vector<BigInt> acc(M + 1, 0);
  acc[1] = 1;
  for (const auto& [P, lf] : factors) {
    const std::uint64_t p = to_u64(P);
    std::vector<BigInt> b{1};
    const int deg = static_cast<int>(lf.coeffs.size()) - 1;
    for (std::uint64_t pk = p; pk <= M; pk *= p) {
      const int k = static_cast<int>(b.size());
      BigInt s = 0;
      for (int i = 1; i <= std::min(k, deg); ++i) s -= lf.coeffs[i] * b[k - i];
      b.push_back(s);
    }
    std::vector<BigInt> next(M + 1, 0);
    for (std::uint64_t n = 1; n <= M; ++n) {
      if (acc[n] == 0) continue;
      std::uint64_t pk = 1;
      for (std::size_t k = 0; k < b.size() && n * pk <= M; ++k, pk *= p) next[n * pk] += acc[n] * b[k];
    }
    acc = std::move(next);
  }
  for (std::uint64_t n = 1; n <= M; ++n) EXPECT_EQ(a[n], acc[n]) << "n=" << n;
}

TEST(Dirichlet, MultiplicativityRecurrencesAndWeilBound) {
  const std::uint64_t M = 5000;
  const auto factors = genus2_factors(M);
  const auto a = dirichlet_coefficients(factors, M);
  const int g = 2;
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 1000) {
    const std::uint64_t m = 1 + rng() % 200, n = 1 + rng() % 200;
    if (std::gcd(m, n) != 1 || m * n > M) continue;
    EXPECT_EQ(a[m * n], a[m] * a[n]) << m << "*" << n;
    ++checked;
  }
  const auto pc = testdata::genus2_five_primes();
  CurveSpec curve(pc.g, pc.h);
  for (auto p : primes_up_to(50)) {
    // Recurrence on the prime-power series with untruncated factors ...
    const BigInt P = from_u64(p);
    const auto full = pc.exponents.count(static_cast<long>(p))
                          ? bad_local_factor(p == 2 ? analyze_p2(curve) : analyze_podd(curve, P), std::nullopt)
                          : good_local_factor(curve, P, std::nullopt);
    ASSERT_TRUE(full.complete());
    const auto b = inverse_series(full.coeffs, std::max(6, truncation_degree(P, M)));
    for (int k = 0; k <= 5; ++k) {
      BigInt rhs = 0;
      for (int i = 1; i < static_cast<int>(full.coeffs.size()) && i <= k + 1; ++i) rhs -= full.coeffs[i] * b[k + 1 - i];
      EXPECT_EQ(b[k + 1], rhs) << "p=" << p << " k=" << k;
    }
    // ... and on a_{p^k} itself as far as M reaches.
    std::uint64_t pk = p;
    for (int k = 1; pk <= M; ++k, pk *= p) EXPECT_EQ(a[pk], b[k]) << "p=" << p << " k=" << k;
    if (!pc.exponents.count(static_cast<long>(p))) {
      const double bound = 2 * g * std::sqrt(static_cast<double>(p));
      EXPECT_LE(std::abs(a[p].get_d()), bound) << "p=" << p;
    }
  }
  for (auto p : primes_up_to(M)) {
    if (pc.exponents.count(static_cast<long>(p))) continue;
    EXPECT_LE(std::abs(a[p].get_d()), 2 * g * std::sqrt(static_cast<double>(p))) << "p=" << p;
  }
}

TEST(Dirichlet, TruncatedOrMissingFactorsAreReported) {
  auto factors = sparse_factors(100, {});
  factors[BigInt(3)].coeffs = {1, 1};
  factors[BigInt(3)].truncated_at = 1;
  try {
    dirichlet_coefficients(factors, 100);
    FAIL() << "expected InsufficientData";
  } catch (const InsufficientData& e) {
    EXPECT_EQ(e.prime(), 3u);
    EXPECT_EQ(e.needed_degree(), 4);
  }
  factors = sparse_factors(100, {});
  factors.erase(BigInt(97));
  EXPECT_THROW(dirichlet_coefficients(factors, 100), ConfigurationError);
  EXPECT_EQ(dirichlet_coefficients(sparse_factors(1, {}), 1)[1], 1);
}

TEST(ChooseM, MonotoneInDigitsAndConductor) {
  for (int g : {1, 2, 3, 4}) {
    std::uint64_t prev = 0;
    for (int digits : {3, 6, 12, 24}) {
      const auto M = choose_M(BigInt(1000000), g, digits);
      EXPECT_GE(M, prev) << "g=" << g << " digits=" << digits;
      prev = M;
    }
    prev = 0;
    for (long N : {1L, 100L, 10000L, 1000000L, 100000000L}) {
      const auto M = choose_M(BigInt(N), g, 12);
      EXPECT_GE(M, prev) << "g=" << g << " N=" << N;
      prev = M;
    }
  }
}

TEST(ChooseM, GenusOneTracksTheExponentialTail) {
  // With phi_1(x) = e^{-x} the tail is roughly exp(-2 pi M / sqrt(N)).
  for (long N : {10000L, 1000000L}) {
    for (int digits : {12, 20}) {
      const double closed = std::sqrt(static_cast<double>(N)) / (2 * std::numbers::pi) * digits * std::log(10.0);
      const double M = static_cast<double>(choose_M(BigInt(N), 1, digits));
      EXPECT_GT(M, closed / 2) << N << " " << digits;
      EXPECT_LT(M, closed * 2) << N << " " << digits;
    }
  }
}

TEST(ChooseM, BoundDominatesTheExactKernelForGenusOne) {
  for (double x : {1.0, 5.0, 30.0, 200.0}) EXPECT_GE(log_phi_bound(1, x), -x);
}

TEST(LSeriesFile, RoundTripIsIdentity) {
  LSeriesData d;
  d.genus = 2;
  d.M = 300;
  d.factors = genus2_factors(d.M);
  d.a = dirichlet_coefficients(d.factors, d.M);
  d.conductor = BigInt(4) * 3 * 7 * 101 * 163;
  const auto path = (std::filesystem::temp_directory_path() / "hyperlf_lseries_roundtrip.json").string();
  save_lseries(d, path);
  const auto back = load_lseries(path);
  EXPECT_TRUE(back == d);
  EXPECT_EQ(coefficient_checksum(back.a), coefficient_checksum(d.a));
  EXPECT_EQ(lseries_to_json(back), lseries_to_json(d));
  std::remove(path.c_str());
}

TEST(LSeriesFile, MalformedInputNamesTheProblem) {
  LSeriesData d;
  d.genus = 1;
  d.M = 3;
  d.a = {0, 1, -1, 2};
  const auto text = lseries_to_json(d);
  try {
    lseries_from_json(text.substr(0, 40));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.byte_offset(), 0u);
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
  auto extra = text;
  extra.insert(1, "\"bogus\":1,");
  try {
    lseries_from_json(extra);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "$.bogus");
  }
  auto short_a = text;
  short_a.replace(short_a.find("\"M\":3"), 5, "\"M\":4");
  EXPECT_THROW(lseries_from_json(short_a), ParseError);
}

}  // namespace
}  // namespace hyperlf
