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
#include <map>
#include <string>
#include <vector>

#include "hyperlf/bigint.hpp"
#include "hyperlf/reduction.hpp"
#include "hyperlf/zeta.hpp"

namespace hyperlf {

/// Dirichlet series L(s) = sum a_n n^{-s} truncated at M, with the data it
/// was built from.
struct LSeriesData {
  int genus = 0;
  BigInt conductor{1};
  std::uint64_t M = 0;
  /// a[n] for n = 0..M; a[0] is unused and kept at zero.
  std::vector<BigInt> a;
  std::map<BigInt, LocalFactorInv> factors;

  const BigInt& coeff(std::uint64_t n) const { return a.at(n); }
  bool operator==(const LSeriesData& other) const;
};

/// p^{f_p} over all bad primes. Each bad prime needs exactly one source:
/// a computed report or an override. Overrides for primes outside
/// `bad_primes` are rejected too.
BigInt conductor(const std::vector<BigInt>& bad_primes, const std::vector<BadPrimeReport>& reports,
                 const std::map<BigInt, LocalFactorInv>& overrides);

/// Upper bound on log phi_g(x) for large x: twice the leading asymptotic
/// sqrt((2 pi)^{g-1}/g) x^{(1-g)/(2g)} exp(-g x^{1/g}).
long double log_phi_bound(int g, long double x);

/// Smallest M with sum_{n>M} n sigma_0(n)^{2g} phi_g((2 pi)^g n / sqrt(N))
/// below 10^{-target_digits}, where phi_g is replaced by its bound.
std::uint64_t choose_M(const BigInt& N, int g, int target_digits);

/// Bound for |sum_{n>M} a_n phi_g(n t / A)|, A = sqrt(N) / (2 pi)^g, from
/// |a_n| <= sqrt(n) d_{2g}(n). Terms below floor * e^{-20} are dropped.
long double coefficient_tail_bound(const BigInt& N, int g, std::uint64_t M, long double t, long double floor);
/// Smallest M for which that bound is below eps.
std::uint64_t coefficient_tail_cutoff(const BigInt& N, int g, long double t, long double eps);

/// Coefficients of 1/P(T) up to degree `degree`; P(0) must be 1.
std::vector<BigInt> inverse_series(const std::vector<BigInt>& P, int degree);

/// a_0..a_M from local factors. Every prime p <= M needs an entry known to
/// degree floor(log_p M); otherwise InsufficientData (or ConfigurationError
/// when the prime has no entry at all).
std::vector<BigInt> dirichlet_coefficients(const std::map<BigInt, LocalFactorInv>& factors, std::uint64_t M);

/// FNV-1a over the decimal strings of a_1..a_M separated by commas.
std::uint64_t coefficient_checksum(const std::vector<BigInt>& a);

/// Primes up to n (inclusive), ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Versioned JSON cache file: header (genus, N, M, factor table) plus a_n.
void save_lseries(const LSeriesData& data, const std::string& path);
LSeriesData load_lseries(const std::string& path);
std::string lseries_to_json(const LSeriesData& data);
LSeriesData lseries_from_json(const std::string& text, const std::string& origin = "<memory>");

}  // namespace hyperlf
