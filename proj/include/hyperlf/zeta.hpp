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
#include <optional>
#include <vector>

#include "hyperlf/bigint.hpp"
#include "hyperlf/reduction.hpp"
#include "hyperlf/zech_field.hpp"

namespace hyperlf {

/// A smooth affine plane model over F_p with the number of points at
/// infinity determined by the kind:
///  - kOddSquare:     v^2 = a(x), p odd
///  - kChar2:         y^2 + a(x) y = b(x), p = 2, deg b odd
///  - kSuperelliptic: y^m = a(x), gcd(m, deg a) = 1, p not dividing m
struct CurveModel {
  enum class Kind { kOddSquare, kChar2, kSuperelliptic };
  Kind kind = Kind::kOddSquare;
  FPoly a;
  FPoly b;
  unsigned m = 2;
  int genus = 0;

  static CurveModel odd_square(FPoly rhs);
  static CurveModel char2(FPoly h, FPoly g);
  static CurveModel superelliptic(unsigned m, FPoly f);
  std::uint64_t p() const;
};

/// Points over F_{2^n} of y^2 + h y = g, including the single point at infinity.
std::uint64_t count_char2(const FPoly& h, const FPoly& g, unsigned n);
/// Points over F_{p^n} of v^2 = s, including the points at infinity.
std::uint64_t count_odd(const FPoly& s, unsigned n);
/// Points over F_{p^n} of the smooth model of y^m = f with one point at infinity.
std::uint64_t count_superelliptic(unsigned m, const FPoly& f, unsigned n);

/// N_1, ..., N_k for the model over F_{p^n}, n = 1..k.
std::vector<std::uint64_t> count_points(const CurveModel& model, unsigned k);
/// Count over an already built table field (its order q = p^n).
std::uint64_t count_points(const CurveModel& model, const ZechField& field);

struct ZetaNumerator {
  std::vector<BigInt> coeffs;  // c_0 = 1, ascending
  BigInt q;
  int genus = 0;
  /// Set when only c_0..c_k are known.
  std::optional<int> truncated_at;

  bool complete() const { return !truncated_at.has_value(); }
};

/// Newton's identities on S_n = q^n + 1 - N_n. With at least `genus`
/// counts the remaining coefficients follow from c_{2g-i} = q^{g-i} c_i.
/// Throws DataIntegrity when a coefficient would not be an integer.
ZetaNumerator zeta_numerator_from_counts(const std::vector<std::uint64_t>& counts, int genus, const BigInt& q);

/// Inverse local factor P(T) with L_p(s) = 1 / P(p^{-s}).
struct LocalFactorInv {
  BigInt p;
  std::vector<BigInt> coeffs;
  std::optional<int> truncated_at;
  int f_p = 0;

  bool complete() const { return !truncated_at.has_value(); }
  /// Highest degree with a known coefficient (unbounded when complete).
  int known_degree() const;
  bool operator==(const LocalFactorInv& other) const = default;
};

/// floor(log_p M); 0 when p > M.
int truncation_degree(const BigInt& p, std::uint64_t M);

/// Zeta numerator of a smooth model, counting only up to n <= min(genus, j)
/// with j = floor(log_p M). No cutoff means the full polynomial.
ZetaNumerator model_numerator(const CurveModel& model, std::optional<std::uint64_t> M);

LocalFactorInv good_local_factor(const CurveSpec& curve, const BigInt& p, std::optional<std::uint64_t> M);
LocalFactorInv good_local_factor(const CurveModel& model, std::optional<std::uint64_t> M);
LocalFactorInv bad_local_factor(const BadPrimeReport& report, std::optional<std::uint64_t> M);

/// The smooth model of the normalization in a bad-prime report.
CurveModel normalization_model(const BadPrimeReport& report);

/// Whether every complex root of P has modulus q^{-1/2} within rel_tol.
bool weil_roots_ok(const std::vector<BigInt>& coeffs, const BigInt& q, double rel_tol = 1e-6);

/// c_{2g-i} = q^{g-i} c_i for a complete numerator of degree 2g.
bool weil_symmetric(const std::vector<BigInt>& coeffs, int genus, const BigInt& q);

/// Truncated product of two polynomials; keep degrees <= max_degree when set.
std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                             std::optional<int> max_degree = std::nullopt);

}  // namespace hyperlf
