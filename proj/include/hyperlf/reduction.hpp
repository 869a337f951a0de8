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

#include <string>
#include <vector>

#include "hyperlf/bigint.hpp"
#include "hyperlf/field_poly.hpp"
#include "hyperlf/int_poly.hpp"
#include "hyperlf/prime_field.hpp"

namespace hyperlf {

using FPoly = FieldPoly<PrimeField>;

/// The curve y^2 + h(x) y = g(x) over Q, with g monic of degree 2*genus+1
/// and deg h <= genus. f = 4g + h^2 is the right-hand side of the
/// equivalent model u^2 = f(x) with u = 2y + h.
class CurveSpec {
 public:
  /// Throws CurveInvalid when the degree conditions fail or disc(f) = 0.
  CurveSpec(IntPoly g, IntPoly h);

  const IntPoly& g() const { return g_; }
  const IntPoly& h() const { return h_; }
  const IntPoly& f() const { return f_; }
  int genus() const { return genus_; }
  const BigInt& discriminant() const { return disc_; }

 private:
  IntPoly g_;
  IntPoly h_;
  IntPoly f_;
  int genus_ = 0;
  BigInt disc_;
};

struct SingularPoint {
  FPoly r;  // monic irreducible factor of the singular locus
  unsigned degree = 0;
  int epsilon = 0;  // +1 split, -1 non-split
};

/// Smooth model of the normalization of the special fiber.
struct NormalizationEq {
  enum class Kind { kChar2, kOdd };
  Kind kind = Kind::kOdd;
  // char 2: y^2 + h_tilde y = g_tilde.
  FPoly h_tilde;
  FPoly g_tilde;
  // odd p: v^2 = unit * s, s monic.
  BigInt unit;
  FPoly s;

  /// Right-hand side unit*s for the odd model.
  FPoly rhs() const { return s.scale(unit); }
};

struct BadPrimeReport {
  BigInt p;
  FPoly r;  // monic singular-locus polynomial
  std::vector<SingularPoint> points;
  NormalizationEq normalization;
  int f_p = 0;
  int genus0 = 0;
  /// Some point has degree > 1, so its split test ran in the residue field F_{p^d}.
  bool residue_extension_used = false;
};

struct SemistabilityVerdict {
  bool semistable = false;
  std::string criterion;  // the condition that was tested
};

SemistabilityVerdict check_semistable_p2(const CurveSpec& curve);
SemistabilityVerdict check_semistable_podd(const CurveSpec& curve, const BigInt& p);

/// The p = 2 singular locus gcd(h, h'^2 g + g'^2) over F_2. Requires h != 0 mod 2.
FPoly singular_locus_p2(const CurveSpec& curve);

/// Odd prime factors of disc(f), plus 2 when the curve is not smooth mod 2.
std::vector<BigInt> bad_prime_candidates(const CurveSpec& curve);

/// Requires check_semistable_p2 to pass and a nonconstant singular locus.
BadPrimeReport analyze_p2(const CurveSpec& curve);
/// Requires p odd, p | disc(f) and check_semistable_podd to pass.
BadPrimeReport analyze_podd(const CurveSpec& curve, const BigInt& p);

}  // namespace hyperlf
