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

#include "hyperlf/reduction.hpp"

#include <algorithm>

#include "hyperlf/errors.hpp"
#include "hyperlf/ext_field.hpp"
#include "hyperlf/factor.hpp"
#include "hyperlf/field_ops.hpp"

namespace hyperlf {

CurveSpec::CurveSpec(IntPoly g, IntPoly h) : g_(std::move(g)), h_(std::move(h)) {
  const long dg = g_.degree();
  if (dg < 5 || dg % 2 == 0) {
    throw CurveInvalid("g must have odd degree 2*genus+1 with genus >= 2, got degree " + std::to_string(dg));
  }
  if (g_.leading() != 1) throw CurveInvalid("g must be monic");
  genus_ = static_cast<int>((dg - 1) / 2);
  if (h_.degree() > genus_) {
    throw CurveInvalid("deg h = " + std::to_string(h_.degree()) + " exceeds the genus " + std::to_string(genus_));
  }
  f_ = BigInt(4) * g_ + h_ * h_;
  disc_ = hyperlf::discriminant(f_);
  if (disc_ == 0) throw CurveInvalid("4g + h^2 has a repeated root");
}

namespace {

std::shared_ptr<const PrimeField> field_for(const BigInt& p) { return PrimeField::make(p); }

const std::shared_ptr<const PrimeField>& f2() {
  static const auto field = PrimeField::make(2);
  return field;
}

// gcd that treats the all-zero list as "not coprime".
bool coprime(std::initializer_list<FPoly> polys) {
  bool any = false;
  for (const auto& q : polys) any = any || !q.is_zero();
  if (!any) return false;
  return gcd(polys).degree() == 0;
}

}  // namespace

SemistabilityVerdict check_semistable_p2(const CurveSpec& curve) {
  const std::string criterion = "gcd(h, h', g') = 1 over F_2 with h != 0";
  const FPoly hb = reduce_mod(curve.h(), f2());
  const FPoly gb = reduce_mod(curve.g(), f2());
  if (hb.is_zero()) return {false, criterion};
  return {coprime({hb, hb.derivative(), gb.derivative()}), criterion};
}

SemistabilityVerdict check_semistable_podd(const CurveSpec& curve, const BigInt& p) {
  const std::string criterion = "gcd(f, f', f'') = 1 over F_" + p.get_str();
  if (p == 2) throw InvalidArgument("check_semistable_podd requires an odd prime");
  const FPoly fb = reduce_mod(curve.f(), field_for(p));
  const FPoly d1 = fb.derivative();
  return {coprime({fb, d1, d1.derivative()}), criterion};
}

FPoly singular_locus_p2(const CurveSpec& curve) {
  const FPoly hb = reduce_mod(curve.h(), f2());
  const FPoly gb = reduce_mod(curve.g(), f2());
  if (hb.is_zero()) throw InvalidArgument("singular locus at 2 needs h != 0 mod 2");
  const FPoly hd = hb.derivative();
  const FPoly gd = gb.derivative();
  return gcd(hb, hd * hd * gb + gd * gd);
}

std::vector<BigInt> bad_prime_candidates(const CurveSpec& curve) {
  std::vector<BigInt> out;
  const bool bad2 = !check_semistable_p2(curve).semistable || singular_locus_p2(curve).degree() >= 1;
  if (bad2) out.emplace_back(2);
  for (const auto& [p, e] : factor_integer(curve.discriminant())) {
    if (p != 2) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BadPrimeReport analyze_p2(const CurveSpec& curve) {
  if (!check_semistable_p2(curve).semistable) throw NotSemistable("2", check_semistable_p2(curve).criterion);
  const auto& F = f2();
  const FPoly hb = reduce_mod(curve.h(), F);
  const FPoly gb = reduce_mod(curve.g(), F);
  const FPoly r = singular_locus_p2(curve);
  if (r.degree() < 1) throw InvalidArgument("curve has good reduction at 2");

  FPoly s(F);
  try {
    s = sqrt_mod(gb, r);
  } catch (const InvalidArgument&) {
    throw InternalConsistency("singular locus at 2 is not separable");
  }
  auto [h_tilde, h_rem] = divrem(hb, r);
  if (!h_rem.is_zero()) throw InternalConsistency("singular locus does not divide h mod 2");
  auto [g_tilde, g_rem] = divrem(gb + s * s + hb * s, r * r);
  if (!g_rem.is_zero()) throw InternalConsistency("r^2 does not divide g + s^2 + h s mod 2");
  if (gcd(h_tilde, r).degree() > 0) throw InternalConsistency("reduced h shares a factor with the singular locus");

  BadPrimeReport rep;
  rep.p = 2;
  rep.r = r;
  rep.f_p = static_cast<int>(r.degree());
  rep.genus0 = curve.genus() - rep.f_p;
  rep.normalization.kind = NormalizationEq::Kind::kChar2;
  rep.normalization.h_tilde = h_tilde;
  rep.normalization.g_tilde = g_tilde;
  rep.normalization.s = s;
  rep.normalization.unit = 1;
  for (const auto& [ri, mult] : factor(r).factors) {
    auto E = ExtField::make(F, ri);
    const auto h0 = E->from_poly(h_tilde);
    const auto g0 = E->from_poly(g_tilde);
    const unsigned roots = quad_solutions(*E, h0, g0);
    if (roots == 1) throw InternalConsistency("h_tilde vanishes at a singular point");
    const auto d = static_cast<unsigned>(ri.degree());
    rep.points.push_back({ri, d, roots == 2 ? 1 : -1});
    rep.residue_extension_used = rep.residue_extension_used || d > 1;
  }
  return rep;
}

BadPrimeReport analyze_podd(const CurveSpec& curve, const BigInt& p) {
  const auto verdict = check_semistable_podd(curve, p);
  if (!verdict.semistable) throw NotSemistable(p.get_str(), verdict.criterion);
  const auto F = field_for(p);
  const FPoly fb = reduce_mod(curve.f(), F);
  const FPoly r = gcd(fb, fb.derivative());
  if (r.degree() < 1) throw InvalidArgument("curve has good reduction at " + p.get_str());
  auto [q, rem] = divrem(fb, r * r);
  if (!rem.is_zero()) throw InternalConsistency("r^2 does not divide f mod " + p.get_str());
  const BigInt unit = q.leading();
  const FPoly s = q.monic();
  if (gcd(s, s.derivative()).degree() > 0 || gcd(r, s).degree() > 0) {
    throw InternalConsistency("normalization right-hand side is not separable and coprime to r");
  }

  BadPrimeReport rep;
  rep.p = p;
  rep.r = r;
  rep.f_p = static_cast<int>(r.degree());
  rep.genus0 = curve.genus() - rep.f_p;
  rep.normalization.kind = NormalizationEq::Kind::kOdd;
  rep.normalization.unit = unit;
  rep.normalization.s = s;
  rep.normalization.h_tilde = FPoly(F);
  rep.normalization.g_tilde = FPoly(F);
  for (const auto& [ri, mult] : factor(r).factors) {
    auto E = ExtField::make(F, ri);
    const auto value = E->mul(E->embed(unit), E->from_poly(s));
    const auto d = static_cast<unsigned>(ri.degree());
    rep.points.push_back({ri, d, is_square(*E, value) ? 1 : -1});
    rep.residue_extension_used = rep.residue_extension_used || d > 1;
  }
  return rep;
}

}  // namespace hyperlf
