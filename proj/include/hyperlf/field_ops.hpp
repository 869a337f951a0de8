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

#include <numeric>

#include "hyperlf/factor.hpp"
#include "hyperlf/field_poly.hpp"
#include "hyperlf/prime_field.hpp"

namespace hyperlf {

/// Whether a nonzero element of an odd-characteristic field is a square.
template <class Field>
bool is_square(const Field& F, const typename Field::Element& a) {
  if (F.is_zero(a)) throw InvalidArgument("is_square called on zero");
  if (F.characteristic() == 2) return true;
  return F.pow(a, BigInt((F.order() - 1) / 2)) == F.one();
}

/// Absolute trace to the prime field, sum of a^{p^i} over the absolute degree.
template <class Field>
typename Field::Element absolute_trace(const Field& F, const typename Field::Element& a) {
  auto term = a;
  auto acc = a;
  for (unsigned i = 1; i < F.degree(); ++i) {
    term = F.frobenius(term);
    acc = F.add(acc, term);
  }
  return acc;
}

/// Number of y in a characteristic-2 field with y^2 + h0 y = g0.
template <class Field>
unsigned quad_solutions(const Field& F, const typename Field::Element& h0, const typename Field::Element& g0) {
  if (F.characteristic() != 2) throw InvalidArgument("quad_solutions requires characteristic 2");
  if (F.is_zero(h0)) return 1;
  const auto h2 = F.mul(h0, h0);
  const auto t = absolute_trace(F, F.mul(g0, F.inv(h2)));
  return F.is_zero(t) ? 2 : 0;
}

/// The unique s with deg s < deg r and s^2 = g mod r, over F_2 for r squarefree.
/// Throws InvalidArgument when r is not squarefree.
inline FieldPoly<PrimeField> sqrt_mod(const FieldPoly<PrimeField>& g, const FieldPoly<PrimeField>& r) {
  if (r.field().characteristic() != 2) throw InvalidArgument("sqrt_mod requires characteristic 2");
  if (r.degree() < 1) throw InvalidArgument("sqrt_mod requires a modulus of positive degree");
  if (gcd(r, r.derivative()).degree() > 0) throw InvalidArgument("sqrt_mod modulus " + r.to_string() + " is not squarefree");
  // Frobenius on F_2[x]/(r) has order L = lcm of the factor degrees, so
  // squaring L-1 times inverts one squaring.
  unsigned L = 1;
  for (unsigned d : factor_degrees(r)) L = std::lcm(L, d);
  FieldPoly<PrimeField> s = g % r;
  for (unsigned i = 1; i < L; ++i) s = mulmod(s, s, r);
  return s;
}

}  // namespace hyperlf
