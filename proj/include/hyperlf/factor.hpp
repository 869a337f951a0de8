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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "hyperlf/field_poly.hpp"

namespace hyperlf {

template <class Field>
struct Factorization {
  typename Field::Element unit;
  /// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
  std::vector<std::pair<FieldPoly<Field>, unsigned>> factors;
};

namespace factor_detail {

/// For c with only exponents divisible by p, the polynomial whose p-th power is c.
template <class Field>
FieldPoly<Field> pth_root_poly(const FieldPoly<Field>& c) {
  const auto& F = c.field();
  if (c.degree() <= 0) return c;
  if (!fits_u64(F.characteristic())) throw InternalConsistency("p-th root of a non-constant polynomial in large characteristic");
  const auto p = static_cast<std::size_t>(to_u64(F.characteristic()));
  std::vector<typename Field::Element> out;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    if (i % p != 0) {
      if (!F.is_zero(c.coeffs()[i])) throw InternalConsistency("polynomial is not a p-th power");
      continue;
    }
    out.push_back(F.pth_root(c.coeffs()[i]));
  }
  return FieldPoly<Field>(c.field_ptr(), std::move(out));
}

template <class Field>
FieldPoly<Field> random_poly(const typename FieldPoly<Field>::FieldPtr& fp, long degree_bound, std::mt19937_64& rng) {
  std::vector<typename Field::Element> v;
  for (long i = 0; i < degree_bound; ++i) v.push_back(fp->random(rng));
  return FieldPoly<Field>(fp, std::move(v));
}

template <class Field>
void equal_degree_split(const FieldPoly<Field>& f, unsigned d, std::mt19937_64& rng,
                        std::vector<FieldPoly<Field>>& out) {
  using Poly = FieldPoly<Field>;
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f);
    return;
  }
  const auto& fp = f.field_ptr();
  const BigInt q = fp->order();
  const bool char2 = fp->characteristic() == 2;
  const BigInt qd = int_pow(q, d);
  const std::size_t trace_terms = char2 ? static_cast<std::size_t>(fp->degree()) * d : 0;
  for (;;) {
    Poly a = random_poly<Field>(fp, f.degree(), rng);
    if (a.degree() <= 0) continue;
    Poly b(fp);
    if (char2) {
      Poly term = a % f;
      b = term;
      for (std::size_t i = 1; i < trace_terms; ++i) {
        term = mulmod(term, term, f);
        b = b + term;
      }
    } else {
      b = powmod(a, BigInt((qd - 1) / 2), f) - Poly::constant(fp, fp->one());
    }
    if (b.is_zero()) continue;
    Poly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(exact_quotient(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace factor_detail

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree monic parts s_i with f = prod s_i^{m_i}.
template <class Field>
std::vector<std::pair<FieldPoly<Field>, unsigned>> squarefree_decomposition(const FieldPoly<Field>& f) {
  using Poly = FieldPoly<Field>;
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() <= 0) return out;
  const auto& fp = f.field_ptr();
  Poly w = f.derivative();
  Poly c(fp);
  if (!w.is_zero()) {
    c = gcd(f, w);
    w = exact_quotient(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
      Poly y = gcd(w, c);
      Poly z = exact_quotient(w, y);
      if (z.degree() > 0) out.emplace_back(z, i);
      ++i;
      w = y;
      c = exact_quotient(c, y);
    }
  } else {
    c = f;
  }
  if (c.degree() > 0) {
    const auto p = static_cast<unsigned>(to_u64(fp->characteristic()));
    for (auto& [g, m] : squarefree_decomposition(factor_detail::pth_root_poly(c))) out.emplace_back(g, m * p);
  }
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
template <class Field>
std::vector<std::pair<FieldPoly<Field>, unsigned>> distinct_degree(const FieldPoly<Field>& f) {
  using Poly = FieldPoly<Field>;
  std::vector<std::pair<Poly, unsigned>> out;
  const auto& fp = f.field_ptr();
  const Poly x = Poly::x(fp);
  const BigInt q = fp->order();
  Poly rest = f;
  Poly h = x % rest;
  for (unsigned i = 1; rest.degree() >= 2 * static_cast<long>(i); ++i) {
    h = powmod(h, q, rest);
    Poly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = exact_quotient(rest, g);
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

/// Splits a monic squarefree product of degree-d irreducibles into its factors.
template <class Field>
std::vector<FieldPoly<Field>> equal_degree(const FieldPoly<Field>& f, unsigned d, std::uint64_t seed) {
  std::vector<FieldPoly<Field>> out;
  if (f.degree() <= 0) return out;
  std::mt19937_64 rng(seed);
  factor_detail::equal_degree_split(f, d, rng, out);
  return out;
}

/// Full factorization into monic irreducibles. Deterministic for a fixed seed.
template <class Field>
Factorization<Field> factor(const FieldPoly<Field>& f, std::uint64_t seed = 0x5eed) {
  using Poly = FieldPoly<Field>;
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  Factorization<Field> result{f.leading(), {}};
  for (auto& [part, mult] : squarefree_decomposition(f.monic())) {
    for (auto& [block, d] : distinct_degree(part)) {
      for (auto& irr : equal_degree(block, d, seed)) result.factors.emplace_back(irr, mult);
    }
  }
  const auto& F = f.field();
  auto key = [&F](const Poly& p) {
    std::vector<std::string> k;
    for (const auto& c : p.coeffs()) k.push_back(F.to_string(c));
    return k;
  };
  std::sort(result.factors.begin(), result.factors.end(), [&](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return key(a.first) < key(b.first);
  });
  return result;
}

/// Ben-Or irreducibility test.
template <class Field>
bool is_irreducible(const FieldPoly<Field>& f) {
  using Poly = FieldPoly<Field>;
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const auto& fp = f.field_ptr();
  const Poly m = f.monic();
  const Poly x = Poly::x(fp);
  const BigInt q = fp->order();
  Poly h = x;
  for (long i = 1; 2 * i <= m.degree(); ++i) {
    h = powmod(h, q, m);
    if (gcd(h - x, m).degree() > 0) return false;
  }
  return true;
}

/// Degrees of the irreducible factors of a monic squarefree polynomial, with repetition.
template <class Field>
std::vector<unsigned> factor_degrees(const FieldPoly<Field>& f) {
  std::vector<unsigned> out;
  for (auto& [block, d] : distinct_degree(f.monic())) {
    for (long k = 0; k < block.degree() / static_cast<long>(d); ++k) out.push_back(d);
  }
  return out;
}

}  // namespace hyperlf
