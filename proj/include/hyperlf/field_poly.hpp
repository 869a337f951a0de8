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
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperlf/bigint.hpp"
#include "hyperlf/errors.hpp"
#include "hyperlf/int_poly.hpp"

namespace hyperlf {

/// Univariate polynomial over a finite field context. Coefficients are
/// ascending; the zero polynomial is the empty sequence with degree
/// kMinusInfinity. Values are immutable once built and share the field
/// context.
template <class Field>
class FieldPoly {
 public:
  using Element = typename Field::Element;
  using FieldPtr = std::shared_ptr<const Field>;

  /// Zero polynomial without a field context; only useful as a placeholder.
  FieldPoly() = default;
  explicit FieldPoly(FieldPtr field) : field_(std::move(field)), zero_(field_->zero()) {}

  FieldPoly(FieldPtr field, std::vector<Element> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)), zero_(field_->zero()) {
    trim();
  }

  static FieldPoly constant(FieldPtr field, Element c) {
    std::vector<Element> v{std::move(c)};
    return FieldPoly(std::move(field), std::move(v));
  }

  static FieldPoly monomial(FieldPtr field, Element c, std::size_t k) {
    std::vector<Element> v(k + 1, field->zero());
    v[k] = std::move(c);
    return FieldPoly(std::move(field), std::move(v));
  }

  static FieldPoly x(FieldPtr field) {
    auto one = field->one();
    return monomial(field, one, 1);
  }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  long degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }
  std::span<const Element> coeffs() const { return coeffs_; }
  const Element& coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
  const Element& leading() const { return coeffs_.empty() ? zero_ : coeffs_.back(); }

  FieldPoly derivative() const {
    std::vector<Element> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d.push_back(field_->mul(field_->from_int(BigInt(static_cast<unsigned long>(i))), coeffs_[i]));
    }
    return FieldPoly(field_, std::move(d));
  }

  Element eval(const Element& x) const {
    Element acc = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
    return acc;
  }

  FieldPoly monic() const {
    if (is_zero()) return *this;
    return scale(field_->inv(leading()));
  }

  FieldPoly scale(const Element& c) const {
    std::vector<Element> v;
    v.reserve(coeffs_.size());
    for (const auto& a : coeffs_) v.push_back(field_->mul(c, a));
    return FieldPoly(field_, std::move(v));
  }

  std::string to_string(char var = 'x') const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (field_->is_zero(coeffs_[k])) continue;
      if (!first) out << " + ";
      first = false;
      const bool unit = coeffs_[k] == field_->one();
      if (k == 0 || !unit) out << field_->to_string(coeffs_[k]);
      if (k >= 1) out << var;
      if (k >= 2) out << "^" << k;
    }
    return out.str();
  }

  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
    const auto& F = *a.field_;
    std::vector<Element> r(std::max(a.coeffs_.size(), b.coeffs_.size()), F.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
    return FieldPoly(a.field_, std::move(r));
  }

  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
    const auto& F = *a.field_;
    std::vector<Element> r(std::max(a.coeffs_.size(), b.coeffs_.size()), F.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
    return FieldPoly(a.field_, std::move(r));
  }

  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    if (a.is_zero() || b.is_zero()) return FieldPoly(a.field_);
    const auto& F = *a.field_;
    std::vector<Element> r(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (F.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        r[i + j] = F.add(r[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return FieldPoly(a.field_, std::move(r));
  }

  friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  FieldPtr field_;
  std::vector<Element> coeffs_;
  Element zero_;
};

/// Quotient and remainder; throws InvalidArgument on division by zero.
template <class Field>
std::pair<FieldPoly<Field>, FieldPoly<Field>> divrem(const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
  using Poly = FieldPoly<Field>;
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const auto& F = a.field();
  if (a.degree() < b.degree()) return {Poly(a.field_ptr()), a};
  std::vector<typename Field::Element> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<typename Field::Element> quo(rem.size() - db, F.zero());
  const auto lead_inv = F.inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (F.is_zero(rem[k])) continue;
    auto c = F.mul(rem[k], lead_inv);
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = F.sub(rem[k - db + j], F.mul(c, b.coeff(j)));
    quo[k - db] = std::move(c);
  }
  rem.resize(db);
  return {Poly(a.field_ptr(), std::move(quo)), Poly(a.field_ptr(), std::move(rem))};
}

template <class Field>
FieldPoly<Field> operator/(const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
  return divrem(a, b).first;
}

template <class Field>
FieldPoly<Field> operator%(const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
  return divrem(a, b).second;
}

/// Quotient a/b; throws InternalConsistency when b does not divide a.
template <class Field>
FieldPoly<Field> exact_quotient(const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InternalConsistency("inexact polynomial division");
  return q;
}

/// Monic greatest common divisor. Throws InvalidArgument when both inputs are zero.
template <class Field>
FieldPoly<Field> gcd(FieldPoly<Field> a, FieldPoly<Field> b) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class Field>
FieldPoly<Field> gcd(std::initializer_list<FieldPoly<Field>> polys) {
  auto it = polys.begin();
  FieldPoly<Field> acc = *it++;
  for (; it != polys.end(); ++it) {
    if (acc.is_zero() && it->is_zero()) continue;
    acc = gcd(acc, *it);
  }
  if (acc.is_zero()) throw InvalidArgument("gcd of zero polynomials");
  return acc.monic();
}

template <class Field>
struct ExtendedGcd {
  FieldPoly<Field> gcd;
  FieldPoly<Field> s;
  FieldPoly<Field> t;
};

/// s*a + t*b = gcd(a, b), gcd monic.
template <class Field>
ExtendedGcd<Field> xgcd(const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
  using Poly = FieldPoly<Field>;
  const auto& fp = a.field_ptr();
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(fp, fp->one()), s1(fp);
  Poly t0(fp), t1 = Poly::constant(fp, fp->one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const auto inv = fp->inv(r0.leading());
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

/// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
template <class Field>
FieldPoly<Field> inverse_mod(const FieldPoly<Field>& a, const FieldPoly<Field>& m) {
  auto e = xgcd(a % m, m);
  if (!e.gcd.is_one()) throw InvalidArgument("polynomial is not invertible modulo " + m.to_string());
  return e.s % m;
}

template <class Field>
FieldPoly<Field> mulmod(const FieldPoly<Field>& a, const FieldPoly<Field>& b, const FieldPoly<Field>& m) {
  return (a * b) % m;
}

/// base^e mod m for e >= 0.
template <class Field>
FieldPoly<Field> powmod(const FieldPoly<Field>& base, const BigInt& e, const FieldPoly<Field>& m) {
  using Poly = FieldPoly<Field>;
  if (e < 0) throw InvalidArgument("negative exponent in powmod");
  const auto& fp = base.field_ptr();
  Poly result = Poly::constant(fp, fp->one()) % m;
  Poly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

/// Coefficientwise image of an integer polynomial.
template <class Field>
FieldPoly<Field> reduce_mod(const IntPoly& f, std::shared_ptr<const Field> field) {
  std::vector<typename Field::Element> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(field->from_int(c));
  return FieldPoly<Field>(std::move(field), std::move(v));
}

}  // namespace hyperlf
