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

#include "hyperlf/zeta.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <numeric>

#include "hyperlf/errors.hpp"

namespace hyperlf {

namespace {

int model_genus_odd(long d) { return static_cast<int>(d % 2 ? (d - 1) / 2 : (d - 2) / 2); }

std::vector<ZechField::Log> to_logs(const FPoly& f, const ZechField& F) {
  std::vector<ZechField::Log> out;
  for (const auto& c : f.coeffs()) out.push_back(F.from_prime(to_u64(c)));
  return out;
}

ZechField::Log eval_logs(const std::vector<ZechField::Log>& c, ZechField::Log x, const ZechField& F) {
  ZechField::Log acc = F.zero();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

std::vector<std::uint64_t> to_u64_coeffs(const FPoly& f) {
  std::vector<std::uint64_t> out;
  for (const auto& c : f.coeffs()) out.push_back(to_u64(c));
  return out;
}

// Values f(0), f(1), ..., f(p-1) mod p via forward differences, passed to visit.
template <class Visit>
void for_each_value_mod_p(const std::vector<std::uint64_t>& c, std::uint64_t p, Visit&& visit) {
  const std::size_t D = c.empty() ? 0 : c.size() - 1;
  auto eval = [&](std::uint64_t x) {
    std::uint64_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % p;
    return acc;
  };
  std::vector<std::uint64_t> diff(D + 1);
  for (std::size_t i = 0; i <= D; ++i) diff[i] = eval(i % p);
  for (std::size_t level = 1; level <= D; ++level) {
    for (std::size_t i = D; i >= level; --i) diff[i] = (diff[i] + p - diff[i - 1]) % p;
  }
  // diff[j] now holds the j-th forward difference at 0.
  for (std::uint64_t x = 0; x < p; ++x) {
    visit(diff[0]);
    for (std::size_t j = 0; j < D; ++j) {
      std::uint64_t v = diff[j] + diff[j + 1];
      diff[j] = v >= p ? v - p : v;
    }
  }
}

// Number of affine points of y^m = f(x) over F_p, p odd or m odd.
std::uint64_t affine_count_prime_field(const FPoly& f, unsigned m, std::uint64_t p) {
  if (p > (std::uint64_t{1} << 32)) throw InvalidArgument("prime too large for point counting");
  const auto c = to_u64_coeffs(f);
  const std::uint64_t e = std::gcd(std::uint64_t{m}, p - 1);
  if (e == 1) return p;
  std::vector<std::uint8_t> is_power(p, 0);
  if (e == 2) {
    std::uint64_t sq = 0;
    for (std::uint64_t i = 1; 2 * i <= p; ++i) {
      sq += 2 * i - 1;
      sq %= p;
      is_power[sq] = 1;
    }
  } else {
    for (std::uint64_t y = 1; y < p; ++y) {
      std::uint64_t v = 1;
      for (std::uint64_t k = 0; k < e; ++k) v = v * y % p;
      is_power[v] = 1;
    }
  }
  std::uint64_t total = 0;
  for_each_value_mod_p(c, p, [&](std::uint64_t v) { total += v == 0 ? 1 : (is_power[v] ? e : 0); });
  return total;
}

}  // namespace

CurveModel CurveModel::odd_square(FPoly rhs) {
  if (rhs.field().characteristic() == 2) throw InvalidArgument("odd_square model needs odd characteristic");
  if (rhs.degree() < 1) throw InvalidArgument("odd_square model needs a nonconstant right-hand side");
  CurveModel m;
  m.kind = Kind::kOddSquare;
  m.genus = model_genus_odd(rhs.degree());
  m.a = std::move(rhs);
  m.b = FPoly(m.a.field_ptr());
  return m;
}

CurveModel CurveModel::char2(FPoly h, FPoly g) {
  if (g.field().characteristic() != 2) throw InvalidArgument("char2 model needs characteristic 2");
  if (g.degree() < 1 || g.degree() % 2 == 0) throw InvalidArgument("char2 model needs g of odd degree");
  CurveModel m;
  m.kind = Kind::kChar2;
  m.genus = static_cast<int>((g.degree() - 1) / 2);
  m.a = std::move(h);
  m.b = std::move(g);
  return m;
}

CurveModel CurveModel::superelliptic(unsigned mm, FPoly f) {
  if (mm < 2) throw InvalidArgument("superelliptic exponent must be >= 2");
  if (f.degree() < 1 || std::gcd(static_cast<long>(mm), f.degree()) != 1) {
    throw InvalidArgument("superelliptic model needs gcd(m, deg f) = 1");
  }
  if (f.field().characteristic() % mm == 0) throw InvalidArgument("characteristic divides the exponent");
  CurveModel m;
  m.kind = Kind::kSuperelliptic;
  m.m = mm;
  m.genus = static_cast<int>((mm - 1) * (f.degree() - 1) / 2);
  m.a = std::move(f);
  m.b = FPoly(m.a.field_ptr());
  return m;
}

std::uint64_t CurveModel::p() const { return to_u64(a.field().characteristic()); }

std::uint64_t count_points(const CurveModel& model, const ZechField& F) {
  using Log = ZechField::Log;
  const std::uint64_t q = F.order();
  const auto a = to_logs(model.a, F);
  std::uint64_t total = 1;  // the point at infinity for odd-degree models
  switch (model.kind) {
    case CurveModel::Kind::kOddSquare: {
      if (model.a.degree() % 2 == 0) {
        const Log lc = F.from_prime(to_u64(model.a.leading()));
        total = lc % 2 == 0 ? 2 : 0;
      }
      auto visit = [&](Log x) {
        const Log v = eval_logs(a, x, F);
        total += F.is_zero(v) ? 1 : (v % 2 == 0 ? 2 : 0);
      };
      visit(F.zero());
      for (std::uint64_t i = 0; i + 1 < q; ++i) visit(F.nth_unit(i));
      break;
    }
    case CurveModel::Kind::kChar2: {
      const auto b = to_logs(model.b, F);
      auto visit = [&](Log x) {
        const Log h0 = eval_logs(a, x, F);
        if (F.is_zero(h0)) {
          total += 1;
          return;
        }
        const Log g0 = eval_logs(b, x, F);
        const Log t = F.mul(g0, F.inv(F.mul(h0, h0)));
        total += F.trace_is_zero(t) ? 2 : 0;
      };
      visit(F.zero());
      for (std::uint64_t i = 0; i + 1 < q; ++i) visit(F.nth_unit(i));
      break;
    }
    case CurveModel::Kind::kSuperelliptic: {
      const std::uint64_t e = std::gcd(std::uint64_t{model.m}, q - 1);
      if (e == 1) return q + 1;
      auto visit = [&](Log x) {
        const Log v = eval_logs(a, x, F);
        total += F.is_zero(v) ? 1 : (v % e == 0 ? e : 0);
      };
      visit(F.zero());
      for (std::uint64_t i = 0; i + 1 < q; ++i) visit(F.nth_unit(i));
      break;
    }
  }
  return total;
}

std::vector<std::uint64_t> count_points(const CurveModel& model, unsigned k) {
  std::vector<std::uint64_t> out;
  const std::uint64_t p = model.p();
  for (unsigned n = 1; n <= k; ++n) {
    if (n == 1 && p != 2) {
      std::uint64_t affine = 0;
      std::uint64_t infinity = 1;
      if (model.kind == CurveModel::Kind::kOddSquare) {
        affine = affine_count_prime_field(model.a, 2, p);
        if (model.a.degree() % 2 == 0) {
          PrimeField F(from_u64(p));
          infinity = F.pow(model.a.leading(), BigInt((p - 1) / 2)) == 1 ? 2 : 0;
        }
      } else if (model.kind == CurveModel::Kind::kSuperelliptic) {
        affine = affine_count_prime_field(model.a, model.m, p);
      } else {
        throw InvalidArgument("char2 model over an odd prime");
      }
      out.push_back(affine + infinity);
      continue;
    }
    ZechField F(p, n);
    out.push_back(count_points(model, F));
  }
  return out;
}

std::uint64_t count_char2(const FPoly& h, const FPoly& g, unsigned n) {
  ZechField F(2, n);
  return count_points(CurveModel::char2(h, g), F);
}

std::uint64_t count_odd(const FPoly& s, unsigned n) {
  const auto model = CurveModel::odd_square(s);
  if (n == 1) return count_points(model, 1).front();
  ZechField F(model.p(), n);
  return count_points(model, F);
}

std::uint64_t count_superelliptic(unsigned m, const FPoly& f, unsigned n) {
  const auto model = CurveModel::superelliptic(m, f);
  if (n == 1 && model.p() != 2) return count_points(model, 1).front();
  ZechField F(model.p(), n);
  return count_points(model, F);
}

ZetaNumerator zeta_numerator_from_counts(const std::vector<std::uint64_t>& counts, int genus, const BigInt& q) {
  ZetaNumerator z;
  z.q = q;
  z.genus = genus;
  if (genus == 0) {
    z.coeffs = {BigInt(1)};
    return z;
  }
  const int k = std::min<int>(static_cast<int>(counts.size()), 2 * genus);
  std::vector<BigInt> S(k + 1);
  for (int n = 1; n <= k; ++n) S[n] = int_pow(q, n) + 1 - from_u64(counts[n - 1]);
  std::vector<BigInt> c(k + 1);
  c[0] = 1;
  for (int j = 1; j <= k; ++j) {
    BigInt acc = 0;
    for (int i = 1; i <= j; ++i) acc += S[i] * c[j - i];
    acc = -acc;
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(j))) {
      throw DataIntegrity("point counts give a non-integral zeta coefficient at degree " + std::to_string(j));
    }
    mpz_divexact_ui(c[j].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j));
  }
  if (k < genus) {
    z.coeffs = std::move(c);
    z.truncated_at = k;
    return z;
  }
  z.coeffs.assign(2 * genus + 1, 0);
  for (int i = 0; i <= genus; ++i) z.coeffs[i] = c[i];
  for (int i = 0; i < genus; ++i) z.coeffs[2 * genus - i] = int_pow(q, genus - i) * c[i];
  for (int j = genus + 1; j <= k; ++j) {
    if (c[j] != z.coeffs[j]) throw DataIntegrity("point counts violate the functional equation at degree " + std::to_string(j));
  }
  return z;
}

int LocalFactorInv::known_degree() const { return truncated_at ? *truncated_at : INT_MAX; }

int truncation_degree(const BigInt& p, std::uint64_t M) {
  int j = 0;
  BigInt pw = p;
  const BigInt bound = from_u64(M);
  while (pw <= bound) {
    ++j;
    pw *= p;
  }
  return j;
}

ZetaNumerator model_numerator(const CurveModel& model, std::optional<std::uint64_t> M) {
  const BigInt p = from_u64(model.p());
  const int j = M ? truncation_degree(p, *M) : INT_MAX;
  const int k = std::min(model.genus, j);
  return zeta_numerator_from_counts(count_points(model, static_cast<unsigned>(k)), model.genus, p);
}

LocalFactorInv good_local_factor(const CurveModel& model, std::optional<std::uint64_t> M) {
  auto z = model_numerator(model, M);
  LocalFactorInv out;
  out.p = z.q;
  out.coeffs = std::move(z.coeffs);
  out.truncated_at = z.truncated_at;
  return out;
}

LocalFactorInv good_local_factor(const CurveSpec& curve, const BigInt& p, std::optional<std::uint64_t> M) {
  if (!is_prime(p)) throw InvalidArgument(p.get_str() + " is not prime");
  auto F = PrimeField::make(p);
  if (p == 2) {
    if (!check_semistable_p2(curve).semistable || singular_locus_p2(curve).degree() >= 1) {
      throw InvalidArgument("curve has bad reduction at 2");
    }
    return good_local_factor(CurveModel::char2(reduce_mod(curve.h(), F), reduce_mod(curve.g(), F)), M);
  }
  if (curve.discriminant() % p == 0) throw InvalidArgument("curve has bad reduction at " + p.get_str());
  return good_local_factor(CurveModel::odd_square(reduce_mod(curve.f(), F)), M);
}

CurveModel normalization_model(const BadPrimeReport& report) {
  const auto& n = report.normalization;
  if (n.kind == NormalizationEq::Kind::kChar2) return CurveModel::char2(n.h_tilde, n.g_tilde);
  return CurveModel::odd_square(n.rhs());
}

LocalFactorInv bad_local_factor(const BadPrimeReport& report, std::optional<std::uint64_t> M) {
  ZetaNumerator z;
  if (report.genus0 == 0) {
    z.coeffs = {BigInt(1)};
  } else {
    const auto model = normalization_model(report);
    if (model.genus != report.genus0) throw InternalConsistency("normalization genus mismatch");
    z = model_numerator(model, M);
  }
  std::vector<BigInt> nodes{BigInt(1)};
  for (const auto& pt : report.points) {
    std::vector<BigInt> term(pt.degree + 1, 0);
    term[0] = 1;
    term[pt.degree] = -pt.epsilon;
    nodes = poly_mul(nodes, term);
  }
  LocalFactorInv out;
  out.p = report.p;
  out.f_p = report.f_p;
  out.truncated_at = z.truncated_at;
  out.coeffs = poly_mul(z.coeffs, nodes, z.truncated_at);
  return out;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::optional<int> max_degree) {
  if (a.empty() || b.empty()) return {};
  std::size_t size = a.size() + b.size() - 1;
  if (max_degree) size = std::min<std::size_t>(size, static_cast<std::size_t>(*max_degree) + 1);
  std::vector<BigInt> r(size, 0);
  for (std::size_t i = 0; i < a.size() && i < size; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < size; ++j) r[i + j] += a[i] * b[j];
  }
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

bool weil_symmetric(const std::vector<BigInt>& coeffs, int genus, const BigInt& q) {
  if (coeffs.size() != static_cast<std::size_t>(2 * genus + 1)) return false;
  for (int i = 0; i <= genus; ++i) {
    if (coeffs[2 * genus - i] != int_pow(q, genus - i) * coeffs[i]) return false;
  }
  return true;
}

bool weil_roots_ok(const std::vector<BigInt>& coeffs, const BigInt& q, double rel_tol) {
  using C = std::complex<long double>;
  std::vector<BigInt> c = coeffs;
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return true;
  // Scale T = U / sqrt(q) so that the roots should lie on the unit circle.
  const long double sq = std::sqrt(static_cast<long double>(q.get_d()));
  std::vector<long double> a(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) a[i] = static_cast<long double>(c[i].get_d()) / std::pow(sq, static_cast<long double>(i));
  for (auto& x : a) x /= a[deg];
  auto eval = [&](C z) {
    C acc = 0;
    for (std::size_t i = deg + 1; i-- > 0;) acc = acc * z + a[i];
    return acc;
  };
  std::vector<C> roots(deg);
  const C seed(0.4L, 0.9L);
  roots[0] = 1;
  for (std::size_t i = 0; i < deg; ++i) roots[i] = std::pow(seed, static_cast<long double>(i));
  for (int iter = 0; iter < 5000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      C denom = 1;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const C step = eval(roots[i]) / denom;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-17L) break;
  }
  for (const auto& r : roots) {
    if (std::abs(std::abs(r) - 1.0L) > rel_tol) return false;
  }
  return true;
}

}  // namespace hyperlf
