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

#include "hyperlf/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperlf/errors.hpp"
#include "json_util.hpp"

namespace hyperlf {

bool LSeriesData::operator==(const LSeriesData& other) const {
  if (genus != other.genus || conductor != other.conductor || M != other.M || a != other.a) return false;
  if (factors.size() != other.factors.size()) return false;
  for (auto it = factors.begin(), jt = other.factors.begin(); it != factors.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    const auto &x = it->second, &y = jt->second;
    if (x.p != y.p || x.coeffs != y.coeffs || x.truncated_at != y.truncated_at || x.f_p != y.f_p) return false;
  }
  return true;
}

BigInt conductor(const std::vector<BigInt>& bad_primes, const std::vector<BadPrimeReport>& reports,
                 const std::map<BigInt, LocalFactorInv>& overrides) {
  std::map<BigInt, int> exponent;
  auto add = [&](const BigInt& p, int f, const char* source) {
    if (std::find(bad_primes.begin(), bad_primes.end(), p) == bad_primes.end()) {
      throw ConfigurationError(std::string(source) + " for p=" + p.get_str() + ", which is not a bad prime");
    }
    if (!exponent.emplace(p, f).second) {
      throw ConfigurationError("bad prime p=" + p.get_str() + " has more than one data source");
    }
  };
  for (const auto& rep : reports) add(rep.p, rep.f_p, "computed data");
  for (const auto& [p, lf] : overrides) add(p, lf.f_p, "override");
  BigInt N = 1;
  for (const auto& p : bad_primes) {
    auto it = exponent.find(p);
    if (it == exponent.end()) throw ConfigurationError("bad prime p=" + p.get_str() + " has no local data");
    if (it->second < 0) throw ConfigurationError("negative conductor exponent at p=" + p.get_str());
    N *= int_pow(p, static_cast<unsigned long>(it->second));
  }
  return N;
}

long double log_phi_bound(int g, long double x) {
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  return std::log(2.0L) + 0.5L * ((g - 1) * std::log(two_pi) - std::log(static_cast<long double>(g))) +
         (1.0L - g) / (2.0L * g) * std::log(x) - g * std::pow(x, 1.0L / g);
}

namespace {

long double log_scale(const BigInt& N, int g) {
  // log A with A = sqrt(N) / (2 pi)^g.
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, N.get_mpz_t());
  const long double logN = std::log(static_cast<long double>(mant)) + exp2 * std::log(2.0L);
  return 0.5L * logN - g * std::log(2 * std::numbers::pi_v<long double>);
}

// d_k(n) for n in [lo, hi), by dividing out the primes up to sqrt(hi);
// d_k(p^e) = binom(e + k - 1, k - 1).
void divisor_function(unsigned k, std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& small_primes,
                      std::vector<double>& out) {
  const std::size_t len = hi - lo;
  std::vector<std::uint64_t> rest(len);
  out.assign(len, 1.0);
  for (std::size_t i = 0; i < len; ++i) rest[i] = lo + i;
  auto local = [k](unsigned e) {
    double c = 1;
    for (unsigned i = 1; i <= e; ++i) c = c * (k - 1 + i) / i;
    return c;
  };
  for (std::uint64_t p : small_primes) {
    if (p * p >= hi) break;
    for (std::uint64_t n = (lo + p - 1) / p * p; n < hi; n += p) {
      const std::size_t i = n - lo;
      unsigned e = 0;
      while (rest[i] % p == 0) {
        rest[i] /= p;
        ++e;
      }
      out[i] *= local(e);
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (rest[i] > 1) out[i] *= k;
  }
}

// Largest number of divisors of any n <= 10^k, k = 0..18.
constexpr std::uint32_t kMaxDivisors[] = {1,   4,    12,   32,    64,    128,   240,   448,   768,   1344,
                                          2304, 4032, 6720, 10752, 17280, 26880, 41472, 64512, 103680};

long double log_sigma_envelope(std::uint64_t n) {
  std::uint64_t bound = 1;
  for (std::uint32_t d : kMaxDivisors) {
    if (n <= bound) return std::log(static_cast<long double>(d));
    if (bound > UINT64_MAX / 10) break;
    bound *= 10;
  }
  return std::log(2.0L) + 0.5L * std::log(static_cast<long double>(n));
}

// Sum over n of n^alpha d_k(n)^beta phi_bound(n t / A).
class TailSum {
 public:
  TailSum(const BigInt& N, int g, long double t, double alpha, unsigned k, double beta)
      : g_(g), alpha_(alpha), k_(k), beta_(beta) {
    if (N < 1) throw InvalidArgument("conductor must be positive");
    if (g < 1) throw InvalidArgument("genus must be positive");
    if (!(t > 0)) throw InvalidArgument("theta argument must be positive");
    log_inv_scale_ = std::log(t) - log_scale(N, g);
    log_const_ = std::log(2.0) + 0.5 * ((g - 1) * std::log(2 * std::numbers::pi) - std::log(static_cast<double>(g)));
  }

  // Upper bound for log of the term at n with d_k(n) replaced by its envelope.
  long double log_envelope(std::uint64_t n) const {
    const long double ln = std::log(static_cast<long double>(n));
    return alpha_ * ln + beta_ * (k_ - 1) * log_sigma_envelope(n) + log_phi_bound(g_, std::exp(ln + log_inv_scale_));
  }

  // An L beyond which all terms together are below exp(log_floor).
  std::uint64_t horizon(long double log_floor) const {
    std::uint64_t L = 16;
    for (;;) {
      const long double ln = std::log(static_cast<long double>(L));
      const long double env = log_envelope(L);
      if (env + ln < log_floor - 20 && log_envelope(2 * L) < env) return L;
      L = L * 5 / 4;
    }
  }

  // Visits terms n = hi-1 down to lo in blocks; stops when visit returns true.
  template <class Visit>
  bool scan_down(std::uint64_t lo, std::uint64_t hi, Visit&& visit) const {
    const auto small_primes = primes_up_to(static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(hi))) + 2);
    const std::uint64_t block = 1 << 16;
    std::vector<double> d;
    while (hi > lo) {
      const std::uint64_t b = hi - lo > block ? hi - block : lo;
      divisor_function(k_, b, hi, small_primes, d);
      for (std::uint64_t n = hi; n-- > b;) {
        if (visit(n, term(n, d[n - b]))) return true;
      }
      hi = b;
    }
    return false;
  }

 private:
  double term(std::uint64_t n, double dk) const {
    const double ln = std::log(static_cast<double>(n));
    const double lx = ln + log_inv_scale_;
    return std::exp(alpha_ * ln + log_const_ + (1.0 - g_) / (2.0 * g_) * lx - g_ * std::exp(lx / g_)) *
           std::pow(dk, beta_);
  }

  int g_;
  double alpha_;
  unsigned k_;
  double beta_;
  double log_inv_scale_ = 0;
  double log_const_ = 0;
};

// Smallest M with sum_{n > M} term(n) < eps.
std::uint64_t tail_cutoff(const TailSum& tail, long double log_eps) {
  const std::uint64_t L = tail.horizon(log_eps);
  const double eps = std::exp(static_cast<double>(log_eps));
  double suffix = 0;
  std::uint64_t result = 0;
  tail.scan_down(1, L + 1, [&](std::uint64_t n, double term) {
    suffix += term;
    if (suffix >= eps) {
      result = n;  // the sum over n' > n is still below eps
      return true;
    }
    return false;
  });
  return result;
}

}  // namespace

std::uint64_t choose_M(const BigInt& N, int g, int target_digits) {
  const TailSum tail(N, g, 1.0L, 1.0, 2, 2.0 * g);
  return std::max<std::uint64_t>(tail_cutoff(tail, -target_digits * std::log(10.0L)), 1);
}

long double coefficient_tail_bound(const BigInt& N, int g, std::uint64_t M, long double t, long double floor) {
  const TailSum tail(N, g, t, 0.5, 2 * static_cast<unsigned>(g), 1.0);
  const std::uint64_t L = tail.horizon(std::log(floor));
  long double sum = 0;
  if (L > M) tail.scan_down(M + 1, L + 1, [&](std::uint64_t, double term) {
    sum += term;
    return false;
  });
  return sum;
}

std::uint64_t coefficient_tail_cutoff(const BigInt& N, int g, long double t, long double eps) {
  const TailSum tail(N, g, t, 0.5, 2 * static_cast<unsigned>(g), 1.0);
  return tail_cutoff(tail, std::log(eps));
}

std::vector<BigInt> inverse_series(const std::vector<BigInt>& P, int degree) {
  if (P.empty() || P[0] != 1) throw InvalidArgument("local factor must have constant term 1");
  std::vector<BigInt> b(static_cast<std::size_t>(std::max(degree, 0)) + 1);
  b[0] = 1;
  for (int k = 1; k <= degree; ++k) {
    BigInt acc = 0;
    const int top = std::min<int>(k, static_cast<int>(P.size()) - 1);
    for (int i = 1; i <= top; ++i) acc -= P[i] * b[k - i];
    b[k] = acc;
  }
  return b;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<BigInt> dirichlet_coefficients(const std::map<BigInt, LocalFactorInv>& factors, std::uint64_t M) {
  std::vector<BigInt> a(M + 1);
  if (M == 0) return a;
  // Smallest prime factor sieve, then a_n = b_{p,k} a_{n / p^k} with p^k || n.
  std::vector<std::uint32_t> spf(M + 1, 0);
  for (std::uint64_t i = 2; i <= M; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= M; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  std::vector<std::vector<BigInt>> series(M + 1);  // indexed by prime
  for (std::uint64_t p = 2; p <= M; ++p) {
    if (spf[p] != p) continue;
    auto it = factors.find(from_u64(p));
    if (it == factors.end()) throw ConfigurationError("no local factor for p=" + std::to_string(p));
    const int needed = truncation_degree(from_u64(p), M);
    const int known = it->second.known_degree();
    if (known < needed) throw InsufficientData(p, needed, known);
    series[p] = inverse_series(it->second.coeffs, needed);
  }
  a[1] = 1;
  for (std::uint64_t n = 2; n <= M; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t m = n;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    a[n] = series[p][k] * a[m];
  }
  return a;
}

std::uint64_t coefficient_checksum(const std::vector<BigInt>& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (std::size_t n = 1; n < a.size(); ++n) {
    if (n > 1) feed(",");
    feed(a[n].get_str());
  }
  return h;
}

std::string lseries_to_json(const LSeriesData& data) {
  using jsonio::Json;
  Json j;
  j["format"] = "hyperlf-lseries";
  j["version"] = 1;
  j["genus"] = data.genus;
  j["conductor"] = data.conductor.get_str();
  j["M"] = data.M;
  Json factors = Json::object();
  for (const auto& [p, lf] : data.factors) {
    Json e;
    e["factor_inv"] = jsonio::bigint_array(lf.coeffs);
    e["f_p"] = lf.f_p;
    if (lf.truncated_at) e["truncated_at"] = *lf.truncated_at;
    factors[p.get_str()] = std::move(e);
  }
  j["factors"] = std::move(factors);
  Json a = Json::array();
  for (std::size_t n = 1; n < data.a.size(); ++n) a.push_back(data.a[n].get_str());
  j["a"] = std::move(a);
  return j.dump() + "\n";
}

LSeriesData lseries_from_json(const std::string& text, const std::string& origin) {
  using namespace jsonio;
  const Json j = parse(text, origin);
  reject_unknown(j, {"format", "version", "genus", "conductor", "M", "factors", "a"}, origin, "$");
  if (require(j, "format", origin, "$") != "hyperlf-lseries") fail(origin, "$.format", "expected 'hyperlf-lseries'");
  if (get_int(require(j, "version", origin, "$"), origin, "$.version") != 1) fail(origin, "$.version", "unsupported version");
  LSeriesData d;
  d.genus = static_cast<int>(get_int(require(j, "genus", origin, "$"), origin, "$.genus"));
  d.conductor = get_bigint(require(j, "conductor", origin, "$"), origin, "$.conductor");
  d.M = get_uint(require(j, "M", origin, "$"), origin, "$.M");
  const Json& factors = require(j, "factors", origin, "$");
  expect_object(factors, origin, "$.factors");
  for (const auto& [key, e] : factors.items()) {
    const std::string path = "$.factors." + key;
    reject_unknown(e, {"factor_inv", "f_p", "truncated_at"}, origin, path);
    LocalFactorInv lf;
    try {
      lf.p = parse_bigint(key);
    } catch (const std::exception&) {
      fail(origin, path, "key is not a prime");
    }
    lf.coeffs = get_bigint_array(require(e, "factor_inv", origin, path), origin, path + ".factor_inv");
    lf.f_p = static_cast<int>(get_int(require(e, "f_p", origin, path), origin, path + ".f_p"));
    if (e.contains("truncated_at")) lf.truncated_at = static_cast<int>(get_int(e["truncated_at"], origin, path + ".truncated_at"));
    d.factors.emplace(lf.p, std::move(lf));
  }
  const auto a = get_bigint_array(require(j, "a", origin, "$"), origin, "$.a");
  if (a.size() != d.M) fail(origin, "$.a", "expected " + std::to_string(d.M) + " coefficients, found " + std::to_string(a.size()));
  d.a.reserve(a.size() + 1);
  d.a.emplace_back(0);
  d.a.insert(d.a.end(), a.begin(), a.end());
  return d;
}

void save_lseries(const LSeriesData& data, const std::string& path) { jsonio::write_file(path, lseries_to_json(data)); }

LSeriesData load_lseries(const std::string& path) { return lseries_from_json(jsonio::read_file(path), path); }

}  // namespace hyperlf
