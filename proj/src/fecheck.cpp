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

#include "hyperlf/fecheck.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hyperlf/errors.hpp"

namespace hyperlf {

namespace {

// RAII scratch registers for the hot loops.
class Scratch {
 public:
  Scratch(std::size_t n, mpfr_prec_t prec) : v_(n) {
    for (auto& x : v_) mpfr_init2(&x, prec);
  }
  ~Scratch() {
    for (auto& x : v_) mpfr_clear(&x);
  }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr operator[](std::size_t i) { return &v_[i]; }

 private:
  std::vector<__mpfr_struct> v_;
};

}  // namespace

// Row k holds the coefficients of Q_k: phi_g(x) = sum_k x^k sum_j c_{k,j} (log x)^j.
//
// Near s = -k, with e = s + k:
//   Gamma(s)^g = ((-1)^k / k!)^g e^{-g} exp(g sum_m e_m e^m),
//   e_1 = -gamma + H_k,  e_m = ((-1)^m zeta(m) + H_k^{(m)}) / m,
// and x^{-s} = x^k exp(-e log x); the residue is the e^{g-1} coefficient.
struct GammaKernel::Table {
  static constexpr std::size_t kChunk = 256;
  static constexpr std::size_t kMaxChunks = 64;

  Table(int g_, mpfr_prec_t prec_) : g(g_), prec(prec_), state(2 * g_ + 4, prec_ + 64) {
    mpfr_const_euler(state[kGamma], MPFR_RNDN);
    mpfr_set_ui(state[kInvFact], 1, MPFR_RNDN);
    for (int m = 1; m < g; ++m) {
      mpfr_set_zero(state[kHarmonic + m], 1);
      if (m >= 2) mpfr_zeta_ui(state[kZeta(m)], static_cast<unsigned long>(m), MPFR_RNDN);
    }
  }

  ~Table() {
    const std::size_t n = rows.load();
    for (std::size_t c = 0; c < kMaxChunks; ++c) {
      if (!chunks[c]) continue;
      for (std::size_t i = 0; i < kChunk * g; ++i) {
        if (c * kChunk + i / g < n) mpfr_clear(&chunks[c][i]);
      }
    }
  }

  mpfr_srcptr coeff(std::size_t k, int j) const { return &chunks[k / kChunk][(k % kChunk) * g + j]; }

  void ensure(std::size_t needed) {
    if (rows.load(std::memory_order_acquire) >= needed) return;
    std::lock_guard<std::mutex> lock(grow_mu);
    std::size_t k = rows.load(std::memory_order_relaxed);
    if (needed > kChunk * kMaxChunks) throw NumericFailure("gamma kernel residue series did not converge");
    for (; k < needed; ++k) append(k);
    rows.store(k, std::memory_order_release);
  }

  int g;
  mpfr_prec_t prec;
  std::array<std::unique_ptr<__mpfr_struct[]>, kMaxChunks> chunks;
  std::atomic<std::size_t> rows{0};
  std::mutex grow_mu;

 private:
  // Slots in `state`: gamma, 1/k!^g, H^{(m)} (m = 1..g-1), zeta(m), then scratch.
  static constexpr std::size_t kGamma = 0;
  static constexpr std::size_t kInvFact = 1;
  static constexpr std::size_t kHarmonic = 1;  // + m, m >= 1
  std::size_t kZeta(int m) const { return static_cast<std::size_t>(g + m); }
  std::size_t kTmp() const { return static_cast<std::size_t>(2 * g + 1); }

  void append(std::size_t k) {
    if (k % kChunk == 0) chunks[k / kChunk] = std::make_unique<__mpfr_struct[]>(kChunk * g);
    const mpfr_prec_t wp = prec + 64;
    mpfr_ptr tmp = state[kTmp()];
    if (k > 0) {
      for (int m = 1; m < g; ++m) {
        mpfr_set_ui(tmp, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_pow_si(tmp, tmp, -m, MPFR_RNDN);
        mpfr_add(state[kHarmonic + m], state[kHarmonic + m], tmp, MPFR_RNDN);
      }
      for (int i = 0; i < g; ++i) mpfr_div_ui(state[kInvFact], state[kInvFact], static_cast<unsigned long>(k), MPFR_RNDN);
    }
    // e_m scaled by g, then b = exp(sum e_m eps^m) to degree g - 1.
    std::vector<BigFloat> e(static_cast<std::size_t>(g), BigFloat(wp)), b(static_cast<std::size_t>(g), BigFloat(wp));
    for (int m = 1; m < g; ++m) {
      if (m == 1) {
        mpfr_sub(e[1].raw(), state[kHarmonic + 1], state[kGamma], MPFR_RNDN);
      } else {
        if (m % 2 == 0) {
          mpfr_add(e[m].raw(), state[kHarmonic + m], state[kZeta(m)], MPFR_RNDN);
        } else {
          mpfr_sub(e[m].raw(), state[kHarmonic + m], state[kZeta(m)], MPFR_RNDN);
        }
        mpfr_div_ui(e[m].raw(), e[m].raw(), static_cast<unsigned long>(m), MPFR_RNDN);
      }
      mpfr_mul_ui(e[m].raw(), e[m].raw(), static_cast<unsigned long>(g), MPFR_RNDN);
    }
    mpfr_set_ui(b[0].raw(), 1, MPFR_RNDN);
    for (int n = 1; n < g; ++n) {
      mpfr_set_zero(b[n].raw(), 1);
      for (int i = 1; i <= n; ++i) {
        mpfr_mul(tmp, e[i].raw(), b[n - i].raw(), MPFR_RNDN);
        mpfr_mul_ui(tmp, tmp, static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_add(b[n].raw(), b[n].raw(), tmp, MPFR_RNDN);
      }
      mpfr_div_ui(b[n].raw(), b[n].raw(), static_cast<unsigned long>(n), MPFR_RNDN);
    }
    const bool negative = (k * static_cast<std::size_t>(g)) % 2 == 1;
    __mpfr_struct* row = &chunks[k / kChunk][(k % kChunk) * g];
    unsigned long jfact = 1;
    for (int j = 0; j < g; ++j) {
      if (j > 0) jfact *= static_cast<unsigned long>(j);
      mpfr_init2(&row[j], prec);
      mpfr_mul(tmp, state[kInvFact], b[g - 1 - j].raw(), MPFR_RNDN);
      mpfr_div_ui(tmp, tmp, jfact, MPFR_RNDN);
      if (negative != (j % 2 == 1)) mpfr_neg(tmp, tmp, MPFR_RNDN);
      mpfr_set(&row[j], tmp, MPFR_RNDN);
    }
  }

  Scratch state;
};

GammaKernel::GammaKernel(int g) : g_(g) {
  if (g < 1) throw InvalidArgument("gamma kernel needs g >= 1");
}

GammaKernel::~GammaKernel() = default;

GammaKernel::Table& GammaKernel::table(mpfr_prec_t working) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = tables_[working];
  if (!slot) slot = std::make_unique<Table>(g_, working);
  return *slot;
}

bool GammaKernel::evaluate(mpfr_srcptr x, mpfr_prec_t working, mpfr_ptr out) const {
  Table& T = table(working);
  Scratch r(5, working);
  mpfr_ptr L = r[0], xk = r[1], poly = r[2], term = r[3], sum = r[4];
  mpfr_log(L, x, MPFR_RNDN);
  mpfr_set_ui(xk, 1, MPFR_RNDN);
  mpfr_set_zero(sum, 1);
  mpfr_exp_t max_exp = 0;
  bool have_max = false;
  int small_run = 0;
  for (std::size_t k = 0;; ++k) {
    T.ensure(k + 1);
    mpfr_set(poly, T.coeff(k, g_ - 1), MPFR_RNDN);
    for (int j = g_ - 2; j >= 0; --j) {
      mpfr_mul(poly, poly, L, MPFR_RNDN);
      mpfr_add(poly, poly, T.coeff(k, j), MPFR_RNDN);
    }
    mpfr_mul(term, xk, poly, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    if (mpfr_zero_p(term)) {
      ++small_run;
    } else {
      const mpfr_exp_t e = mpfr_get_exp(term);
      if (!have_max || e > max_exp) {
        max_exp = e;
        have_max = true;
      }
      small_run = e < max_exp - working ? small_run + 1 : 0;
    }
    if (small_run >= 50) break;
    mpfr_mul(xk, xk, x, MPFR_RNDN);
  }
  if (mpfr_zero_p(sum)) return false;
  if (max_exp - mpfr_get_exp(sum) > working / 2) return false;
  mpfr_set(out, sum, MPFR_RNDN);
  return true;
}

BigFloat GammaKernel::phi(const BigFloat& x, mpfr_prec_t prec) const {
  if (x.sign() <= 0) throw InvalidArgument("phi_g is defined for x > 0 only");
  const mpfr_prec_t limit = 16 * prec;
  // The largest term is about exp(g x^{1/g}) and the sum exp(-g x^{1/g}),
  // so start where the guard is expected to pass.
  mpfr_prec_t working = prec;
  const double xd = x.to_double();
  const double loss = 2 * g_ * std::pow(xd, 1.0 / g_) / std::log(2.0);
  while (loss > working / 2 && working * 2 <= limit) working *= 2;
  BigFloat out(prec);
  for (;;) {
    BigFloat xw = x.with_precision(working);
    BigFloat value(working);
    if (evaluate(xw.raw(), working, value.raw())) {
      mpfr_set(out.raw(), value.raw(), MPFR_RNDN);
      break;
    }
    working *= 2;
    if (working > limit) {
      throw NumericFailure("phi_" + std::to_string(g_) + "(" + x.to_string(10) + ") lost too much precision to cancellation");
    }
  }
  if (working > prec) escalations_.fetch_add(1, std::memory_order_relaxed);
  return out;
}

BigFloat theta(const LSeriesData& ls, const GammaKernel& kernel, const BigFloat& t, mpfr_prec_t prec, unsigned threads) {
  if (t.sign() <= 0) throw InvalidArgument("theta needs t > 0");
  if (kernel.genus() != ls.genus) throw InvalidArgument("kernel genus does not match the L-series");
  const mpfr_prec_t wp = prec + 32;
  // x_n = n * scale, scale = t (2 pi)^g / sqrt(N).
  BigFloat scale = pi(wp + 32);
  mpfr_mul_ui(scale.raw(), scale.raw(), 2, MPFR_RNDN);
  mpfr_pow_ui(scale.raw(), scale.raw(), static_cast<unsigned long>(ls.genus), MPFR_RNDN);
  scale = scale * t.with_precision(wp + 32) / sqrt(BigFloat(ls.conductor, wp + 32));

  const long double skip_below = -static_cast<long double>(prec + 30) * std::log(2.0L);
  auto log_abs = [](const BigInt& v) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(m))) + e * std::log(2.0L);
  };

  constexpr std::size_t kChunks = 64;
  const std::uint64_t M = ls.M;
  std::vector<BigFloat> partial(kChunks, BigFloat(wp));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    BigFloat x(prec), term(wp);
    for (std::size_t c; (c = next.fetch_add(1)) < kChunks;) {
      const std::uint64_t lo = 1 + M * c / kChunks, hi = M * (c + 1) / kChunks;
      for (std::uint64_t n = lo; n <= hi; ++n) {
        const BigInt& a = ls.a[n];
        if (a == 0) continue;
        mpfr_mul_ui(x.raw(), scale.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
        // Terms far below the working precision are never evaluated.
        const long double xd = mpfr_get_ld(x.raw(), MPFR_RNDN);
        if (xd > 1 && log_phi_bound(ls.genus, xd) + log_abs(a) < skip_below) continue;
        const BigFloat ph = kernel.phi(x, prec);
        mpfr_mul_z(term.raw(), ph.raw(), a.get_mpz_t(), MPFR_RNDN);
        mpfr_add(partial[c].raw(), partial[c].raw(), term.raw(), MPFR_RNDN);
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, kChunks));
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto guarded = [&] {
    try {
      work();
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(kChunks);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(guarded);
  guarded();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  BigFloat total(wp);
  for (const auto& s : partial) mpfr_add(total.raw(), total.raw(), s.raw(), MPFR_RNDN);
  return total.with_precision(prec);
}

std::string to_string(FEVerdict v) {
  switch (v) {
    case FEVerdict::kVerified:
      return "verified";
    case FEVerdict::kNotVerified:
      return "not_verified";
    case FEVerdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

FEReport verify_fe(const LSeriesData& ls, const FEOptions& options) {
  if (options.test_points.empty()) throw InvalidArgument("verify_fe needs at least one test point");
  if (!(options.tolerance > 0)) throw InvalidArgument("tolerance must be positive");
  if (ls.a.size() != ls.M + 1) throw InvalidArgument("L-series has " + std::to_string(ls.a.size()) + " slots for M=" + std::to_string(ls.M));
  const mpfr_prec_t prec = options.precision;
  GammaKernel kernel(ls.genus);
  FEReport rep;
  rep.test_points = options.test_points;
  rep.tolerance = options.tolerance;
  rep.M = ls.M;
  rep.precision = prec;
  for (double tp : options.test_points) {
    if (!(tp > 0)) throw InvalidArgument("test points must be positive");
    const BigFloat t(tp, prec);
    const BigFloat inv = BigFloat(1L, prec) / t;
    const BigFloat lhs = theta(ls, kernel, inv, prec, options.threads);
    const BigFloat rhs = t * t * theta(ls, kernel, t, prec, options.threads);
    const BigFloat denom = abs(lhs) + abs(rhs);
    if (denom.is_zero()) {
      rep.residual_plus = rep.residual_minus = 1;
      continue;
    }
    if (options.check_tail) {
      const long double d = denom.to_double();
      const long double floor = 1e-2L * options.tolerance * d;
      const long double tail = coefficient_tail_bound(ls.conductor, ls.genus, ls.M, 1.0L / tp, floor) +
                               tp * tp * coefficient_tail_bound(ls.conductor, ls.genus, ls.M, tp, floor);
      rep.tail_ratio = std::max(rep.tail_ratio, static_cast<double>(tail / d));
      if (tail > floor) {
        const std::uint64_t need =
            std::max(coefficient_tail_cutoff(ls.conductor, ls.genus, 1.0L / tp, floor / 2),
                     coefficient_tail_cutoff(ls.conductor, ls.genus, tp, floor / (2 * tp * tp)));
        throw InsufficientM(ls.M, std::max(need, ls.M + 1));
      }
    }
    rep.residual_plus = std::max(rep.residual_plus, (abs(lhs - rhs) / denom).to_double());
    rep.residual_minus = std::max(rep.residual_minus, (abs(lhs + rhs) / denom).to_double());
  }
  const double tol = options.tolerance;
  const bool plus_ok = rep.residual_plus < tol, minus_ok = rep.residual_minus < tol;
  if (plus_ok && minus_ok) {
    rep.verdict = FEVerdict::kInconclusive;
  } else if (plus_ok || minus_ok) {
    const int w = plus_ok ? 1 : -1;
    rep.root_number = w;
    rep.verdict = rep.residual(-w) > 1e3 * tol ? FEVerdict::kVerified : FEVerdict::kInconclusive;
  } else {
    rep.verdict = FEVerdict::kNotVerified;
  }
  return rep;
}

}  // namespace hyperlf
