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

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures_data.hpp"
#include "hyperlf/errors.hpp"
#include "hyperlf/fecheck.hpp"
#include "kernel_oracles.hpp"

namespace hyperlf {
namespace {

double rel_err(const BigFloat& got, const BigFloat& want) { return (abs(got - want) / abs(want)).to_double(); }

LSeriesData toy_series(int g, std::uint64_t M, long value) {
  LSeriesData ls;
  ls.genus = g;
  ls.conductor = 1;
  ls.M = M;
  ls.a.assign(M + 1, BigInt(value));
  ls.a[0] = 0;
  return ls;
}

LSeriesData genus2_series(std::uint64_t M) {
  const auto pc = testdata::genus2_five_primes();
  CurveSpec curve(pc.g, pc.h);
  LSeriesData ls;
  ls.genus = 2;
  ls.M = M;
  for (auto p : primes_up_to(M)) {
    const BigInt P = from_u64(p);
    ls.factors[P] = pc.exponents.count(static_cast<long>(p))
                        ? bad_local_factor(p == 2 ? analyze_p2(curve) : analyze_podd(curve, P), M)
                        : good_local_factor(curve, P, M);
  }
  ls.conductor = BigInt(4) * 3 * 7 * 101 * 163;
  ls.a = dirichlet_coefficients(ls.factors, M);
  return ls;
}

TEST(Kernel, GenusOneIsTheExponential) {
  GammaKernel k(1);
  double worst = 0;
  for (int i = 0; i <= 60; ++i) {
    const double x = 1e-3 * std::pow(3e4, i / 60.0);  // log grid on [1e-3, 30]
    const BigFloat bx(x, 300);
    worst = std::max(worst, rel_err(k.phi(bx, 300), exp(-bx)));
  }
  EXPECT_LT(worst, 1e-20);
  for (double x : {0.1, 1.0, 5.0, 20.0}) {
    const BigFloat bx(x, 300);
    EXPECT_LT(rel_err(k.phi(bx, 300), exp(-bx)), 1e-40) << x;
  }
}

TEST(Kernel, GenusTwoMatchesBesselQuadrature) {
  GammaKernel k(2);
  for (double x : {0.25, 1.0, 4.0}) {
    const BigFloat want = oracle::two_k0_two_sqrt(x, 256);
    EXPECT_LT(rel_err(k.phi(BigFloat(x, 300), 300), want), 1e-15) << x;
  }
}

TEST(Kernel, GenusThreeIntegratesToOne) {
  GammaKernel k(3);
  const BigFloat integral = oracle::integral_over_half_line(k, 160);
  EXPECT_LT(std::abs(integral.to_double() - 1.0), 1e-15);
}

TEST(Kernel, PositiveDecreasingAndUnderTheTailBound) {
  for (int g = 1; g <= 4; ++g) {
    GammaKernel k(g);
    BigFloat prev(0L, 200);
    // Up to g x^{1/g} = 60, where phi_g is about e^{-60}.
    const double top = std::pow(60.0 / g, g);
    for (int i = 0; i <= 40; ++i) {
      const double x = 1e-3 * std::pow(top / 1e-3, i / 40.0);
      const BigFloat v = k.phi(BigFloat(x, 200), 200);
      EXPECT_GT(v.sign(), 0) << "g=" << g << " x=" << x;
      if (i > 0) EXPECT_TRUE(v < prev) << "g=" << g << " x=" << x;
      prev = v;
      if (x >= 1) {
        const double lv = log(v).to_double();
        EXPECT_LE(lv, static_cast<double>(log_phi_bound(g, x))) << "g=" << g << " x=" << x;
      }
    }
  }
}

TEST(Kernel, RejectsNonPositiveArguments) {
  GammaKernel k(2);
  EXPECT_THROW(k.phi(BigFloat(0L, 100), 100), InvalidArgument);
  EXPECT_THROW(k.phi(BigFloat(-1.0, 100), 100), InvalidArgument);
  EXPECT_THROW(GammaKernel(0), InvalidArgument);
}

TEST(Theta, SingleTermIsTheExponential) {
  auto ls = toy_series(1, 5, 0);
  ls.a[1] = 1;
  GammaKernel k(1);
  for (double t : {0.5, 1.0, 1.7}) {
    const BigFloat bt(t, 300);
    const BigFloat want = exp(-(BigFloat(2L, 300) * pi(300) * bt));
    EXPECT_LT(rel_err(theta(ls, k, bt, 300), want), 1e-60) << t;
  }
}

TEST(Theta, AllOnesIsPositiveAndDecreasing) {
  const auto ls = toy_series(1, 200, 1);
  GammaKernel k(1);
  BigFloat prev(0L, 200);
  for (int i = 0; i < 12; ++i) {
    const BigFloat v = theta(ls, k, BigFloat(0.3 + 0.2 * i, 200), 200);
    EXPECT_GT(v.sign(), 0);
    if (i > 0) EXPECT_TRUE(v < prev) << i;
    prev = v;
  }
}

TEST(Theta, IndependentOfThreadCount) {
  const auto ls = genus2_series(3000);
  GammaKernel k(2);
  const BigFloat t(1.1, 200);
  const BigFloat one = theta(ls, k, t, 200, 1);
  const BigFloat three = theta(ls, k, t, 200, 3);
  EXPECT_TRUE(one == three);
}

TEST(Theta, PrecisionDoublingMovesLittle) {
  const auto ls = genus2_series(3000);
  GammaKernel k(2);
  for (double t : {1.05, 1.3}) {
    const BigFloat lo = theta(ls, k, BigFloat(t, 300), 300);
    const BigFloat hi = theta(ls, k, BigFloat(t, 600), 600);
    const double diff = (abs(lo.with_precision(600) - hi) / abs(hi)).to_double();
    EXPECT_LT(diff, std::ldexp(1.0, -150)) << t;
  }
}

TEST(Theta, StableWhenTheCutoffDoubles) {
  const std::uint64_t M = choose_M(BigInt(4) * 3 * 7 * 101 * 163, 2, 12);
  const auto big = genus2_series(2 * M);
  auto small = big;
  small.M = M;
  small.a.resize(M + 1);
  GammaKernel k(2);
  const BigFloat t(1.1, 200);
  const BigFloat a = theta(small, k, t, 200), b = theta(big, k, t, 200);
  EXPECT_LT((abs(a - b) / abs(b)).to_double(), 1e-10);
}

TEST(VerifyFe, NegativeControlRejectsPlusOne) {
  // Theta(t) = 1 / (e^{2 pi t} - 1) is not symmetric under t -> 1/t.
  const auto ls = toy_series(1, 60, 1);
  const auto rep = verify_fe(ls);
  EXPECT_GE(rep.residual_plus, 1e-6);
  EXPECT_NE(rep.root_number, std::optional<int>(1));
  EXPECT_EQ(rep.verdict, FEVerdict::kNotVerified);
}

TEST(VerifyFe, ShortCutoffIsReported) {
  const auto ls = genus2_series(400);
  try {
    verify_fe(ls);
    FAIL() << "expected InsufficientM";
  } catch (const InsufficientM& e) {
    EXPECT_GT(e.required_M(), 400u);
  }
}

}  // namespace
}  // namespace hyperlf
