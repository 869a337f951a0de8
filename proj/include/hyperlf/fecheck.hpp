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

// Numerical check of Lambda(s) = w Lambda(2 - s) for
// Lambda(s) = N^{s/2} (2 pi)^{-gs} Gamma(s)^g L(s), through the theta series
// Theta(t) = sum a_n phi_g(n t / A), A = sqrt(N) / (2 pi)^g, which satisfies
// Theta(1/t) = w t^2 Theta(t).

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hyperlf/bigfloat.hpp"
#include "hyperlf/lseries.hpp"

namespace hyperlf {

/// phi_g(x) = (1/2 pi i) int Gamma(s)^g x^{-s} ds, summed as the residues at
/// s = 0, -1, -2, ...: phi_g(x) = sum_k x^k Q_k(log x) with deg Q_k = g - 1.
/// Coefficient tables are built lazily per working precision and shared
/// between threads.
class GammaKernel {
 public:
  explicit GammaKernel(int g);
  ~GammaKernel();
  GammaKernel(const GammaKernel&) = delete;
  GammaKernel& operator=(const GammaKernel&) = delete;

  int genus() const { return g_; }

  /// phi_g(x) rounded to `prec` bits. The working precision starts at
  /// prec and doubles while the series loses more than half of it to
  /// cancellation; NumericFailure past 16 * prec.
  BigFloat phi(const BigFloat& x, mpfr_prec_t prec) const;

  /// Number of evaluations that needed a precision above the requested one.
  std::uint64_t escalations() const { return escalations_.load(); }

 private:
  struct Table;
  Table& table(mpfr_prec_t working) const;
  // One pass at a fixed working precision; returns false when the
  // cancellation guard asks for more precision.
  bool evaluate(mpfr_srcptr x, mpfr_prec_t working, mpfr_ptr out) const;

  int g_;
  mutable std::mutex mu_;
  mutable std::map<mpfr_prec_t, std::unique_ptr<Table>> tables_;
  mutable std::atomic<std::uint64_t> escalations_{0};
};

/// Theta(t) = sum_{n<=M} a_n phi_g(n t / A). Terms with |a_n| times the
/// phi_g bound below 2^{-prec-30} are skipped. The sum is split into a fixed
/// number of chunks whose partial sums are added in order, so the value does
/// not depend on `threads`.
BigFloat theta(const LSeriesData& ls, const GammaKernel& kernel, const BigFloat& t, mpfr_prec_t prec,
               unsigned threads = 1);

enum class FEVerdict { kVerified, kNotVerified, kInconclusive };
std::string to_string(FEVerdict v);

struct FEOptions {
  std::vector<double> test_points{1.05, 1.1, 1.3};
  double tolerance = 1e-6;
  mpfr_prec_t precision = BigFloat::kDefaultPrecision;
  unsigned threads = 1;
  /// Require the coefficient tail beyond M to be negligible (InsufficientM otherwise).
  bool check_tail = true;
};

struct FEReport {
  /// max over t of |Theta(1/t) - w t^2 Theta(t)| / (|Theta(1/t)| + |t^2 Theta(t)|)
  double residual_plus = 0;
  double residual_minus = 0;
  std::optional<int> root_number;
  FEVerdict verdict = FEVerdict::kNotVerified;
  std::vector<double> test_points;
  double tolerance = 0;
  std::uint64_t M = 0;
  mpfr_prec_t precision = 0;
  /// Largest coefficient-tail bound relative to the residual denominator.
  double tail_ratio = 0;

  double residual(int w) const { return w > 0 ? residual_plus : residual_minus; }
};

/// Tries w = +1, then w = -1. A sign is accepted when its residual is below
/// the tolerance and the other sign's residual exceeds 1000 times the
/// tolerance; both passing or a weak margin gives kInconclusive.
FEReport verify_fe(const LSeriesData& ls, const FEOptions& options = {});

}  // namespace hyperlf
