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

// Quadrature oracles for the gamma kernel. Both use the trapezoid rule on
// smooth, rapidly decaying integrands over the real line, where it
// converges geometrically in the step size.

#pragma once

#include <cmath>

#include "hyperlf/bigfloat.hpp"
#include "hyperlf/fecheck.hpp"

namespace hyperlf::oracle {

/// 2 K_0(2 sqrt(x)) from K_0(z) = int_0^inf exp(-z cosh u) du.
inline BigFloat two_k0_two_sqrt(double x, mpfr_prec_t prec) {
  const BigFloat z = BigFloat(2L, prec) * sqrt(BigFloat(x, prec));
  const double h = 1.0 / 32;
  // exp(-z cosh u) < 2^{-2 prec} beyond this point.
  const double cut = std::acosh(2.0 * prec * std::log(2.0) / z.to_double() + 1) + 1;
  BigFloat sum(prec), u(prec), v(prec);
  for (int k = 0; k * h <= cut; ++k) {
    mpfr_set_d(u.raw(), k * h, MPFR_RNDN);
    mpfr_cosh(v.raw(), u.raw(), MPFR_RNDN);
    mpfr_mul(v.raw(), v.raw(), z.raw(), MPFR_RNDN);
    mpfr_neg(v.raw(), v.raw(), MPFR_RNDN);
    mpfr_exp(v.raw(), v.raw(), MPFR_RNDN);
    if (k == 0) mpfr_div_ui(v.raw(), v.raw(), 2, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), v.raw(), MPFR_RNDN);
  }
  mpfr_mul_d(sum.raw(), sum.raw(), 2 * h, MPFR_RNDN);
  return sum;
}

/// int_0^inf phi_g(x) dx = int phi_g(e^u) e^u du over the real line.
inline BigFloat integral_over_half_line(const GammaKernel& kernel, mpfr_prec_t prec) {
  const int g = kernel.genus();
  const double h = 1.0 / 16;
  const double lo = -90;
  // phi_g(x) ~ exp(-g x^{1/g}); stop once that is below 2^{-prec}.
  const double hi = g * std::log(prec * std::log(2.0) / g + 10);
  BigFloat sum(prec), x(prec);
  for (double u = lo; u <= hi; u += h) {
    mpfr_set_d(x.raw(), u, MPFR_RNDN);
    mpfr_exp(x.raw(), x.raw(), MPFR_RNDN);
    const BigFloat v = kernel.phi(x, prec);
    mpfr_fma(sum.raw(), v.raw(), x.raw(), sum.raw(), MPFR_RNDN);
  }
  mpfr_mul_d(sum.raw(), sum.raw(), h, MPFR_RNDN);
  return sum;
}

}  // namespace hyperlf::oracle
