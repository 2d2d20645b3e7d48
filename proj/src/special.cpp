// Copyright 2026 The aqsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aqsim/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace aqsim {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031;
constexpr double kSqrt2 = 1.4142135623730950488016887242;

// erf(x) = (2/sqrt(pi)) e^{-x^2} sum_k (2x^2)^k x / (2k+1)!!, all terms
// positive, no cancellation. Converges quickly for |x| < 2.5.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 120; ++k) {
    term *= 2.0 * x2 / (2.0 * k + 1.0);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return kTwoOverSqrtPi * std::exp(-x2) * sum;
}

// Legendre continued fraction for erfc(x), x >= 2.5, evaluated by the
// modified Lentz algorithm:
//   erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
double erfc_cf(double x) {
  const double tiny = 1e-300;
  double f = x > tiny ? x : tiny;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 300; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x * x) / (f * std::sqrt(M_PI));
}

// AS241 (Wichura 1988), double-precision branch of the normal quantile.
double ppnd16(double p) {
  static const double a[8] = {
      3.3871328727963666080e0,  1.3314166789178437745e+2,
      1.9715909503065514427e+3, 1.3731693765509461125e+4,
      4.5921953931549871457e+4, 6.7265770927008700853e+4,
      3.3430575583588128105e+4, 2.5090809287301226727e+3};
  static const double b[8] = {
      1.0,                      4.2313330701600911252e+1,
      6.8718700749205790830e+2, 5.3941960214247511077e+3,
      2.1213794301586595867e+4, 3.9307895800092710610e+4,
      2.8729085735721942674e+4, 5.2264952788528545610e+3};
  static const double c[8] = {
      1.42343711074968357734e0,  4.63033784615654529590e0,
      5.76949722146069140550e0,  3.64784832476320460504e0,
      1.27045825245236838258e0,  2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static const double d[8] = {
      1.0,                       2.05319162663775882187e0,
      1.67638483018380384940e0,  6.89767334985100004550e-1,
      1.48103976427480074590e-1, 1.51986665636164571966e-2,
      5.47593808499534494600e-4, 1.05075007164441684324e-9};
  static const double e[8] = {
      6.65790464350110377720e0,  5.46378491116411436990e0,
      1.78482653991729133580e0,  2.96560571828504891230e-1,
      2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static const double f[8] = {
      1.0,                       5.99832206555887937690e-1,
      1.36929880922735805310e-1, 1.48753612908506148525e-2,
      7.86869131145613259100e-4, 1.84631831751005468180e-5,
      1.42151175831644588870e-7, 2.04426310338993978564e-15};

  auto ratpoly = [](const double* num, const double* den, double r) {
    double n = num[7];
    double m = den[7];
    for (int i = 6; i >= 0; --i) {
      n = n * r + num[i];
      m = m * r + den[i];
    }
    return n / m;
  };

  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * ratpoly(a, b, r);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    value = ratpoly(c, d, r - 1.6);
  } else {
    value = ratpoly(e, f, r - 5.0);
  }
  return q < 0.0 ? -value : value;
}

}  // namespace

double erf(double x) {
  const double ax = std::abs(x);
  if (ax < 2.5) return erf_series(x);
  const double tail = erfc_cf(ax);
  const double v = 1.0 - tail;
  return x > 0.0 ? v : -v;
}

double erfc(double x) {
  if (x >= 2.5) return erfc_cf(x);
  if (x <= -2.5) return 2.0 - erfc_cf(-x);
  return 1.0 - erf_series(x);
}

double erfinv(double y) {
  if (!(y > -1.0 && y < 1.0)) {
    throw std::domain_error("erfinv: argument must lie strictly inside (-1, 1)");
  }
  if (y == 0.0) return 0.0;
  double x = ppnd16(0.5 * (1.0 + y)) / kSqrt2;
  // Newton on erf(x) - y; quadratic convergence from the quantile seed.
  for (int it = 0; it < 2; ++it) {
    const double err = erf(x) - y;
    x -= err * std::exp(x * x) / kTwoOverSqrtPi;
  }
  return x;
}

double normal_cdf(double x) { return 0.5 * erfc(-x / kSqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must lie strictly inside (0, 1)");
  }
  double x = ppnd16(p);
  // One polish step; skipped deep in the tails where normal_cdf underflows
  // relative accuracy and AS241 is already at full precision.
  if (std::abs(x) < 8.0) {
    const double pdf =
        std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    x -= (normal_cdf(x) - p) / pdf;
  }
  return x;
}

}  // namespace aqsim
