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

#ifndef AQSIM_SPECIAL_HPP
#define AQSIM_SPECIAL_HPP

namespace aqsim {

/// Error function. Maclaurin series below |x| = 2.5, continued fraction for
/// the complement above. Max relative error measured against a truncated
/// Taylor reference with certified remainder: < 2e-15 on |x| <= 6.
double erf(double x);

/// Complementary error function, to good relative accuracy for x >= 0.
double erfc(double x);

/// Inverse of erf on (-1, 1). Rational initial guess polished by two Newton
/// steps; erfinv(erf(x)) = x to better than 1e-14 for |x| <= 4.
/// Throws std::domain_error at or outside +/-1.
double erfinv(double y);

/// Standard normal CDF and its inverse (Wichura's AS241 quantile plus one
/// Newton polish). normal_quantile accepts p strictly inside (0, 1).
double normal_cdf(double x);
double normal_quantile(double p);

}  // namespace aqsim

#endif  // AQSIM_SPECIAL_HPP
