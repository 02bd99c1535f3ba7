/*
 * Copyright (c) 2026, The cgrain Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace cgrain {

/**
 * Upper incomplete gamma function Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt
 * (not regularized).
 *
 * Series expansion of the lower function for x < a + 1, Lentz continued
 * fraction otherwise. Requires a > 0 and x >= 0.
 */
double upper_incomplete_gamma(double a, double x);

/// Coefficient a_k of G(t) = sum_k a_k t^(k+1) / (k+1), for unbounded k.
using CoefficientGenerator = std::function<double(std::size_t)>;

/// Hard cap on terms summed for a generated coefficient sequence.
inline constexpr std::size_t kMaxSeriesTerms = 200;

/// Checks a_0 > 0, a_k >= 0 and a_k > (k+1) a_{k+1} for every adjacent
/// pair in the list. Throws CoefficientConditionViolated.
void validate_universal_group_coefficients(std::span<const double> coeffs);

/// G(t) for a finite coefficient list, evaluated exactly as a polynomial.
double universal_group_G(std::span<const double> coeffs, double t);
/// G'(t) = sum_k a_k t^k.
double universal_group_G_prime(std::span<const double> coeffs, double t);

/// G(t) for an infinite coefficient sequence. Summation stops once a term
/// falls below 1e-14 of the partial sum; more than kMaxSeriesTerms terms
/// throws TruncationCapHit.
double universal_group_G(const CoefficientGenerator& coeffs, double t);
double universal_group_G_prime(const CoefficientGenerator& coeffs, double t);

}  // namespace cgrain
