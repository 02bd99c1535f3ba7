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

#include "cgrain/special.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cgrain/error.hpp"

namespace cgrain {

namespace {

constexpr int kMaxGammaIterations = 500;
constexpr double kGammaEps = 1e-15;
constexpr double kTiny = 1e-300;

// gamma(a, x) = e^-x x^a sum_n x^n / (a (a+1) ... (a+n))
double lower_gamma_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n <= kMaxGammaIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kGammaEps) {
      return sum * std::exp(-x + a * std::log(x));
    }
  }
  throw Error(ErrorCode::TruncationCapHit, "incomplete gamma series did not converge");
}

double upper_gamma_continued_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxGammaIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kGammaEps) return std::exp(-x + a * std::log(x)) * h;
  }
  throw Error(ErrorCode::TruncationCapHit, "incomplete gamma continued fraction did not converge");
}

void check_condition(std::size_t k, double ak, double next) {
  if (!(ak > static_cast<double>(k + 1) * next)) {
    throw Error(ErrorCode::CoefficientConditionViolated,
                "a_" + std::to_string(k) + " must exceed " + std::to_string(k + 1) + " * a_" +
                    std::to_string(k + 1));
  }
}

void check_sign(std::size_t k, double ak) {
  if (!std::isfinite(ak) || ak < 0.0 || (k == 0 && !(ak > 0.0))) {
    throw Error(ErrorCode::CoefficientConditionViolated,
                k == 0 ? "a_0 must be positive" : "a_" + std::to_string(k) + " must be nonnegative");
  }
}

template <typename TermFn>
double sum_series(const CoefficientGenerator& coeffs, double t, TermFn term_of) {
  if (t == 0.0) {
    // Only the k = 0 term of G' survives at t = 0; G(0) = 0.
    return term_of(0, coeffs(0), t);
  }
  double sum = 0.0;
  double prev = coeffs(0);
  check_sign(0, prev);
  for (std::size_t k = 0; k < kMaxSeriesTerms; ++k) {
    const double next = coeffs(k + 1);
    check_sign(k + 1, next);
    check_condition(k, prev, next);
    const double term = term_of(k, prev, t);
    sum += term;
    if (std::abs(term) < 1e-14 * std::abs(sum)) return sum;
    prev = next;
  }
  throw Error(ErrorCode::TruncationCapHit,
              "G(t) did not converge within " + std::to_string(kMaxSeriesTerms) + " terms");
}

}  // namespace

double upper_incomplete_gamma(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::NonPositiveShape, "incomplete gamma needs a > 0");
  }
  if (!(x >= 0.0)) throw Error(ErrorCode::DomainViolation, "incomplete gamma needs x >= 0");
  if (x == 0.0) return std::tgamma(a);
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return std::tgamma(a) - lower_gamma_series(a, x);
  return upper_gamma_continued_fraction(a, x);
}

void validate_universal_group_coefficients(std::span<const double> coeffs) {
  if (coeffs.empty()) {
    throw Error(ErrorCode::CoefficientConditionViolated, "coefficient list is empty");
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) check_sign(k, coeffs[k]);
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) check_condition(k, coeffs[k], coeffs[k + 1]);
}

double universal_group_G(std::span<const double> coeffs, double t) {
  validate_universal_group_coefficients(coeffs);
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * t + coeffs[k] / static_cast<double>(k + 1);
  }
  return acc * t;
}

double universal_group_G_prime(std::span<const double> coeffs, double t) {
  validate_universal_group_coefficients(coeffs);
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
  return acc;
}

double universal_group_G(const CoefficientGenerator& coeffs, double t) {
  if (t == 0.0) return 0.0;
  return sum_series(coeffs, t, [](std::size_t k, double ak, double x) {
    return ak * std::pow(x, static_cast<double>(k + 1)) / static_cast<double>(k + 1);
  });
}

double universal_group_G_prime(const CoefficientGenerator& coeffs, double t) {
  return sum_series(coeffs, t, [](std::size_t k, double ak, double x) {
    return k == 0 ? ak : ak * std::pow(x, static_cast<double>(k));
  });
}

}  // namespace cgrain
