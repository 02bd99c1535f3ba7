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


#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cgrain/error.hpp"
#include "cgrain/special.hpp"

namespace cgrain {
namespace {

struct GammaCase {
  double a, x, value;
};

// 50-digit reference values (tests/oracles/gen_misc_values.py).
constexpr GammaCase kGammaCases[] = {
    {0.5, 0.1, 1.160462484793744246763366},
    {0.5, 3, 0.02535650932346344318956189},
    {1.5, 2, 0.231716552000980693315889},
    {2.5, 0.7, 1.228726964865296499121338},
    {3, 10, 0.005538791431023151887342165},
    {0.1, 0.001, 4.502090867850498697950015},
    {7.5, 4, 1728.632361200589540606139},
    {20, 25, 16248724104442018.73279781},
    {1.25, 40, 1.074961989719683040362376e-17},
};

// Gamma(a, x) by adaptive Gauss-Kronrod on [x, inf).
double quadrature_gamma(double a, double x) {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [a](double t) { return std::exp((a - 1.0) * std::log(t) - t); };
  return gauss_kronrod<double, 61>::integrate(f, x, std::numeric_limits<double>::infinity(), 15,
                                              1e-14);
}

TEST(IncompleteGamma, MatchesHighPrecisionValues) {
  for (const auto& c : kGammaCases) {
    EXPECT_NEAR(upper_incomplete_gamma(c.a, c.x), c.value, 1e-12 * c.value)
        << "a=" << c.a << " x=" << c.x;
  }
}

TEST(IncompleteGamma, MatchesQuadratureOnGrid) {
  for (int i = 0; i < 50; ++i) {
    const double a = 0.3 + 0.17 * (i % 10);
    const double x = 0.05 + 0.4 * (i / 10) + 0.031 * i;
    const double ref = quadrature_gamma(a, x);
    EXPECT_NEAR(upper_incomplete_gamma(a, x), ref, 1e-10 * ref) << "a=" << a << " x=" << x;
  }
}

TEST(IncompleteGamma, ExponentialCase) {
  for (double x = 0.0; x <= 30.0; x += 0.37) {
    EXPECT_NEAR(upper_incomplete_gamma(1.0, x), std::exp(-x), 1e-13 * std::exp(-x));
  }
  EXPECT_NEAR(upper_incomplete_gamma(2.5, 0.0), std::tgamma(2.5), 1e-14);
}

TEST(IncompleteGamma, RejectsBadArguments) {
  EXPECT_THROW(upper_incomplete_gamma(0.0, 1.0), Error);
  EXPECT_THROW(upper_incomplete_gamma(1.0, -1.0), Error);
}

TEST(UniversalGroup, PolynomialCoefficients) {
  const std::vector<double> c{1.0, 0.25};
  EXPECT_DOUBLE_EQ(universal_group_G(c, 2.0), 2.0 + 0.25 * 4.0 / 2.0);
  EXPECT_DOUBLE_EQ(universal_group_G_prime(c, 2.0), 1.5);
  EXPECT_DOUBLE_EQ(universal_group_G(c, 0.0), 0.0);
}

TEST(UniversalGroup, CoefficientConditions) {
  EXPECT_NO_THROW(validate_universal_group_coefficients(std::vector<double>{1.0, 0.4, 0.1}));
  auto code = [](std::vector<double> c) {
    try {
      validate_universal_group_coefficients(c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code({0.0, 0.1}), ErrorCode::CoefficientConditionViolated);
  EXPECT_EQ(code({1.0, 0.6, 0.4}), ErrorCode::CoefficientConditionViolated);
  EXPECT_NO_THROW(validate_universal_group_coefficients(std::vector<double>{1.0, 0.5}));
  EXPECT_EQ(code({1.0, -0.1}), ErrorCode::CoefficientConditionViolated);
}

TEST(UniversalGroup, GeneratorSumsExponentialSeries) {
  // a_k = 1 / (2^k k!) gives G(t) = 2 (e^(t/2) - 1).
  const CoefficientGenerator gen = [](std::size_t k) {
    return std::exp(-static_cast<double>(k) * std::log(2.0) - std::lgamma(k + 1.0));
  };
  for (double t = 0.0; t <= 8.0; t += 0.25) {
    EXPECT_NEAR(universal_group_G(gen, t), 2.0 * std::expm1(t / 2.0), 1e-12 * (1.0 + t * t));
    EXPECT_NEAR(universal_group_G_prime(gen, t), std::exp(t / 2.0), 1e-12 * std::exp(t / 2.0));
  }
}

TEST(UniversalGroup, SlowSeriesHitsTruncationCap) {
  // a_k = 1e100 0.99^k / k!: terms peak near k = 0.99 t, past the cap at t = 150.
  // The scale keeps a_k away from underflow, since a_k < a_0 / k! always.
  const CoefficientGenerator slow = [](std::size_t k) {
    return std::exp(100 * std::log(10.0) + static_cast<double>(k) * std::log(0.99) -
                    std::lgamma(k + 1.0));
  };
  EXPECT_NO_THROW(universal_group_G(slow, 5.0));
  try {
    universal_group_G(slow, 150.0);
    FAIL() << "expected TruncationCapHit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationCapHit);
  }
}

}  // namespace
}  // namespace cgrain
