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


#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cgrain/entropy.hpp"
#include "cgrain/error.hpp"

namespace cgrain {

namespace detail {
struct SpecAccess {
  static const std::array<double, 4>& cached(const EntropySpec& s) noexcept { return s.cached_; }
};
}  // namespace detail

namespace {

using detail::SpecAccess;

constexpr std::array<double, 3> kHeBreakpoints = {0.25, 0.5, 0.75};
constexpr double kBreakpointGuard = 1e-12;

double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

// x^a with 0^a = 0 for a > 0.
double pw(double x, double a) { return x == 0.0 && a > 0 ? 0.0 : std::pow(x, a); }

double universal_G(const EntropySpec& spec, double t) {
  if (const auto* gen = spec.coefficient_generator()) return universal_group_G(*gen, t);
  return universal_group_G(spec.coefficients(), t);
}

double universal_G_prime(const EntropySpec& spec, double t) {
  if (const auto* gen = spec.coefficient_generator()) return universal_group_G_prime(*gen, t);
  return universal_group_G_prime(spec.coefficients(), t);
}

double phi_he(double x) {
  if (x <= 0.25) return x;
  if (x <= 0.5) return 2 * x - 0.25;
  if (x <= 0.75) return 1.75 - 2 * x;
  return 1 - x;
}

// phi without argument checks. `n` is only read by hypoentropy.
double phi_raw(const EntropySpec& spec, double x, std::size_t n) {
  const auto& c = SpecAccess::cached(spec);
  switch (spec.id()) {
    case EntropyId::shannon:
      return -xlogx(x);
    case EntropyId::renyi:
      return pw(x, c[0]);
    case EntropyId::tsallis:
      return (std::pow(x, c[0]) - x) / (1 - c[0]);
    case EntropyId::h_phi_custom:
      return spec.custom_functional()->phi(x);
    case EntropyId::genetic: {
      const double y = x * (1 - x);
      return x - x * x - y * y;
    }
    case EntropyId::paired:
      return -xlogx(x) - xlogx(1 - x);
    case EntropyId::hypoentropy: {
      const double lambda = c[0];
      return (1 + 1 / lambda) * std::log1p(lambda) / double(n) -
             (1 + lambda * x) * std::log1p(lambda * x) / lambda;
    }
    case EntropyId::sharma_mittal_rs:
      return pw(x, c[0]);
    case EntropyId::universal_group:
      return x > 0 ? x * universal_G(spec, -std::log(x)) : 0.0;
    case EntropyId::s_cd: {
      const double a = 1 + c[1];
      if (x == 0) return 0.0;
      return std::numbers::e * upper_incomplete_gamma(a, 1 - c[0] * std::log(x)) / c[2];
    }
    case EntropyId::s_delta:
      return x > 0 && x < 1 ? x * std::pow(-std::log(x), c[0]) : 0.0;
    case EntropyId::borges_roditi:
      return (std::pow(x, c[1]) - std::pow(x, c[0])) / (c[0] - c[1]);
    case EntropyId::group_entropy: {
      const double sigma = c[0];
      const int l = static_cast<int>(c[1]);
      const auto k = spec.coefficients();
      double sum = 0;
      for (std::size_t i = 0; i < k.size(); ++i) {
        sum += k[i] * std::pow(x, -(l + static_cast<int>(i)) * sigma);
      }
      return sum / sigma;
    }
    case EntropyId::s_III: {
      const double u = c[0];
      return (pw(x, 1 + 2 * u) - 2 * pw(x, 1 + u) + pw(x, 1 - u)) / u;
    }
    case EntropyId::s_IV: {
      const double u = c[0];
      return (pw(x, 1 - 2 * u) - 1.5 * pw(x, 1 - u) + 1.5 * pw(x, 1 + u) - pw(x, 1 + 2 * u)) / u;
    }
    case EntropyId::three_param: {
      const double u = c[0], alpha = c[1], beta = c[2];
      return (alpha * pw(x, 1 - 2 * u) + 0.5 * (1 - 3 * alpha + beta) * pw(x, 1 - u) +
              0.5 * (alpha - 1 - 3 * beta) * pw(x, 1 + u) + beta * pw(x, 1 + 2 * u)) /
             u;
    }
    case EntropyId::two_param: {
      const double r = c[0], k = c[1];
      return (pw(x, 1 + r - k) - pw(x, 1 + r + k)) / (2 * k);
    }
    case EntropyId::abe: {
      const double q = c[0];
      return (pw(x, 1 / q) - pw(x, q)) / (q - 1 / q);
    }
    case EntropyId::kaniadakis: {
      const double k = c[0];
      return (pw(x, 1 - k) - pw(x, 1 + k)) / (2 * k);
    }
    case EntropyId::gamma_entropy: {
      const double g = c[0];
      return (pw(x, 1 - g) - pw(x, 1 + 2 * g)) / (3 * g);
    }
    case EntropyId::nath:
      if (c[2] == 1) return c[1] * xlogx(x) / std::numbers::ln2;
      return pw(x, c[1]);
    case EntropyId::havrda_charvat:
      return (pw(x, c[0]) - x) / c[1];
    case EntropyId::mathai_Mq:
      return (pw(x, 2 - c[0]) - x) / (c[0] - 1);
    case EntropyId::mathai_Mq_star:
      return pw(x, 2 - c[0]);
    case EntropyId::counterexample_HE:
      return phi_he(x);
  }
  return 0.0;
}

double h_raw(const EntropySpec& spec, double s) {
  const auto& c = SpecAccess::cached(spec);
  switch (spec.id()) {
    case EntropyId::renyi:
      return std::log(s) / (1 - c[0]);
    case EntropyId::sharma_mittal_rs:
      return std::expm1(c[2] * std::log(s)) / (1 - c[1]);
    case EntropyId::s_cd:
      return s - c[0] / c[2];
    case EntropyId::nath:
      return c[2] == 1 ? s : std::log2(s) / c[0];
    case EntropyId::mathai_Mq_star:
      return std::log(s) / (c[0] - 1);
    case EntropyId::h_phi_custom: {
      const auto& f = *spec.custom_functional();
      return f.h ? f.h(s) : s;
    }
    default:
      return s;
  }
}

void check_distribution(const EntropySpec& spec, std::span<const double> probs) {
  if (probs.empty()) throw Error(ErrorCode::EmptyInput, "empty distribution");
  if (!spec.descriptor().zero_safe) {
    for (double x : probs) {
      if (x == 0.0) {
        throw Error(ErrorCode::ZeroUnsupported,
                    spec.label() + " does not admit zero probabilities");
      }
    }
  }
  if (spec.id() == EntropyId::s_delta) {
    const double bound = 1 + std::log(double(probs.size()));
    if (spec.param("delta") > bound) {
      throw Error(ErrorCode::DeltaExceedsBound,
                  spec.label() + ": delta exceeds 1 + ln n = " + std::to_string(bound));
    }
  }
}

// Neumaier-compensated sum of phi over the entries.
double phi_sum(const EntropySpec& spec, std::span<const double> probs) {
  double sum = 0, comp = 0;
  for (double x : probs) {
    const double v = phi_raw(spec, x, probs.size());
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace

double evaluate(const EntropySpec& spec, std::span<const double> probs) {
  check_distribution(spec, probs);
  if (spec.id() == EntropyId::h_phi_custom && !spec.descriptor().phi_available) {
    return spec.custom_functional()->direct(probs);
  }
  return h_raw(spec, phi_sum(spec, probs));
}

double evaluate(const EntropySpec& spec, const FiniteDistribution& p) {
  return evaluate(spec, p.probs());
}

double phi_component(const EntropySpec& spec, double x, std::size_t n) {
  if (!spec.descriptor().phi_available) {
    throw Error(ErrorCode::NoPhiDecomposition, spec.label() + " has no phi decomposition");
  }
  if (!(x >= 0 && x <= 1)) {
    throw Error(ErrorCode::DomainViolation, "phi argument must lie in [0, 1]");
  }
  if (x == 0 && !spec.descriptor().zero_safe) {
    throw Error(ErrorCode::ZeroUnsupported, spec.label() + " is not defined at 0");
  }
  if (spec.descriptor().phi_depends_on_n && n == 0) {
    throw Error(ErrorCode::DimensionRequired, spec.label() + ": phi depends on n");
  }
  return phi_raw(spec, x, n);
}

double phi_prime(const EntropySpec& spec, double x) {
  if (!spec.descriptor().phi_prime_available) {
    throw Error(ErrorCode::NoDerivative, spec.label() + " has no closed-form phi'");
  }
  if (!(x > 0 && x < 1)) throw Error(ErrorCode::DomainViolation, "phi' argument must lie in (0, 1)");
  const auto& c = SpecAccess::cached(spec);
  switch (spec.id()) {
    case EntropyId::shannon:
      return -std::log(x) - 1;
    case EntropyId::renyi:
    case EntropyId::sharma_mittal_rs:
      return c[0] * std::pow(x, c[0] - 1);
    case EntropyId::tsallis:
      return (c[0] * std::pow(x, c[0] - 1) - 1) / (1 - c[0]);
    case EntropyId::h_phi_custom:
      return spec.custom_functional()->phi_prime(x);
    case EntropyId::genetic:
      return 1 - 2 * x - 2 * x * (1 - x) * (1 - 2 * x);
    case EntropyId::paired:
      return std::log1p(-x) - std::log(x);
    case EntropyId::hypoentropy:
      return -std::log1p(c[0] * x) - 1;
    case EntropyId::universal_group: {
      const double t = -std::log(x);
      return universal_G(spec, t) - universal_G_prime(spec, t);
    }
    case EntropyId::s_cd: {
      const double y = 1 - c[0] * std::log(x);
      return c[0] / c[2] * std::pow(y, c[1]) * std::pow(x, c[0] - 1);
    }
    case EntropyId::s_delta: {
      const double t = -std::log(x), delta = c[0];
      return std::pow(t, delta) - delta * std::pow(t, delta - 1);
    }
    case EntropyId::borges_roditi: {
      const double a = c[0], b = c[1];
      return (b * std::pow(x, b - 1) - a * std::pow(x, a - 1)) / (a - b);
    }
    case EntropyId::group_entropy: {
      const double sigma = c[0];
      const int l = static_cast<int>(c[1]);
      const auto k = spec.coefficients();
      double sum = 0;
      for (std::size_t i = 0; i < k.size(); ++i) {
        const int j = l + static_cast<int>(i);
        sum -= j * k[i] * std::pow(x, -j * sigma - 1);
      }
      return sum;
    }
    case EntropyId::s_III: {
      const double u = c[0];
      return ((1 + 2 * u) * std::pow(x, 2 * u) - 2 * (1 + u) * std::pow(x, u) +
              (1 - u) * std::pow(x, -u)) /
             u;
    }
    case EntropyId::s_IV: {
      const double u = c[0];
      return ((1 - 2 * u) * std::pow(x, -2 * u) - 1.5 * (1 - u) * std::pow(x, -u) +
              1.5 * (1 + u) * std::pow(x, u) - (1 + 2 * u) * std::pow(x, 2 * u)) /
             u;
    }
    case EntropyId::three_param: {
      const double u = c[0], alpha = c[1], beta = c[2];
      return (alpha * (1 - 2 * u) * std::pow(x, -2 * u) +
              0.5 * (1 - 3 * alpha + beta) * (1 - u) * std::pow(x, -u) +
              0.5 * (alpha - 1 - 3 * beta) * (1 + u) * std::pow(x, u) +
              beta * (1 + 2 * u) * std::pow(x, 2 * u)) /
             u;
    }
    case EntropyId::two_param: {
      const double r = c[0], k = c[1];
      return ((1 + r - k) * std::pow(x, r - k) - (1 + r + k) * std::pow(x, r + k)) / (2 * k);
    }
    case EntropyId::abe: {
      const double q = c[0];
      return (std::pow(x, 1 / q - 1) / q - q * std::pow(x, q - 1)) / (q - 1 / q);
    }
    case EntropyId::kaniadakis: {
      const double k = c[0];
      return ((1 - k) * std::pow(x, -k) - (1 + k) * std::pow(x, k)) / (2 * k);
    }
    case EntropyId::gamma_entropy: {
      const double g = c[0];
      return ((1 - g) * std::pow(x, -g) - (1 + 2 * g) * std::pow(x, 2 * g)) / (3 * g);
    }
    case EntropyId::nath:
      if (c[2] == 1) return c[1] * (std::log(x) + 1) / std::numbers::ln2;
      return c[1] * std::pow(x, c[1] - 1);
    case EntropyId::havrda_charvat:
      return (c[0] * std::pow(x, c[0] - 1) - 1) / c[1];
    case EntropyId::mathai_Mq:
      return ((2 - c[0]) * std::pow(x, 1 - c[0]) - 1) / (c[0] - 1);
    case EntropyId::mathai_Mq_star:
      return (2 - c[0]) * std::pow(x, 1 - c[0]);
    case EntropyId::counterexample_HE:
      for (double b : kHeBreakpoints) {
        if (std::abs(x - b) <= kBreakpointGuard) {
          throw Error(ErrorCode::BreakpointHit, "phi_E is not differentiable at " + std::to_string(b));
        }
      }
      if (x < 0.25) return 1;
      if (x < 0.5) return 2;
      if (x < 0.75) return -2;
      return -1;
  }
  return 0.0;
}

double h_outer(const EntropySpec& spec, double s) {
  if (!spec.descriptor().h_available) {
    throw Error(ErrorCode::NoDecomposition, spec.label() + " has no (h, phi) decomposition");
  }
  return h_raw(spec, s);
}

double h_outer_prime(const EntropySpec& spec, double s) {
  if (!spec.descriptor().h_available) {
    throw Error(ErrorCode::NoDecomposition, spec.label() + " has no (h, phi) decomposition");
  }
  const auto& c = SpecAccess::cached(spec);
  switch (spec.id()) {
    case EntropyId::renyi:
      return 1 / ((1 - c[0]) * s);
    case EntropyId::sharma_mittal_rs:
      return -std::pow(s, c[2] - 1) / (c[0] - 1);
    case EntropyId::nath:
      return c[2] == 1 ? 1.0 : 1 / (c[0] * s * std::numbers::ln2);
    case EntropyId::mathai_Mq_star:
      return 1 / ((c[0] - 1) * s);
    case EntropyId::h_phi_custom: {
      const auto& f = *spec.custom_functional();
      if (!f.h) return 1.0;
      if (!f.h_prime) throw Error(ErrorCode::NoDerivative, spec.label() + " has no closed-form h'");
      return f.h_prime(s);
    }
    default:
      return 1.0;
  }
}

std::span<const double> phi_breakpoints(const EntropySpec& spec) noexcept {
  if (spec.id() == EntropyId::counterexample_HE) return kHeBreakpoints;
  return {};
}

bool is_supported_transform(EntropyId source, EntropyId target) noexcept {
  auto pair = [&](EntropyId a, EntropyId b) {
    return (source == a && target == b) || (source == b && target == a);
  };
  return pair(EntropyId::renyi, EntropyId::tsallis) ||
         pair(EntropyId::tsallis, EntropyId::havrda_charvat) ||
         pair(EntropyId::tsallis, EntropyId::mathai_Mq) ||
         pair(EntropyId::mathai_Mq, EntropyId::mathai_Mq_star);
}

namespace {

void require_transform(const EntropySpec& source, EntropyId target) {
  if (!is_supported_transform(source.id(), target)) {
    throw Error(ErrorCode::UnsupportedPair, "no monotone transform from " +
                                                std::string(to_string(source.id())) + " to " +
                                                std::string(to_string(target)));
  }
}

double log1p_checked(double arg_minus_one) {
  if (!(1 + arg_minus_one > 0)) {
    throw Error(ErrorCode::DomainViolation, "transform argument 1 + x must be positive");
  }
  return std::log1p(arg_minus_one);
}

}  // namespace

EntropySpec transform_target(const EntropySpec& source, EntropyId target) {
  require_transform(source, target);
  const double q = source.param("q");
  const bool mathai_swap = (source.id() == EntropyId::tsallis && target == EntropyId::mathai_Mq) ||
                           (source.id() == EntropyId::mathai_Mq && target == EntropyId::tsallis);
  return EntropySpec::make(target, {{"q", mathai_swap ? 2 - q : q}});
}

double transform_between(const EntropySpec& source, EntropyId target, double value) {
  require_transform(source, target);
  const double q = source.param("q");
  const EntropyId from = source.id();
  if (from == EntropyId::tsallis && target == EntropyId::renyi) {
    return log1p_checked((1 - q) * value) / (1 - q);
  }
  if (from == EntropyId::renyi && target == EntropyId::tsallis) {
    return std::expm1((1 - q) * value) / (1 - q);
  }
  if (from == EntropyId::tsallis && target == EntropyId::havrda_charvat) {
    return (1 - q) * value / (std::exp2(1 - q) - 1);
  }
  if (from == EntropyId::havrda_charvat && target == EntropyId::tsallis) {
    return (std::exp2(1 - q) - 1) * value / (1 - q);
  }
  if (from == EntropyId::mathai_Mq && target == EntropyId::mathai_Mq_star) {
    return log1p_checked((q - 1) * value) / (q - 1);
  }
  if (from == EntropyId::mathai_Mq_star && target == EntropyId::mathai_Mq) {
    return std::expm1((q - 1) * value) / (q - 1);
  }
  // tsallis <-> mathai_Mq: same functional with q -> 2 - q.
  (void)transform_target(source, target);
  return value;
}

}  // namespace cgrain
