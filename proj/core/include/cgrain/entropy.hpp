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

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cgrain/distribution.hpp"
#include "cgrain/special.hpp"

namespace cgrain {

class EntropySpec;
namespace detail {
struct SpecAccess;
}

enum class EntropyId {
  shannon,
  renyi,
  tsallis,
  h_phi_custom,
  genetic,
  paired,
  hypoentropy,
  sharma_mittal_rs,
  universal_group,
  s_cd,
  s_delta,
  borges_roditi,
  group_entropy,
  s_III,
  s_IV,
  three_param,
  two_param,
  abe,
  kaniadakis,
  gamma_entropy,
  nath,
  havrda_charvat,
  mathai_Mq,
  mathai_Mq_star,
  counterexample_HE,
};

inline constexpr std::array kAllEntropyIds = {
    EntropyId::shannon,        EntropyId::renyi,          EntropyId::tsallis,
    EntropyId::h_phi_custom,   EntropyId::genetic,        EntropyId::paired,
    EntropyId::hypoentropy,    EntropyId::sharma_mittal_rs, EntropyId::universal_group,
    EntropyId::s_cd,           EntropyId::s_delta,        EntropyId::borges_roditi,
    EntropyId::group_entropy,  EntropyId::s_III,          EntropyId::s_IV,
    EntropyId::three_param,    EntropyId::two_param,      EntropyId::abe,
    EntropyId::kaniadakis,     EntropyId::gamma_entropy,  EntropyId::nath,
    EntropyId::havrda_charvat, EntropyId::mathai_Mq,      EntropyId::mathai_Mq_star,
    EntropyId::counterexample_HE,
};

std::string_view to_string(EntropyId id) noexcept;
/// Throws UnknownEntropy.
EntropyId entropy_id_from_string(std::string_view name);

/**
 * A user-supplied entropy. Either give phi (and optionally h, defaulting to
 * the identity) for H(P) = h(sum_i phi(p_i)), or give only `direct` for a
 * black-box functional without a known decomposition.
 */
struct CustomFunctional {
  std::string name;
  std::function<double(double)> phi;
  std::function<double(double)> h;
  std::function<double(double)> phi_prime;
  std::function<double(double)> h_prime;
  std::function<double(std::span<const double>)> direct;
  bool zero_safe = true;
};

/// What a spec supports beyond plain evaluation.
struct FunctionalDescriptor {
  bool zero_safe = true;
  bool phi_available = true;
  bool h_available = true;
  bool h_is_identity = true;
  bool phi_prime_available = true;
  bool phi_depends_on_n = false;
};

/**
 * A validated entropy identifier plus its parameters. Immutable; cheap to
 * copy (callables are shared).
 *
 * Parameter names follow the usual symbols: q, lambda, r, s, c, d, delta, a,
 * b, alpha, beta, tau, k, gamma, sigma, l, m. Universal-group coefficients and
 * group-entropy weights are lists and live in coefficients().
 */
class EntropySpec {
 public:
  using Params = std::map<std::string, double, std::less<>>;

  /// Validates parameters against the id's domain. Throws MissingParam,
  /// UnknownParam or ParamOutOfDomain.
  static EntropySpec make(EntropyId id, Params params = {});
  static EntropySpec universal_group(std::vector<double> coeffs);
  static EntropySpec universal_group(CoefficientGenerator coeffs, std::string name);
  /// Weights k_j for j = l, l+1, ..., l + k.size() - 1.
  static EntropySpec group_entropy(int l, std::vector<double> k, double sigma);
  static EntropySpec custom(CustomFunctional functional);

  static EntropySpec shannon() { return make(EntropyId::shannon); }
  static EntropySpec renyi(double q) { return make(EntropyId::renyi, {{"q", q}}); }
  static EntropySpec tsallis(double q) { return make(EntropyId::tsallis, {{"q", q}}); }
  static EntropySpec counterexample() { return make(EntropyId::counterexample_HE); }

  EntropyId id() const noexcept { return id_; }
  const Params& params() const noexcept { return params_; }
  /// Throws MissingParam if absent.
  double param(std::string_view name) const;
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  const CoefficientGenerator* coefficient_generator() const noexcept { return generator_.get(); }
  const CustomFunctional* custom_functional() const noexcept { return custom_.get(); }
  const FunctionalDescriptor& descriptor() const noexcept { return descriptor_; }

  /// Compact display name, e.g. "renyi[q=0.5]". Contains no commas.
  std::string label() const;

 private:
  friend struct detail::SpecAccess;
  EntropySpec() = default;
  void finalize();

  EntropyId id_ = EntropyId::shannon;
  Params params_;
  std::vector<double> coeffs_;
  std::shared_ptr<const CoefficientGenerator> generator_;
  std::string generator_name_;
  std::shared_ptr<const CustomFunctional> custom_;
  FunctionalDescriptor descriptor_;
  std::array<double, 4> cached_{};  // per-id numeric parameters, filled by finalize()
};

/// {"id": "<tag>", "params": {...}}.
nlohmann::json to_json(const EntropySpec& spec);
/// Rejects unknown ids, unknown params and missing params (listing the
/// required names). Custom functionals cannot be read from JSON.
EntropySpec spec_from_json(const nlohmann::json& j);

/**
 * H(P) for the spec. Every catalog entry is computed as h(sum_i phi(p_i)),
 * so the decomposition and the value agree exactly.
 *
 * Throws ZeroUnsupported when P has a zero entry and the spec is not
 * zero-safe, DeltaExceedsBound for s_delta with delta > 1 + ln n.
 */
double evaluate(const EntropySpec& spec, const FiniteDistribution& p);
double evaluate(const EntropySpec& spec, std::span<const double> probs);

/// phi(x) for x in [0, 1]. `n` is the dimension context and is required
/// (nonzero) for hypoentropy, whose phi depends on it.
double phi_component(const EntropySpec& spec, double x, std::size_t n = 0);

/// Closed-form phi'(x) for 0 < x < 1. Throws NoDerivative when only a
/// black-box phi is known, BreakpointHit at a kink of the counterexample.
double phi_prime(const EntropySpec& spec, double x);

/// The outer map h and its derivative; the identity for pure sum forms.
double h_outer(const EntropySpec& spec, double s);
double h_outer_prime(const EntropySpec& spec, double s);

/// Breakpoints of a piecewise phi (empty for smooth ones).
std::span<const double> phi_breakpoints(const EntropySpec& spec) noexcept;

/**
 * Maps a value of `source` to the value of the related entropy `target`
 * with matching parameters. Supported pairs, in both directions:
 * renyi-tsallis, tsallis-havrda_charvat, tsallis-mathai_Mq (q -> 2 - q) and
 * mathai_Mq-mathai_Mq_star. Every map is strictly increasing and fixes 0.
 */
double transform_between(const EntropySpec& source, EntropyId target, double value);

/// The target spec whose values transform_between produces.
EntropySpec transform_target(const EntropySpec& source, EntropyId target);

bool is_supported_transform(EntropyId source, EntropyId target) noexcept;

}  // namespace cgrain
