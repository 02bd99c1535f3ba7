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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cgrain/distribution.hpp"
#include "cgrain/entropy.hpp"

namespace cgrain {

enum class AxiomId {
  positivity,
  expandability,
  symmetry,
  continuity,
  A1,
  A2,
  A3,
  A4,
  A5,
  product_additivity,
  product_pseudo_additivity,
};

std::string_view to_string(AxiomId id) noexcept;

/// What Relations I-III say about an (entropy, axiom) pair.
enum class Conformance { conforming, nonconforming, unknown };

std::string_view to_string(Conformance c) noexcept;

Conformance expected_conformance(const EntropySpec& spec, AxiomId axiom);

inline constexpr double kBasicAxiomTolerance = 1e-12;
inline constexpr double kStructuralAxiomTolerance = 1e-10;
inline constexpr double kContinuityEpsilon = 1e-8;
inline constexpr double kDefaultLipschitzBudget = 1e6;

struct AxiomResidual {
  AxiomId axiom = AxiomId::positivity;
  std::string spec;
  double max_abs_residual = 0;
  double tolerance = 0;
  std::size_t cases_run = 0;
  std::size_t cases_skipped = 0;
  /// Inputs of the worst case, enough to replay it.
  nlohmann::json worst_case;
  Conformance expected = Conformance::unknown;
  /// Set when the axiom does not apply (e.g. expandability on a non-zero-safe spec).
  bool not_applicable = false;
  std::string note;
  bool within_tolerance = false;

  /// False only when the outcome contradicts a conforming/nonconforming claim.
  bool matches_expectation() const noexcept;
};

nlohmann::json to_json(const AxiomResidual& r);

/// An invertible scalar map f with its inverse, for the A4/A5 checker.
struct ScalarMap {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> inverse;
  static ScalarMap identity();
};

/**
 * Positivity, expandability (zero-safe specs only), symmetry and continuity
 * over random distributions with n in [2, 8]. Continuity perturbs by
 * kContinuityEpsilon and renormalizes; |dH| / eps must stay within
 * `lipschitz_budget`. Evaluation errors are counted as skipped cases.
 */
std::vector<AxiomResidual> check_basic_axioms(const EntropySpec& spec, std::size_t samples,
                                              std::uint64_t seed,
                                              double lipschitz_budget = kDefaultLipschitzBudget);

/// H(P) - H(p1 + p2, p3, ...) - (p1 + p2) H(p1 / (p1 + p2), p2 / (p1 + p2)).
double residual_A1(const EntropySpec& spec, const FiniteDistribution& p);

/// H(J) - H(row sums) - sum_i p_i* H(row i / p_i*). Rows index the first variable.
double residual_A2(const EntropySpec& spec, const JointDistribution& j);

/// H(p_1, ..., p_{m-1}, p_m q_1, ..., p_m q_k) - H(P) - p_m H(Q); P must have m entries.
double residual_A3(const EntropySpec& spec, const FiniteDistribution& p,
                   const FiniteDistribution& q, std::size_t m);

/// H(P x Q) - [H(P) + H(Q) + gamma H(P) H(Q)].
double residual_product_composability(const EntropySpec& spec, const FiniteDistribution& p,
                                      const FiniteDistribution& q, double gamma);

/**
 * H(J) - [H(P) (+)_gamma H_m(Q|P)] with P the column marginal, Q_k the
 * column conditionals and H_m = f^-1(sum_k p_k^(alpha) f(H(Q_k))).
 * Throws BadInverse when f^-1(f(v)) misses v by more than 1e-10 on a value
 * it is applied to.
 */
double residual_A4_A5_general(const EntropySpec& spec, const JointDistribution& j, double alpha,
                              double gamma, const ScalarMap& f);

/// gamma with H(P x Q) = H(P) + H(Q) + gamma H(P) H(Q), when known.
std::optional<double> pseudo_additivity_gamma(const EntropySpec& spec);

/// The shipped A4/A5 preset (f = identity) for a spec, if any.
struct CompositionPreset {
  AxiomId axiom = AxiomId::A4;
  double alpha = 1;
  double gamma = 0;
};
std::optional<CompositionPreset> composition_preset(const EntropySpec& spec);

/**
 * Basic axioms, then A1, A2 (zero-safe specs only), A3, product
 * composability with the known gamma (0 when none is known) and the A4/A5
 * preset when one exists, each over `samples` random cases with n, m <= 6.
 */
std::vector<AxiomResidual> run_axiom_suite(const EntropySpec& spec, std::size_t samples,
                                           std::uint64_t seed);

}  // namespace cgrain
