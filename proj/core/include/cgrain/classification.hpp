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
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "cgrain/entropy.hpp"

namespace cgrain {

inline constexpr std::size_t kDefaultGridDensity = 200;
inline constexpr double kS1Threshold = 1e-9;
inline constexpr double kPhiZeroTolerance = 1e-12;
inline constexpr double kConcavityRelativeThreshold = 1e-7;

/// A grid point where a check failed, with the two slopes (or curvature
/// values) that were compared.
struct S1Witness {
  double x = 0;
  double p = 0;
  double left = 0;   // phi'(x), or the second difference for concavity
  double right = 0;  // phi'(x + p)
};

/**
 * Outcome of one grid check. passed is `max_violation <= threshold` (or `<`
 * when `strict`) together with the phi(0) requirement; a witness is present
 * exactly when the check failed.
 *
 * orientation is the sign of h' over the reachable range of sum phi; checks
 * on h-forms with decreasing h are run on -phi.
 */
struct S1Certificate {
  std::string check;
  std::string spec;
  std::size_t grid_points = 0;
  std::size_t evaluations = 0;
  std::size_t skipped = 0;
  int orientation = 1;
  bool closed_form_derivative = true;
  double max_violation = 0;
  double threshold = kS1Threshold;
  bool strict = false;
  double phi_zero_residual = 0;
  std::string pattern;
  std::optional<S1Witness> witness;
  bool passed = false;
};

nlohmann::json to_json(const S1Certificate& c);

/**
 * Checks phi'(x) >= phi'(x + p) for x = 0.5 i / G (i = 1..G) and
 * p = (1 - x) j / G (j = 0..G), together with phi(0) = 0. x + p is capped at
 * 1 - 1e-6. phi' is the closed form when available, otherwise a central
 * difference with step 1e-6 max(x, 1e-3). Points within 1e-4 of a breakpoint
 * are skipped.
 *
 * For the n-dependent hypoentropy phi, phi(0) = 0 is replaced by checking
 * that n phi(n, 0) is the same for n = 2..12.
 */
S1Certificate check_s1_condition(const EntropySpec& spec,
                                 std::size_t grid_density = kDefaultGridDensity);

/// Second differences of phi on the grid i / G over [0, 1]; passes when none
/// exceeds 1e-7 times the largest |phi| on the grid.
S1Certificate check_concavity(const EntropySpec& spec,
                              std::size_t grid_density = kDefaultGridDensity);

/// Passes when h' > 0 and phi'' < 0 everywhere sampled, or h' < 0 and
/// phi'' > 0. Strict: a zero sample fails.
S1Certificate check_h_phi_pairing(const EntropySpec& spec,
                                  std::size_t grid_density = kDefaultGridDensity);

/// Range [lo, hi] of sum phi(p_i) bracketed by uniform and near-degenerate
/// distributions with n = 2..12.
std::pair<double, double> reachable_phi_sum_range(const EntropySpec& spec);

/// max over n = 2..12 of |n phi(n, 0) - 2 phi(2, 0)|; 0 for n-free phi.
double phi_zero_constancy_residual(const EntropySpec& spec);

struct TransformConsistency {
  std::string source;
  std::string target;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t compared = 0;
  std::size_t order_violations = 0;
  std::size_t monotonicity_violations = 0;
  double max_identity_residual = 0;
  bool passed = false;
};

nlohmann::json to_json(const TransformConsistency& t);

/**
 * Samples pairs (P, P') and checks that the transform maps source values to
 * target values (within 1e-10 relative), is strictly increasing over the
 * sampled values, and that both entropies order P and P' the same way
 * whenever both differences exceed 1e-8.
 */
TransformConsistency check_transform_consistency(const EntropySpec& source,
                                                 const EntropySpec& target, std::size_t samples,
                                                 std::uint64_t seed);

}  // namespace cgrain
