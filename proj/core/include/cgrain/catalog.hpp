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

#include <span>
#include <utility>
#include <vector>

#include "cgrain/entropy.hpp"

namespace cgrain {

/// phi(x) = x (1 - x), h(s) = ln(1 + s): a small (h, phi) instance with a
/// nontrivial increasing outer map.
EntropySpec gini_log_preset();

/// Group entropy with l = 0, m = 1, k = (-1, 1), sigma = 0.5. Only used when
/// unstable entries are requested.
EntropySpec group_entropy_preset();

/// Three valid parameter settings per parametric id (one spec for
/// parameter-free ids). Empty for group_entropy and counterexample_HE.
std::vector<EntropySpec> reference_parameter_sets(EntropyId id);

/**
 * Every catalog entry used by default campaigns, at its reference parameter
 * settings, plus the custom (h, phi) preset. counterexample_HE is never
 * included; group_entropy only when `include_unstable` is set.
 */
std::vector<EntropySpec> reference_catalog(bool include_unstable = false);

/// Ids whose phi satisfies the monotone-difference condition.
std::span<const EntropyId> relation_one_ids() noexcept;
/// Ids satisfying the basic axioms plus one structural axiom.
std::span<const EntropyId> relation_two_ids() noexcept;
/// Ids related to a Relation I/II member by an increasing transform.
std::span<const EntropyId> relation_three_ids() noexcept;

/// The monotone transform pairs between Relation III members.
std::vector<std::pair<EntropySpec, EntropySpec>> reference_transform_pairs();

}  // namespace cgrain
