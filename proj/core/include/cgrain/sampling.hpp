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
#include <initializer_list>
#include <random>
#include <utility>

#include "cgrain/distribution.hpp"

namespace cgrain {

/// Mixes a base seed with a list of keys (spec index, n, case index, ...)
/// into an independent per-case seed. SplitMix64 finalizer.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> keys) noexcept;

/// Platform-independent random source. Only raw 64-bit engine output is
/// used, so results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in the open interval (0, 1).
  double uniform_open();
  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Flat Dirichlet sample: uniform on the simplex interior.
FiniteDistribution sample_dirichlet_uniform(std::size_t n, std::uint64_t seed);

/// Flat Dirichlet sample redrawn until every entry is >= floor.
FiniteDistribution sample_dirichlet_interior(std::size_t n, std::uint64_t seed, double floor);

/**
 * Draws a strict refinement pair (A, B), B coarser than A, with
 * 2 <= |B| < |A| <= n.
 *
 * Starting from singletons, uniformly chosen block pairs are merged until a
 * target |A| drawn from [3, n] is reached, then merging continues down to a
 * target |B| drawn from [2, |A| - 1]. Not uniform over the partition lattice.
 */
std::pair<Partition, Partition> random_refinement_pair(std::size_t n, std::uint64_t seed);

}  // namespace cgrain
