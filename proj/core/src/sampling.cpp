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

#include "cgrain/sampling.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cgrain/error.hpp"

namespace cgrain {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t h = splitmix64(base);
  for (std::uint64_t k : keys) h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
  return h;
}

double Rng::uniform_open() {
  // 53 random bits centred in their cell: never exactly 0 or 1.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

std::size_t Rng::below(std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % b);
}

FiniteDistribution sample_dirichlet_uniform(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "cannot sample a distribution of size 0");
  if (n == 1) return FiniteDistribution::degenerate();
  Rng rng(seed);
  std::vector<double> w(n);
  for (double& v : w) v = -std::log(rng.uniform_open());
  return FiniteDistribution::from_weights(w);
}

FiniteDistribution sample_dirichlet_interior(std::size_t n, std::uint64_t seed, double floor) {
  if (n > 1 && floor * static_cast<double>(n) >= 1.0) {
    throw Error(ErrorCode::DomainViolation, "interior floor leaves no room on the simplex");
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    auto p = sample_dirichlet_uniform(n, attempt == 0 ? seed : derive_seed(seed, {attempt}));
    bool ok = true;
    for (double v : p.probs()) ok = ok && v >= floor;
    if (ok) return p;
  }
}

std::pair<Partition, Partition> random_refinement_pair(std::size_t n, std::uint64_t seed) {
  if (n < 3) {
    throw Error(ErrorCode::TooSmall,
                "a strict refinement pair with at least 2 coarse blocks needs n >= 3, got " +
                    std::to_string(n));
  }
  Rng rng(seed);
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  std::vector<std::size_t> live = labels;  // current block labels

  auto merge_down_to = [&](std::size_t target) {
    while (live.size() > target) {
      const std::size_t i = rng.below(live.size());
      std::size_t j = rng.below(live.size() - 1);
      if (j >= i) ++j;
      const std::size_t keep = live[i];
      const std::size_t drop = live[j];
      for (auto& l : labels) {
        if (l == drop) l = keep;
      }
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
    }
  };

  const std::size_t k_fine = 3 + rng.below(n - 2);
  merge_down_to(k_fine);
  Partition fine = Partition::from_labels(labels);
  const std::size_t k_coarse = 2 + rng.below(k_fine - 2);
  merge_down_to(k_coarse);
  Partition coarse = Partition::from_labels(labels);
  return {std::move(fine), std::move(coarse)};
}

}  // namespace cgrain
