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

#include "cgrain/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "cgrain/error.hpp"

namespace cgrain {

namespace {

void validate_probabilities(std::span<const double> probs, const char* what) {
  if (probs.empty()) {
    throw Error(ErrorCode::EmptyInput, std::string(what) + " has no entries");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double v = probs[i];
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidProbability,
                  std::string(what) + " entry " + std::to_string(i) + " is not finite");
    }
    if (v < 0.0) {
      throw Error(ErrorCode::NegativeWeight,
                  std::string(what) + " entry " + std::to_string(i) + " is negative");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::InvalidProbability,
                std::string(what) + " sums to " + std::to_string(total) + ", not 1");
  }
}

}  // namespace

// FiniteDistribution

FiniteDistribution::FiniteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
  validate_probabilities(probs_, "distribution");
}

FiniteDistribution FiniteDistribution::from_weights(std::span<const double> weights) {
  if (weights.empty()) throw Error(ErrorCode::EmptyInput, "no weights given");
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i])) {
      throw Error(ErrorCode::InvalidProbability, "weight " + std::to_string(i) + " is not finite");
    }
    if (weights[i] < 0.0) {
      throw Error(ErrorCode::NegativeWeight, "weight " + std::to_string(i) + " is negative");
    }
    total += weights[i];
  }
  if (!(total > 0.0)) throw Error(ErrorCode::ZeroTotal, "weights sum to zero");
  std::vector<double> probs(weights.begin(), weights.end());
  for (double& v : probs) v /= total;
  return FiniteDistribution(std::move(probs));
}

FiniteDistribution FiniteDistribution::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "uniform distribution needs n >= 1");
  return FiniteDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

FiniteDistribution FiniteDistribution::degenerate() { return FiniteDistribution({1.0}); }

bool FiniteDistribution::has_zero() const noexcept {
  return std::any_of(probs_.begin(), probs_.end(), [](double v) { return v == 0.0; });
}

// Partition

Partition::Partition(std::vector<Block> blocks, std::size_t ground_size)
    : ground_size_(ground_size) {
  if (ground_size == 0) throw Error(ErrorCode::InvalidPartition, "ground set is empty");
  std::vector<bool> seen(ground_size, false);
  for (Block& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::InvalidPartition, "partition has an empty block");
    for (std::size_t e : b) {
      if (e >= ground_size) {
        throw Error(ErrorCode::InvalidPartition,
                    "element " + std::to_string(e) + " outside ground set of size " +
                        std::to_string(ground_size));
      }
      if (seen[e]) {
        throw Error(ErrorCode::InvalidPartition,
                    "element " + std::to_string(e) + " appears in more than one block");
      }
      seen[e] = true;
    }
    std::sort(b.begin(), b.end());
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::InvalidPartition, "blocks do not cover the ground set");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
  blocks_ = std::move(blocks);
}

Partition::Partition(Canonical, std::vector<Block> blocks, std::size_t ground_size)
    : blocks_(std::move(blocks)), ground_size_(ground_size) {}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  if (labels.empty()) throw Error(ErrorCode::InvalidPartition, "ground set is empty");
  std::map<std::size_t, std::size_t> slot;
  std::vector<Block> blocks;
  for (std::size_t e = 0; e < labels.size(); ++e) {
    auto [it, inserted] = slot.try_emplace(labels[e], blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(e);
  }
  // First-appearance order is already canonical.
  return Partition(Canonical{}, std::move(blocks), labels.size());
}

Partition Partition::singletons(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidPartition, "ground set is empty");
  std::vector<Block> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
  return Partition(Canonical{}, std::move(blocks), n);
}

Partition Partition::whole(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidPartition, "ground set is empty");
  Block all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Partition(Canonical{}, {std::move(all)}, n);
}

std::vector<std::size_t> Partition::labels() const {
  std::vector<std::size_t> out(ground_size_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t e : blocks_[b]) out[e] = b;
  }
  return out;
}

// JointDistribution

JointDistribution::JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::EmptyInput, "joint table has no cells");
  if (cells_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch,
                "joint table expects " + std::to_string(rows * cols) + " cells, got " +
                    std::to_string(cells_.size()));
  }
  validate_probabilities(cells_, "joint table");
}

JointDistribution JointDistribution::product(const FiniteDistribution& p,
                                             const FiniteDistribution& q) {
  std::vector<double> cells;
  cells.reserve(p.size() * q.size());
  for (double pi : p.probs()) {
    for (double qj : q.probs()) cells.push_back(pi * qj);
  }
  return JointDistribution(p.size(), q.size(), std::move(cells));
}

FiniteDistribution JointDistribution::flattened() const { return FiniteDistribution(cells_); }

std::vector<double> JointDistribution::row_sums() const {
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j);
  }
  return out;
}

std::vector<double> JointDistribution::column_sums() const {
  std::vector<double> out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j] += at(i, j);
  }
  return out;
}

FiniteDistribution JointDistribution::row_marginal() const { return FiniteDistribution(row_sums()); }

FiniteDistribution JointDistribution::column_marginal() const {
  return FiniteDistribution(column_sums());
}

FiniteDistribution JointDistribution::row_conditional(std::size_t i) const {
  if (i >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i));
  std::span<const double> row(cells_.data() + i * cols_, cols_);
  const double total = std::accumulate(row.begin(), row.end(), 0.0);
  if (!(total > 0.0)) {
    throw Error(ErrorCode::ZeroMarginal, "row " + std::to_string(i) + " has zero mass");
  }
  std::vector<double> out(row.begin(), row.end());
  for (double& v : out) v /= total;
  return FiniteDistribution(std::move(out));
}

FiniteDistribution JointDistribution::column_conditional(std::size_t k) const {
  if (k >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(k));
  std::vector<double> out(rows_);
  double total = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i] = at(i, k);
    total += out[i];
  }
  if (!(total > 0.0)) {
    throw Error(ErrorCode::ZeroMarginal, "column " + std::to_string(k) + " has zero mass");
  }
  for (double& v : out) v /= total;
  return FiniteDistribution(std::move(out));
}

// Operations

FiniteDistribution coarse_grain(const FiniteDistribution& p, const Partition& a) {
  if (a.ground_size() != p.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "partition over " + std::to_string(a.ground_size()) +
                    " states applied to distribution of size " + std::to_string(p.size()));
  }
  std::vector<double> out;
  out.reserve(a.block_count());
  for (const auto& block : a.blocks()) {
    double mass = 0.0;
    for (std::size_t e : block) mass += p[e];
    out.push_back(mass);
  }
  return FiniteDistribution(std::move(out));
}

FiniteDistribution merge_pair(const FiniteDistribution& p, std::size_t i, std::size_t j) {
  if (i >= p.size() || j >= p.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "merge indices (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") for size " + std::to_string(p.size()));
  }
  if (i == j) throw Error(ErrorCode::EqualIndices, "cannot merge an entry with itself");
  std::vector<double> out;
  out.reserve(p.size() - 1);
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (l != i && l != j) out.push_back(p[l]);
  }
  out.push_back(p[i] + p[j]);
  return FiniteDistribution(std::move(out));
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.ground_size() != coarse.ground_size()) {
    throw Error(ErrorCode::DimensionMismatch, "partitions over different ground sets");
  }
  const auto coarse_label = coarse.labels();
  for (const auto& block : fine.blocks()) {
    const std::size_t target = coarse_label[block.front()];
    for (std::size_t e : block) {
      if (coarse_label[e] != target) return false;
    }
  }
  return true;
}

Partition induced_quotient(const Partition& fine, const Partition& coarse) {
  if (!is_refinement(fine, coarse)) {
    throw Error(ErrorCode::InvalidPartition, "coarse partition does not refine-contain fine");
  }
  const auto coarse_label = coarse.labels();
  std::vector<std::size_t> labels;
  labels.reserve(fine.block_count());
  for (const auto& block : fine.blocks()) labels.push_back(coarse_label[block.front()]);
  return Partition::from_labels(labels);
}

Partition merge_blocks(const Partition& a, std::size_t i, std::size_t j) {
  if (i >= a.block_count() || j >= a.block_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "block index out of range");
  }
  if (i == j) throw Error(ErrorCode::EqualIndices, "cannot merge a block with itself");
  auto labels = a.labels();
  for (auto& l : labels) {
    if (l == j) l = i;
  }
  return Partition::from_labels(labels);
}

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit) {
  if (n == 0) throw Error(ErrorCode::TooSmall, "cannot enumerate partitions of an empty set");
  if (n > kMaxEnumerationSize) {
    throw Error(ErrorCode::TooLarge, "exhaustive enumeration is limited to n <= " +
                                         std::to_string(kMaxEnumerationSize));
  }
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    std::vector<Partition::Block> blocks(prefix_max[n - 1] + 1);
    for (std::size_t e = 0; e < n; ++e) blocks[rgs[e]].push_back(e);
    visit(Partition(Partition::Canonical{}, std::move(blocks), n));

    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      rgs[k] = 0;
      prefix_max[k] = prefix_max[i];
    }
  }
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

FiniteDistribution escort(const FiniteDistribution& p, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::DomainViolation, "escort order must be a finite nonnegative number");
  }
  if (alpha == 0.0 && p.has_zero()) {
    throw Error(ErrorCode::ZeroProbabilityWithZeroAlpha,
                "escort of order 0 is undefined for zero probabilities");
  }
  if (alpha == 1.0) return p;
  std::vector<double> w(p.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    w[i] = p[i] == 0.0 ? 0.0 : std::pow(p[i], alpha);
    total += w[i];
  }
  for (double& v : w) v /= total;
  return FiniteDistribution(std::move(w));
}

JointDistribution joint_from_conditionals(const FiniteDistribution& p,
                                          std::span<const FiniteDistribution> conditionals) {
  if (conditionals.size() != p.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(p.size()) + " conditionals, got " +
                    std::to_string(conditionals.size()));
  }
  const std::size_t m = conditionals.front().size();
  for (const auto& q : conditionals) {
    if (q.size() != m) {
      throw Error(ErrorCode::RaggedConditionals, "conditionals have different sizes");
    }
  }
  std::vector<double> cells(m * p.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < p.size(); ++k) cells[i * p.size() + k] = conditionals[k][i] * p[k];
  }
  return JointDistribution(m, p.size(), std::move(cells));
}

}  // namespace cgrain
