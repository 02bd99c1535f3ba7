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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cgrain {

/// Tolerance on |sum(p) - 1| accepted by every validating constructor.
inline constexpr double kSumTolerance = 1e-9;

/// Largest ground set for which set partitions are enumerated exhaustively.
inline constexpr std::size_t kMaxEnumerationSize = 12;

/**
 * A probability vector over n >= 1 states. Entries are nonnegative and sum
 * to one within kSumTolerance. Zero entries are allowed; entropy functionals
 * that cannot handle them reject such inputs at evaluation time.
 *
 * Construction never renormalizes; use from_weights() for that.
 */
class FiniteDistribution {
 public:
  explicit FiniteDistribution(std::vector<double> probs);

  /// Normalizes nonnegative weights by their total.
  static FiniteDistribution from_weights(std::span<const double> weights);
  static FiniteDistribution uniform(std::size_t n);
  /// The one-point distribution (1.0).
  static FiniteDistribution degenerate();

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  bool has_zero() const noexcept;

  friend bool operator==(const FiniteDistribution&, const FiniteDistribution&) = default;

 private:
  std::vector<double> probs_;
};

/**
 * A set partition of {0, ..., n-1}: the coarse-graining map from n states to
 * block_count() aggregated states.
 *
 * Stored in canonical form (elements ascending inside a block, blocks ordered
 * by their minimum element) so equality and serialization are deterministic.
 */
class Partition {
 public:
  using Block = std::vector<std::size_t>;

  Partition(std::vector<Block> blocks, std::size_t ground_size);

  /// Builds a partition from a block label per element. Labels are arbitrary
  /// integers; elements sharing a label share a block.
  static Partition from_labels(std::span<const std::size_t> labels);
  /// Every element in its own block.
  static Partition singletons(std::size_t n);
  /// A single block holding every element.
  static Partition whole(std::size_t n);

  std::size_t ground_size() const noexcept { return ground_size_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }

  /// Index of the block containing each element.
  std::vector<std::size_t> labels() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  struct Canonical {};
  Partition(Canonical, std::vector<Block> blocks, std::size_t ground_size);

  friend void for_each_partition(std::size_t, const std::function<void(const Partition&)>&);

  std::vector<Block> blocks_;
  std::size_t ground_size_ = 0;
};

/**
 * An n x m table of joint probabilities r_ij stored row-major. Rows index the
 * first variable, columns the second.
 */
class JointDistribution {
 public:
  JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> cells);

  /// Independent product: cell (i, j) = p_i * q_j.
  static JointDistribution product(const FiniteDistribution& p, const FiniteDistribution& q);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  std::span<const double> cells() const noexcept { return cells_; }

  /// All cells as one distribution, row-major.
  FiniteDistribution flattened() const;

  /// p_i* = sum_j r_ij.
  std::vector<double> row_sums() const;
  /// p_k = sum_i r_ik.
  std::vector<double> column_sums() const;
  FiniteDistribution row_marginal() const;
  FiniteDistribution column_marginal() const;

  /// Row i divided by its sum. Throws ZeroMarginal when the row sum is zero.
  FiniteDistribution row_conditional(std::size_t i) const;
  /// Column k divided by its sum, i.e. (q_{1|k}, ..., q_{n|k}).
  FiniteDistribution column_conditional(std::size_t k) const;

  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
};

/// Sums p over each block of the partition.
FiniteDistribution coarse_grain(const FiniteDistribution& p, const Partition& a);

/// Removes entries i and j and appends p_i + p_j at the end.
FiniteDistribution merge_pair(const FiniteDistribution& p, std::size_t i, std::size_t j);

/// True iff `coarse` can be obtained by merging blocks of `fine`: every block
/// of `fine` lies inside a single block of `coarse`.
bool is_refinement(const Partition& fine, const Partition& coarse);

/// The partition of fine's blocks induced by `coarse`. Applying it to
/// coarse_grain(p, fine) gives coarse_grain(p, coarse).
Partition induced_quotient(const Partition& fine, const Partition& coarse);

/// Merges blocks i and j of a partition.
Partition merge_blocks(const Partition& a, std::size_t i, std::size_t j);

/// Visits every set partition of {0..n-1} once, in restricted-growth-string
/// order. Requires 1 <= n <= kMaxEnumerationSize.
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(std::size_t n);

/// p_k^alpha / sum_i p_i^alpha. alpha = 0 requires strictly positive p.
FiniteDistribution escort(const FiniteDistribution& p, double alpha);

/// Cell (i, k) = conditionals[k][i] * p[k]; column sums reproduce p.
JointDistribution joint_from_conditionals(const FiniteDistribution& p,
                                          std::span<const FiniteDistribution> conditionals);

}  // namespace cgrain
