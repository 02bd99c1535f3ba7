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

#include <algorithm>
#include <numeric>
#include <set>

#include "cgrain/distribution.hpp"
#include "cgrain/error.hpp"
#include "cgrain/sampling.hpp"

namespace cgrain {
namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cgrain::Error thrown";
  return ErrorCode::ParseError;
}

std::vector<double> v(const FiniteDistribution& p) { return {p.probs().begin(), p.probs().end()}; }

// Bell numbers from the Bell triangle, independent of the enumerator.
std::vector<std::size_t> bell_numbers(std::size_t up_to) {
  std::vector<std::size_t> bell{1};
  std::vector<std::size_t> row{1};
  for (std::size_t n = 1; n <= up_to; ++n) {
    std::vector<std::size_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
    bell.push_back(row.front());
  }
  return bell;
}

TEST(FiniteDistribution, FromWeightsNormalizes) {
  std::vector<double> w1{1, 1}, w2{2, 3, 5}, w3{0, 4};
  EXPECT_EQ(v(FiniteDistribution::from_weights(w1)), (std::vector<double>{0.5, 0.5}));
  const auto p = FiniteDistribution::from_weights(w2);
  EXPECT_DOUBLE_EQ(p[0], 0.2);
  EXPECT_DOUBLE_EQ(p[1], 0.3);
  EXPECT_DOUBLE_EQ(p[2], 0.5);
  EXPECT_EQ(v(FiniteDistribution::from_weights(w3)), (std::vector<double>{0.0, 1.0}));
}

TEST(FiniteDistribution, FromWeightsErrors) {
  std::vector<double> empty, negative{1, -1, 2}, zero{0, 0};
  EXPECT_EQ(code_of([&] { FiniteDistribution::from_weights(empty); }), ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([&] { FiniteDistribution::from_weights(negative); }), ErrorCode::NegativeWeight);
  EXPECT_EQ(code_of([&] { FiniteDistribution::from_weights(zero); }), ErrorCode::ZeroTotal);
}

TEST(FiniteDistribution, ConstructorValidatesWithoutNormalizing) {
  EXPECT_NO_THROW(FiniteDistribution({0.5, 0.5 + 5e-10}));
  EXPECT_EQ(code_of([] { FiniteDistribution({0.5, 0.6}); }), ErrorCode::InvalidProbability);
  EXPECT_EQ(code_of([] { FiniteDistribution({1.5, -0.5}); }), ErrorCode::NegativeWeight);
  EXPECT_EQ(code_of([] { FiniteDistribution(std::vector<double>{}); }), ErrorCode::EmptyInput);
  EXPECT_TRUE(FiniteDistribution({0.0, 1.0}).has_zero());
}

TEST(CoarseGrain, Examples) {
  const FiniteDistribution p({0.2, 0.3, 0.5});
  EXPECT_EQ(v(coarse_grain(p, Partition({{0, 1}, {2}}, 3))), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(coarse_grain(p, Partition::singletons(3)), p);
  EXPECT_EQ(v(coarse_grain(FiniteDistribution::uniform(4), Partition::whole(4))),
            (std::vector<double>{1.0}));
  EXPECT_EQ(code_of([&] { coarse_grain(p, Partition::singletons(4)); }), ErrorCode::DimensionMismatch);
}

TEST(MergePair, Examples) {
  EXPECT_EQ(v(merge_pair(FiniteDistribution({0.2, 0.3, 0.5}), 0, 1)), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(v(merge_pair(FiniteDistribution({0.5, 0.5}), 0, 1)), (std::vector<double>{1.0}));
  const auto m = merge_pair(FiniteDistribution({0.1, 0.2, 0.3, 0.4}), 1, 3);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_DOUBLE_EQ(m[0], 0.1);
  EXPECT_DOUBLE_EQ(m[1], 0.3);
  EXPECT_DOUBLE_EQ(m[2], 0.6);
  const FiniteDistribution p({0.5, 0.5});
  EXPECT_EQ(code_of([&] { merge_pair(p, 0, 2); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { merge_pair(p, 1, 1); }), ErrorCode::EqualIndices);
}

TEST(MergePair, MatchesCoarseGrainUpToOrder) {
  const FiniteDistribution p({0.05, 0.1, 0.15, 0.3, 0.4});
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      std::vector<std::size_t> labels{0, 1, 2, 3, 4};
      labels[j] = labels[i];
      auto a = v(merge_pair(p, i, j));
      auto b = v(coarse_grain(p, Partition::from_labels(labels)));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Partition, CanonicalForm) {
  const Partition a({{2, 0}, {1}}, 3);
  EXPECT_EQ(a.blocks(), (std::vector<Partition::Block>{{0, 2}, {1}}));
  EXPECT_EQ(a, Partition({{1}, {0, 2}}, 3));
  EXPECT_EQ(code_of([] { Partition({{0, 1}, {1, 2}}, 3); }), ErrorCode::InvalidPartition);
  EXPECT_EQ(code_of([] { Partition({{0}, {2}}, 3); }), ErrorCode::InvalidPartition);
  EXPECT_EQ(code_of([] { Partition({{0}, {}, {1}}, 2); }), ErrorCode::InvalidPartition);
  const std::vector<std::size_t> labels{7, 3, 7, 1};
  EXPECT_EQ(Partition::from_labels(labels), Partition({{0, 2}, {1}, {3}}, 4));
}

TEST(IsRefinement, Examples) {
  const auto id3 = Partition::singletons(3);
  const Partition ab({{0, 1}, {2}}, 3), bc({{0}, {1, 2}}, 3);
  EXPECT_TRUE(is_refinement(id3, ab));
  EXPECT_TRUE(is_refinement(ab, ab));
  EXPECT_FALSE(is_refinement(ab, bc));
  EXPECT_EQ(code_of([&] { is_refinement(id3, Partition::singletons(4)); }), ErrorCode::DimensionMismatch);
}

TEST(IsRefinement, ReflexiveAndTransitiveUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = enumerate_partitions(n);
    for (const auto& a : all) ASSERT_TRUE(is_refinement(a, a));
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (!is_refinement(a, b)) continue;
        for (const auto& c : all) {
          if (is_refinement(b, c)) {
            ASSERT_TRUE(is_refinement(a, c));
          }
        }
      }
    }
  }
}

TEST(EnumeratePartitions, CountsMatchBellRecurrence) {
  const auto bell = bell_numbers(12);
  EXPECT_EQ(bell[3], 5u);
  EXPECT_EQ(bell[6], 203u);
  for (std::size_t n = 1; n <= 12; ++n) {
    std::size_t count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    EXPECT_EQ(count, bell[n]) << "n=" << n;
  }
}

TEST(EnumeratePartitions, DistinctCanonicalAndValid) {
  const auto all = enumerate_partitions(6);
  std::set<std::vector<Partition::Block>> seen;
  for (const auto& a : all) {
    EXPECT_EQ(a, Partition(a.blocks(), 6));
    EXPECT_TRUE(seen.insert(a.blocks()).second);
  }
  EXPECT_EQ(all.front(), Partition::whole(6));
  EXPECT_EQ(enumerate_partitions(1).size(), 1u);
  EXPECT_EQ(code_of([] { enumerate_partitions(13); }), ErrorCode::TooLarge);
}

TEST(Aggregation, TransitiveThroughInducedQuotient) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 8;
    const auto p = sample_dirichlet_uniform(n, seed);
    const auto [a, b] = random_refinement_pair(n, seed + 1000);
    const auto direct = coarse_grain(p, b);
    const auto staged = coarse_grain(coarse_grain(p, a), induced_quotient(a, b));
    ASSERT_EQ(direct.size(), staged.size());
    for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_NEAR(direct[i], staged[i], 1e-12);
  }
}

TEST(Escort, Examples) {
  EXPECT_EQ(v(escort(FiniteDistribution({0.5, 0.5}), 7)), (std::vector<double>{0.5, 0.5}));
  const FiniteDistribution p({0.2, 0.8});
  EXPECT_EQ(escort(p, 1), p);
  const auto e2 = escort(p, 2);
  EXPECT_NEAR(e2[0], 1.0 / 17.0, 1e-15);
  EXPECT_NEAR(e2[1], 16.0 / 17.0, 1e-15);
  EXPECT_EQ(code_of([] { escort(FiniteDistribution({0.0, 1.0}), 0); }),
            ErrorCode::ZeroProbabilityWithZeroAlpha);
}

TEST(Escort, UniformStaysUniform) {
  for (double alpha : {0.0, 0.3, 1.0, 2.5, 9.0}) {
    const auto e = escort(FiniteDistribution::uniform(7), alpha);
    for (double x : e.probs()) {
      EXPECT_NEAR(x, 1.0 / 7.0, 1e-15);
    }
  }
}

TEST(JointFromConditionals, Examples) {
  const std::vector<FiniteDistribution> q1{FiniteDistribution({0.3, 0.7})};
  const auto j1 = joint_from_conditionals(FiniteDistribution({1.0}), q1);
  EXPECT_EQ(j1.rows(), 2u);
  EXPECT_EQ(j1.cols(), 1u);
  EXPECT_DOUBLE_EQ(j1.at(0, 0), 0.3);
  EXPECT_DOUBLE_EQ(j1.at(1, 0), 0.7);

  const std::vector<FiniteDistribution> q2(2, FiniteDistribution({0.5, 0.5}));
  const auto j2 = joint_from_conditionals(FiniteDistribution({0.5, 0.5}), q2);
  for (double c : j2.cells()) {
    EXPECT_DOUBLE_EQ(c, 0.25);
  }

  const std::vector<FiniteDistribution> q3{FiniteDistribution({1.0, 0.0}),
                                           FiniteDistribution({0.5, 0.5})};
  const auto j3 = joint_from_conditionals(FiniteDistribution({0.4, 0.6}), q3);
  EXPECT_DOUBLE_EQ(j3.at(0, 0), 0.4);
  EXPECT_DOUBLE_EQ(j3.at(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(j3.at(0, 1), 0.3);
  EXPECT_DOUBLE_EQ(j3.at(1, 1), 0.3);
}

TEST(JointFromConditionals, Errors) {
  const FiniteDistribution p({0.4, 0.6});
  const std::vector<FiniteDistribution> one{FiniteDistribution({1.0})};
  EXPECT_EQ(code_of([&] { joint_from_conditionals(p, one); }), ErrorCode::DimensionMismatch);
  const std::vector<FiniteDistribution> ragged{FiniteDistribution({1.0}),
                                               FiniteDistribution({0.5, 0.5})};
  EXPECT_EQ(code_of([&] { joint_from_conditionals(p, ragged); }), ErrorCode::RaggedConditionals);
}

TEST(JointFromConditionals, ColumnSumsReproduceMarginal) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 5, m = 1 + (seed / 5) % 5;
    const auto p = sample_dirichlet_uniform(n, seed);
    std::vector<FiniteDistribution> q;
    for (std::size_t k = 0; k < n; ++k) q.push_back(sample_dirichlet_uniform(m, seed * 31 + k));
    const auto j = joint_from_conditionals(p, q);
    const auto sums = j.column_sums();
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(sums[k], p[k], 1e-12);
    for (std::size_t k = 0; k < n; ++k) {
      const auto back = j.column_conditional(k);
      for (std::size_t i = 0; i < m; ++i) EXPECT_NEAR(back[i], q[k][i], 1e-12);
    }
  }
}

TEST(JointDistribution, MarginalsAndConditionals) {
  const JointDistribution j(2, 2, {0.1, 0.35, 0.3, 0.25});
  EXPECT_NEAR(j.row_sums()[0], 0.45, 1e-15);
  EXPECT_NEAR(j.column_sums()[1], 0.6, 1e-15);
  EXPECT_NEAR(j.row_conditional(0)[0], 0.1 / 0.45, 1e-15);
  const JointDistribution z(2, 2, {0.5, 0.5, 0.0, 0.0});
  EXPECT_EQ(code_of([&] { z.row_conditional(1); }), ErrorCode::ZeroMarginal);
  const auto prod = JointDistribution::product(FiniteDistribution({0.3, 0.7}),
                                               FiniteDistribution({0.5, 0.5}));
  EXPECT_DOUBLE_EQ(prod.at(1, 0), 0.35);
}

}  // namespace
}  // namespace cgrain
