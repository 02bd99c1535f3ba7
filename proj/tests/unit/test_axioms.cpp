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

#include <cmath>

#include "cgrain/axioms.hpp"
#include "cgrain/catalog.hpp"
#include "cgrain/error.hpp"
#include "cgrain/sampling.hpp"

namespace cgrain {
namespace {

// Correlated 2x2 table and its 50-digit reference values
// (tests/oracles/gen_misc_values.py).
JointDistribution correlated() { return JointDistribution(2, 2, {0.1, 0.35, 0.3, 0.25}); }
constexpr double kTsallis07Joint = 1.6284405355273196545;
constexpr double kRenyi2RowResidual = 0.0044943157196802686786;

TEST(Axioms, FrozenCompositionValues) {
  const auto ts = EntropySpec::tsallis(0.7);
  EXPECT_NEAR(evaluate(ts, correlated().flattened()), kTsallis07Joint, 1e-14);
  EXPECT_LE(std::abs(residual_A4_A5_general(ts, correlated(), 0.7, 0.3, ScalarMap::identity())), 1e-12);
  EXPECT_NEAR(residual_A2(EntropySpec::renyi(2), correlated()), kRenyi2RowResidual, 1e-14);
}

TEST(Axioms, ShannonIdentities) {
  const auto sh = EntropySpec::shannon();
  EXPECT_NEAR(residual_A1(sh, FiniteDistribution({0.2, 0.3, 0.5})), 0.0, 1e-12);
  EXPECT_NEAR(residual_A1(sh, FiniteDistribution({0.25, 0.25, 0.5})), 0.0, 1e-12);
  EXPECT_NEAR(residual_product_composability(sh, FiniteDistribution({0.4, 0.6}),
                                             FiniteDistribution({0.5, 0.5}), 0.0),
              0.0, 1e-12);
  EXPECT_NEAR(residual_A3(sh, FiniteDistribution({0.4, 0.6}), FiniteDistribution({1.0}), 2), 0.0, 1e-15);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 5, m = 2 + (seed / 5) % 5;
    const auto flat = sample_dirichlet_uniform(n * m, seed);
    const JointDistribution j(n, m, {flat.probs().begin(), flat.probs().end()});
    EXPECT_NEAR(residual_A2(sh, j), 0.0, 1e-12);
    EXPECT_NEAR(residual_A4_A5_general(sh, j, 1.0, 0.0, ScalarMap::identity()), 0.0, 1e-10);
  }
}

TEST(Axioms, NonconformingResidualsAreVisible) {
  EXPECT_GT(std::abs(residual_A1(EntropySpec::tsallis(2), FiniteDistribution({0.2, 0.3, 0.5}))), 1e-3);
  const auto he = EntropySpec::counterexample();
  EXPECT_GT(std::abs(residual_A1(he, FiniteDistribution({0.2, 0.3, 0.5}))), 1e-3);
  EXPECT_GT(std::abs(residual_A2(he, correlated())), 1e-3);
  EXPECT_GT(std::abs(residual_A3(he, FiniteDistribution({0.5, 0.5}), FiniteDistribution({0.4, 0.6}), 2)),
            1e-3);
}

TEST(Axioms, ProductComposability) {
  EXPECT_NEAR(residual_product_composability(EntropySpec::renyi(2), FiniteDistribution({0.3, 0.7}),
                                             FiniteDistribution({0.5, 0.5}), 0.0),
              0.0, 1e-10);
  std::vector<EntropySpec> specs;
  for (double q : {0.3, 0.7, 1.5, 2.0}) {
    specs.push_back(EntropySpec::tsallis(q));
    specs.push_back(EntropySpec::make(EntropyId::havrda_charvat, {{"q", q}}));
    if (q < 2) specs.push_back(EntropySpec::make(EntropyId::mathai_Mq, {{"q", q}}));
    specs.push_back(EntropySpec::renyi(q));
  }
  specs.push_back(EntropySpec::make(EntropyId::sharma_mittal_rs, {{"r", 2}, {"s", 0.5}}));
  for (const auto& spec : specs) {
    const auto gamma = pseudo_additivity_gamma(spec);
    ASSERT_TRUE(gamma.has_value()) << spec.label();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto p = sample_dirichlet_uniform(2 + seed % 5, seed);
      const auto q = sample_dirichlet_uniform(2 + seed % 4, seed + 7919);
      EXPECT_NEAR(residual_product_composability(spec, p, q, *gamma), 0.0, 1e-10) << spec.label();
    }
  }
  EXPECT_DOUBLE_EQ(*pseudo_additivity_gamma(EntropySpec::tsallis(0.3)), 0.7);
  EXPECT_DOUBLE_EQ(*pseudo_additivity_gamma(EntropySpec::make(EntropyId::havrda_charvat, {{"q", 2}})), -0.5);
  EXPECT_FALSE(pseudo_additivity_gamma(EntropySpec::counterexample()).has_value());
}

TEST(Axioms, GeneralCompositionReducesOnProducts) {
  const ScalarMap expm{"exp", [](double x) { return std::exp(x); }, [](double y) { return std::log(y); }};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = sample_dirichlet_uniform(3, seed);
    const auto q = sample_dirichlet_uniform(2 + seed % 3, seed + 1);
    const auto j = JointDistribution::product(p, q);
    for (const auto& spec : {EntropySpec::tsallis(0.7), EntropySpec::renyi(2), EntropySpec::shannon()}) {
      for (double gamma : {0.0, 0.3}) {
        const double ref = residual_product_composability(spec, p, q, gamma);
        EXPECT_NEAR(residual_A4_A5_general(spec, j, 0.7, gamma, ScalarMap::identity()), ref, 1e-12);
        EXPECT_NEAR(residual_A4_A5_general(spec, j, 2.0, gamma, expm), ref, 1e-11);
      }
    }
  }
}

TEST(Axioms, BadInverseIsDetected) {
  const ScalarMap wrong{"double", [](double x) { return 2 * x; }, [](double y) { return y; }};
  try {
    residual_A4_A5_general(EntropySpec::shannon(), correlated(), 1.0, 0.0, wrong);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadInverse);
  }
}

TEST(Axioms, BasicAxiomsHoldForCatalog) {
  auto specs = reference_catalog();
  specs.push_back(EntropySpec::counterexample());
  for (const auto& spec : specs) {
    for (const auto& r : check_basic_axioms(spec, 200, 3)) {
      if (r.not_applicable) continue;
      EXPECT_TRUE(r.within_tolerance) << spec.label() << " " << to_string(r.axiom) << " "
                                      << r.max_abs_residual;
    }
  }
}

TEST(Axioms, SuiteMatchesConformanceTable) {
  auto specs = reference_catalog();
  specs.push_back(EntropySpec::counterexample());
  for (const auto& spec : specs) {
    for (const auto& r : run_axiom_suite(spec, 100, 5)) {
      EXPECT_TRUE(r.matches_expectation())
          << spec.label() << " " << to_string(r.axiom) << " residual=" << r.max_abs_residual;
    }
  }
}

TEST(Axioms, ConformanceTable) {
  const auto sh = EntropySpec::shannon();
  for (AxiomId a : {AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A4}) {
    EXPECT_EQ(expected_conformance(sh, a), Conformance::conforming);
  }
  EXPECT_EQ(expected_conformance(EntropySpec::tsallis(2), AxiomId::A1), Conformance::nonconforming);
  EXPECT_EQ(expected_conformance(EntropySpec::tsallis(2), AxiomId::A5), Conformance::conforming);
  EXPECT_EQ(expected_conformance(EntropySpec::counterexample(), AxiomId::A2), Conformance::nonconforming);
  const auto preset = composition_preset(EntropySpec::make(EntropyId::mathai_Mq, {{"q", 1.5}}));
  ASSERT_TRUE(preset.has_value());
  EXPECT_EQ(preset->axiom, AxiomId::A5);
  EXPECT_DOUBLE_EQ(preset->alpha, 0.5);
}

TEST(Axioms, ResidualJson) {
  const auto rs = check_basic_axioms(EntropySpec::make(EntropyId::kaniadakis, {{"k", 0.3}}), 1000, 1);
  bool saw_symmetry = false;
  for (const auto& r : rs) {
    if (r.axiom != AxiomId::symmetry) continue;
    saw_symmetry = true;
    EXPECT_LE(r.max_abs_residual, 1e-12);
    EXPECT_EQ(r.cases_run, 1000u);
    EXPECT_EQ(to_json(r).at("axiom"), "symmetry");
  }
  EXPECT_TRUE(saw_symmetry);
}

}  // namespace
}  // namespace cgrain
