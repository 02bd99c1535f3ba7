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

#include "cgrain/catalog.hpp"
#include "cgrain/classification.hpp"
#include "cgrain/error.hpp"

namespace cgrain {
namespace {

TEST(S1Condition, RelationOneReferenceSpecsPass) {
  for (EntropyId id : relation_one_ids()) {
    for (const auto& spec : reference_parameter_sets(id)) {
      const auto cert = check_s1_condition(spec, 200);
      EXPECT_TRUE(cert.passed) << spec.label() << " max_violation=" << cert.max_violation;
      EXPECT_GT(cert.evaluations, 0u);
    }
  }
}

TEST(S1Condition, CounterexampleFailsWithSlopeWitness) {
  const auto cert = check_s1_condition(EntropySpec::counterexample(), 200);
  ASSERT_FALSE(cert.passed);
  ASSERT_TRUE(cert.witness.has_value());
  const auto& w = *cert.witness;
  EXPECT_GT(w.x, 0.0);
  EXPECT_LT(w.x, 0.25);
  EXPECT_GT(w.x + w.p, 0.25);
  EXPECT_LT(w.x + w.p, 0.5);
  EXPECT_NEAR(w.left, 1.0, 1e-6);
  EXPECT_NEAR(w.right, 2.0, 1e-6);
  EXPECT_GT(cert.skipped, 0u);
}

TEST(S1Condition, ExamplesAndCertificateFields) {
  const auto sh = check_s1_condition(EntropySpec::shannon(), 50);
  EXPECT_TRUE(sh.passed);
  EXPECT_EQ(sh.orientation, 1);
  EXPECT_TRUE(sh.closed_form_derivative);
  EXPECT_LE(sh.phi_zero_residual, kPhiZeroTolerance);
  EXPECT_TRUE(check_s1_condition(EntropySpec::tsallis(0.5), 50).passed);

  const auto mq = check_s1_condition(EntropySpec::make(EntropyId::mathai_Mq_star, {{"q", 0.5}}), 50);
  EXPECT_TRUE(mq.passed);
  EXPECT_EQ(mq.orientation, -1);

  const auto j = to_json(sh);
  EXPECT_EQ(j.at("spec"), "shannon");
  EXPECT_TRUE(j.at("passed").get<bool>());
}

TEST(S1Condition, BlackBoxSpecsAreRejected) {
  CustomFunctional f;
  f.name = "opaque";
  f.direct = [](std::span<const double>) { return 0.0; };
  try {
    check_s1_condition(EntropySpec::custom(f), 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoPhiDecomposition);
  }
}

TEST(S1Condition, FiniteDifferenceFallbackForCustomPhi) {
  CustomFunctional gini;
  gini.name = "gini";
  gini.phi = [](double x) { return x * (1 - x); };
  const auto cert = check_s1_condition(EntropySpec::custom(gini), 60);
  EXPECT_TRUE(cert.passed);
  EXPECT_FALSE(cert.closed_form_derivative);
}

TEST(Concavity, Examples) {
  EXPECT_TRUE(check_concavity(EntropySpec::make(EntropyId::paired)).passed);
  EXPECT_TRUE(check_concavity(EntropySpec::make(EntropyId::genetic)).passed);
  const auto he = check_concavity(EntropySpec::counterexample());
  EXPECT_FALSE(he.passed);
  ASSERT_TRUE(he.witness.has_value());
}

TEST(Concavity, RelationOneReferenceSpecsPass) {
  for (EntropyId id : relation_one_ids()) {
    for (const auto& spec : reference_parameter_sets(id)) {
      EXPECT_TRUE(check_concavity(spec, 100).passed) << spec.label();
    }
  }
}

TEST(Pairing, Examples) {
  const auto sm = check_h_phi_pairing(
      EntropySpec::make(EntropyId::sharma_mittal_rs, {{"r", 2}, {"s", 0.5}}));
  EXPECT_TRUE(sm.passed);
  EXPECT_TRUE(sm.strict);
  EXPECT_FALSE(sm.pattern.empty());

  const auto up = check_h_phi_pairing(EntropySpec::make(EntropyId::mathai_Mq_star, {{"q", 1.5}}));
  EXPECT_TRUE(up.passed);
  EXPECT_EQ(up.pattern, "h'>0,phi''<0");
  const auto down = check_h_phi_pairing(EntropySpec::make(EntropyId::mathai_Mq_star, {{"q", 0.5}}));
  EXPECT_TRUE(down.passed);
  EXPECT_EQ(down.pattern, "h'<0,phi''>0");

  for (const auto& spec : reference_parameter_sets(EntropyId::nath)) {
    EXPECT_TRUE(check_h_phi_pairing(spec).passed) << spec.label();
  }
  EXPECT_FALSE(check_h_phi_pairing(EntropySpec::counterexample()).passed);
}

TEST(Pairing, ReachableRangeIsOrdered) {
  for (const auto& spec : reference_catalog()) {
    if (!spec.descriptor().phi_available || spec.descriptor().phi_depends_on_n) continue;
    const auto [lo, hi] = reachable_phi_sum_range(spec);
    EXPECT_LE(lo, hi) << spec.label();
  }
}

TEST(PhiZero, HypoentropyConstancyResidual) {
  const auto spec = EntropySpec::make(EntropyId::hypoentropy, {{"lambda", 2}});
  EXPECT_LE(phi_zero_constancy_residual(spec), kPhiZeroTolerance);
  EXPECT_TRUE(check_s1_condition(spec, 50).passed);
}

TEST(TransformConsistency, ReferencePairs) {
  for (const auto& [src, dst] : reference_transform_pairs()) {
    const auto r = check_transform_consistency(src, dst, 1000, 11);
    EXPECT_TRUE(r.passed) << r.source << " -> " << r.target;
    EXPECT_EQ(r.order_violations, 0u);
    EXPECT_EQ(r.monotonicity_violations, 0u);
    EXPECT_LE(r.max_identity_residual, 1e-10);
    EXPECT_EQ(r.samples, 1000u);
  }
}

TEST(TransformConsistency, UnsupportedPairThrows) {
  EXPECT_THROW(check_transform_consistency(EntropySpec::shannon(), EntropySpec::renyi(2), 10, 0), Error);
}

}  // namespace
}  // namespace cgrain
