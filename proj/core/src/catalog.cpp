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


#include "cgrain/catalog.hpp"

#include <cmath>

namespace cgrain {

namespace {

using P = EntropySpec::Params;

std::vector<EntropySpec> with_q(EntropyId id, std::initializer_list<double> qs) {
  std::vector<EntropySpec> out;
  for (double q : qs) out.push_back(EntropySpec::make(id, {{"q", q}}));
  return out;
}

std::vector<EntropySpec> with(EntropyId id, std::initializer_list<P> sets) {
  std::vector<EntropySpec> out;
  for (const auto& params : sets) out.push_back(EntropySpec::make(id, params));
  return out;
}

constexpr EntropyId kRelationOne[] = {
    EntropyId::shannon,        EntropyId::tsallis,          EntropyId::genetic,
    EntropyId::paired,         EntropyId::hypoentropy,      EntropyId::sharma_mittal_rs,
    EntropyId::universal_group, EntropyId::two_param,       EntropyId::nath,
    EntropyId::havrda_charvat, EntropyId::mathai_Mq,        EntropyId::mathai_Mq_star,
};

constexpr EntropyId kRelationTwo[] = {
    EntropyId::shannon, EntropyId::renyi, EntropyId::tsallis, EntropyId::nath,
    EntropyId::havrda_charvat, EntropyId::mathai_Mq,
};

constexpr EntropyId kRelationThree[] = {
    EntropyId::renyi, EntropyId::tsallis, EntropyId::havrda_charvat,
    EntropyId::mathai_Mq, EntropyId::mathai_Mq_star,
};

}  // namespace

EntropySpec gini_log_preset() {
  CustomFunctional f;
  f.name = "gini_log";
  f.phi = [](double x) { return x * (1 - x); };
  f.phi_prime = [](double x) { return 1 - 2 * x; };
  f.h = [](double s) { return std::log1p(s); };
  f.h_prime = [](double s) { return 1 / (1 + s); };
  f.zero_safe = true;
  return EntropySpec::custom(std::move(f));
}

EntropySpec group_entropy_preset() { return EntropySpec::group_entropy(0, {-1.0, 1.0}, 0.5); }

std::vector<EntropySpec> reference_parameter_sets(EntropyId id) {
  switch (id) {
    case EntropyId::shannon:
    case EntropyId::genetic:
    case EntropyId::paired:
      return {EntropySpec::make(id)};
    case EntropyId::h_phi_custom:
      return {gini_log_preset()};
    case EntropyId::renyi:
      return with_q(id, {0.5, 2, 5});
    case EntropyId::tsallis:
    case EntropyId::havrda_charvat:
      return with_q(id, {0.5, 2, 3});
    case EntropyId::hypoentropy:
      return with(id, {{{"lambda", 0.5}}, {{"lambda", 1}}, {{"lambda", 5}}});
    case EntropyId::sharma_mittal_rs:
      return with(id, {{{"r", 2}, {"s", 0.5}}, {{"r", 0.5}, {"s", 2}}, {{"r", 0.5}, {"s", 0.3}}});
    case EntropyId::universal_group:
      return {EntropySpec::universal_group({1.0}), EntropySpec::universal_group({1.0, 0.4}),
              EntropySpec::universal_group({1.0, 0.4, 0.1})};
    case EntropyId::s_cd:
      return with(id, {{{"c", 1}, {"d", 1}}, {{"c", 0.5}, {"d", 0.5}}, {{"c", 0.8}, {"d", 2}}});
    case EntropyId::s_delta:
      return with(id, {{{"delta", 0.5}}, {{"delta", 1}}, {{"delta", 1.5}}});
    case EntropyId::borges_roditi:
      return with(id, {{{"a", 0.3}, {"b", 0.8}}, {{"a", 0.5}, {"b", 0.7}}, {{"a", 0.2}, {"b", 0.9}}});
    case EntropyId::s_III:
      return with_q(id, {0.7, 0.8, 0.9});
    case EntropyId::s_IV:
      return with_q(id, {0.7, 0.9, 1.2});
    case EntropyId::three_param:
      return with(id, {{{"q", 0.8}, {"alpha", 0.2}, {"beta", -0.1}},
                       {{"q", 1.2}, {"alpha", 0.3}, {"beta", -0.2}},
                       {{"q", 0.6}, {"alpha", 0.1}, {"beta", -0.05}}});
    case EntropyId::two_param:
      return with(id, {{{"r", 0.1}, {"k", 0.3}}, {{"r", -0.2}, {"k", 0.4}}, {{"r", 0.2}, {"k", 0.6}}});
    case EntropyId::abe:
      return with(id, {{{"k", 0.3}}, {{"k", -0.5}}, {{"k", 1.5}}});
    case EntropyId::kaniadakis:
      return with(id, {{{"k", 0.3}}, {{"k", -0.5}}, {{"k", 0.9}}});
    case EntropyId::gamma_entropy:
      return with(id, {{{"gamma", 0.2}}, {{"gamma", -0.3}}, {{"gamma", 0.45}}});
    case EntropyId::nath:
      return with(id, {{{"lambda", 1}, {"tau", -1}},
                       {{"lambda", 2}, {"alpha", 0.5}},
                       {{"lambda", -1}, {"alpha", 2}}});
    case EntropyId::mathai_Mq:
    case EntropyId::mathai_Mq_star:
      return with_q(id, {1.5, 0.5, -1});
    case EntropyId::group_entropy:
    case EntropyId::counterexample_HE:
      return {};
  }
  return {};
}

std::vector<EntropySpec> reference_catalog(bool include_unstable) {
  std::vector<EntropySpec> out;
  for (EntropyId id : kAllEntropyIds) {
    for (auto& spec : reference_parameter_sets(id)) out.push_back(std::move(spec));
    if (id == EntropyId::group_entropy && include_unstable) out.push_back(group_entropy_preset());
  }
  return out;
}

std::span<const EntropyId> relation_one_ids() noexcept { return kRelationOne; }
std::span<const EntropyId> relation_two_ids() noexcept { return kRelationTwo; }
std::span<const EntropyId> relation_three_ids() noexcept { return kRelationThree; }

std::vector<std::pair<EntropySpec, EntropySpec>> reference_transform_pairs() {
  return {
      {EntropySpec::tsallis(2), EntropySpec::renyi(2)},
      {EntropySpec::tsallis(0.5), EntropySpec::make(EntropyId::havrda_charvat, {{"q", 0.5}})},
      {EntropySpec::tsallis(0.5), EntropySpec::make(EntropyId::mathai_Mq, {{"q", 1.5}})},
      {EntropySpec::make(EntropyId::mathai_Mq, {{"q", 1.5}}),
       EntropySpec::make(EntropyId::mathai_Mq_star, {{"q", 1.5}})},
  };
}

}  // namespace cgrain
