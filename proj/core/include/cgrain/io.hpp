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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cgrain/distribution.hpp"

namespace cgrain {

// JSON distribution: {"probs": [...]}. A bare array is accepted on input.
nlohmann::json to_json(const FiniteDistribution& p);
FiniteDistribution distribution_from_json(const nlohmann::json& j);

// JSON partition: {"blocks": [[...], ...]}. Indices are 0-based. A bare array
// of blocks is accepted on input.
nlohmann::json to_json(const Partition& a);
Partition partition_from_json(const nlohmann::json& j);

// JSON joint table: {"rows": n, "cols": m, "cells": [[row 0], [row 1], ...]}.
nlohmann::json to_json(const JointDistribution& j);
JointDistribution joint_from_json(const nlohmann::json& j);

// CSV distribution: one probability per line, 17 significant digits.
std::string to_csv(const FiniteDistribution& p);
FiniteDistribution distribution_from_csv(std::string_view text);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace cgrain
