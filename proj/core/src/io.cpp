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

#include "cgrain/io.hpp"

#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

#include "cgrain/error.hpp"

namespace cgrain {

using nlohmann::json;

namespace {

std::vector<double> number_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw Error(ErrorCode::ParseError, std::string(what) + " must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

json to_json(const FiniteDistribution& p) {
  return json{{"probs", std::vector<double>(p.probs().begin(), p.probs().end())}};
}

FiniteDistribution distribution_from_json(const json& j) {
  if (j.is_array()) return FiniteDistribution(number_array(j, "distribution"));
  if (!j.is_object() || !j.contains("probs")) {
    throw Error(ErrorCode::ParseError, R"(distribution JSON must be {"probs": [...]})");
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "probs") throw Error(ErrorCode::ParseError, "unexpected distribution key '" + key + "'");
  }
  return FiniteDistribution(number_array(j.at("probs"), "probs"));
}

json to_json(const Partition& a) { return json{{"blocks", a.blocks()}}; }

Partition partition_from_json(const json& j) {
  const json* blocks = &j;
  if (j.is_object()) {
    if (!j.contains("blocks")) {
      throw Error(ErrorCode::ParseError, R"(partition JSON must be {"blocks": [[...], ...]})");
    }
    blocks = &j.at("blocks");
  }
  if (!blocks->is_array()) throw Error(ErrorCode::ParseError, "blocks must be an array");
  std::vector<Partition::Block> out;
  std::size_t count = 0;
  for (const auto& b : *blocks) {
    if (!b.is_array()) throw Error(ErrorCode::ParseError, "each block must be an array");
    Partition::Block block;
    for (const auto& e : b) {
      if (!e.is_number_unsigned()) {
        throw Error(ErrorCode::ParseError, "block elements must be nonnegative integers");
      }
      block.push_back(e.get<std::size_t>());
    }
    count += block.size();
    out.push_back(std::move(block));
  }
  return Partition(std::move(out), count);
}

json to_json(const JointDistribution& jd) {
  json rows = json::array();
  for (std::size_t i = 0; i < jd.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < jd.cols(); ++k) row.push_back(jd.at(i, k));
    rows.push_back(std::move(row));
  }
  return json{{"rows", jd.rows()}, {"cols", jd.cols()}, {"cells", std::move(rows)}};
}

JointDistribution joint_from_json(const json& j) {
  const json& cells = j.is_object() ? j.at("cells") : j;
  if (!cells.is_array() || cells.empty()) {
    throw Error(ErrorCode::ParseError, "joint cells must be a nonempty array of rows");
  }
  const std::size_t rows = cells.size();
  const std::size_t cols = cells.front().size();
  std::vector<double> flat;
  for (const auto& row : cells) {
    auto values = number_array(row, "joint row");
    if (values.size() != cols) throw Error(ErrorCode::RaggedConditionals, "joint rows differ in length");
    flat.insert(flat.end(), values.begin(), values.end());
  }
  return JointDistribution(rows, cols, std::move(flat));
}

std::string to_csv(const FiniteDistribution& p) {
  std::string out;
  char buf[40];
  for (double v : p.probs()) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out += buf;
  }
  return out;
}

FiniteDistribution distribution_from_csv(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw Error(ErrorCode::ParseError, "CSV line " + std::to_string(line_no) +
                                             " is not a number: '" + std::string(line) + "'");
    }
    values.push_back(v);
  }
  return FiniteDistribution(std::move(values));
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace cgrain
