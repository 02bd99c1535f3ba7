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


#include <cmath>
#include <sstream>
#include <string>

#include "cgrain/error.hpp"
#include "cgrain/io.hpp"
#include "cgrain/verify.hpp"

namespace cgrain {

namespace {

bool selected(const CaseRecord& e, ReportDetail detail) {
  return detail == ReportDetail::all || !e.pass || !e.skipped.empty();
}

nlohmann::json entry_json(const CaseRecord& e) {
  nlohmann::json j = {
      {"label", e.label},
      {"kind", e.kind},
      {"n", e.n},
      {"case", e.case_index},
      {"case_seed", e.case_seed},
      {"probs", e.probs},
      {"A", e.a ? to_json(*e.a)["blocks"] : nlohmann::json(nullptr)},
      {"B", e.b ? to_json(*e.b)["blocks"] : nlohmann::json(nullptr)},
      {"H_A", e.h_a},
      {"H_B", e.h_b},
      {"margin", e.margin},
      {"pass", e.pass},
      {"expected_violation", e.expected_violation},
  };
  if (!e.skipped.empty()) j["skipped"] = e.skipped;
  return j;
}

std::optional<Partition> partition_field(const nlohmann::json& j, std::size_t n) {
  if (j.is_null()) return std::nullopt;
  std::vector<Partition::Block> blocks = j.get<std::vector<Partition::Block>>();
  return Partition(std::move(blocks), n);
}

// Shortest round-trip text, keeping a decimal point on integral values.
std::string fmt(double v) {
  auto s = format_double(v);
  if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string fmt_list(const std::vector<double>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += fmt(values[i]);
  }
  return s + ")";
}

std::string fmt_partition(const std::optional<Partition>& p) {
  if (!p) return "-";
  std::string s = "{";
  for (std::size_t b = 0; b < p->block_count(); ++b) {
    if (b) s += ",";
    s += "{";
    const auto& block = p->block(b);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(block[i]);
    }
    s += "}";
  }
  return s + "}";
}

std::string emit_markdown(const VerificationReport& r, ReportDetail detail) {
  std::ostringstream out;
  out << "# Verification report: " << r.campaign_id << "\n\n";
  out << "- schema: " << r.schema << "\n";
  out << "- seed: " << r.seed << "\n";
  out << "- tolerance: " << fmt(r.tolerance) << "\n";
  if (!r.notes.empty()) out << "- notes: " << r.notes << "\n";
  out << "- conforms: " << (r.conforms() ? "yes" : "no") << "\n\n";

  out << "## Summary\n\n";
  out << "| spec | kind | cases | skipped | violations | min margin | expected violation |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& s : r.summary) {
    out << "| " << s.label << " | " << s.kind << " | " << s.cases << " | " << s.skipped << " | "
        << s.violations << " | " << (s.min_margin ? fmt(*s.min_margin) : "-") << " | "
        << (s.expected_violation ? "yes" : "no") << " |\n";
  }

  if (!r.checks.empty()) {
    out << "\n## Checks\n\n";
    out << "| check | expected | actual | tolerance | passed |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& c : r.checks) {
      out << "| " << c.name << " | " << (c.expected ? fmt(*c.expected) : "-") << " | "
          << fmt(c.actual) << " | " << fmt(c.tolerance) << " | " << (c.passed ? "yes" : "no")
          << " |\n";
    }
  }

  out << "\n## Entries\n\n";
  out << "| spec | kind | n | case | P | A | B | H(A) | H(B) | margin | pass |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& e : r.entries) {
    if (!selected(e, detail)) continue;
    out << "| " << e.label << " | " << e.kind << " | " << e.n << " | " << e.case_index << " | "
        << fmt_list(e.probs) << " | " << fmt_partition(e.a) << " | " << fmt_partition(e.b)
        << " | ";
    if (e.skipped.empty()) {
      out << fmt(e.h_a) << " | " << fmt(e.h_b) << " | " << fmt(e.margin) << " | "
          << (e.pass ? "yes" : (e.expected_violation ? "no (expected)" : "no")) << " |\n";
    } else {
      out << "- | - | - | skipped: " << e.skipped << " |\n";
    }
  }
  return out.str();
}

std::string emit_csv(const VerificationReport& r, ReportDetail detail) {
  std::string out = "spec,n,case,margin\n";
  for (const auto& e : r.entries) {
    if (!e.skipped.empty() || !selected(e, detail)) continue;
    out += e.label + "," + std::to_string(e.n) + "," + std::to_string(e.case_index) + "," +
           fmt(e.margin) + "\n";
  }
  return out;
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  if (name == "csv") return ReportFormat::csv;
  throw Error(ErrorCode::UnsupportedFormat, "unsupported report format '" + std::string(name) + "'");
}

nlohmann::json to_json(const VerificationReport& r, ReportDetail detail) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    if (selected(e, detail)) entries.push_back(entry_json(e));
  }
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& s : r.summary) {
    summary.push_back({{"label", s.label},
                       {"kind", s.kind},
                       {"cases", s.cases},
                       {"skipped", s.skipped},
                       {"violations", s.violations},
                       {"min_margin", s.min_margin ? nlohmann::json(*s.min_margin) : nlohmann::json(nullptr)},
                       {"expected_violation", s.expected_violation}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j = {{"name", c.name},
                        {"actual", c.actual},
                        {"tolerance", c.tolerance},
                        {"passed", c.passed}};
    if (c.expected) j["expected"] = *c.expected;
    checks.push_back(std::move(j));
  }
  nlohmann::json j = {{"schema", r.schema},
                      {"campaign_id", r.campaign_id},
                      {"seed", r.seed},
                      {"tolerance", r.tolerance},
                      {"specs", r.specs},
                      {"summary", summary},
                      {"checks", checks},
                      {"entries", entries},
                      {"conforms", r.conforms()}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (detail == ReportDetail::failures) j["detail"] = "failures";
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != kReportSchema) {
      throw Error(ErrorCode::ParseError, "unsupported report schema " + std::to_string(r.schema));
    }
    r.campaign_id = j.at("campaign_id").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tolerance = j.at("tolerance").get<double>();
    r.notes = j.value("notes", std::string());
    r.specs = j.at("specs").get<std::vector<std::string>>();
    for (const auto& e : j.at("entries")) {
      CaseRecord c;
      c.label = e.at("label").get<std::string>();
      c.kind = e.at("kind").get<std::string>();
      c.n = e.at("n").get<std::size_t>();
      c.case_index = e.at("case").get<std::size_t>();
      c.case_seed = e.at("case_seed").get<std::uint64_t>();
      c.probs = e.at("probs").get<std::vector<double>>();
      c.a = partition_field(e.at("A"), c.n);
      c.b = partition_field(e.at("B"), c.n);
      c.h_a = e.at("H_A").get<double>();
      c.h_b = e.at("H_B").get<double>();
      c.margin = e.at("margin").get<double>();
      c.pass = e.at("pass").get<bool>();
      c.expected_violation = e.at("expected_violation").get<bool>();
      c.skipped = e.value("skipped", std::string());
      r.entries.push_back(std::move(c));
    }
    for (const auto& s : j.at("summary")) {
      SpecSummary out;
      out.label = s.at("label").get<std::string>();
      out.kind = s.at("kind").get<std::string>();
      out.cases = s.at("cases").get<std::size_t>();
      out.skipped = s.at("skipped").get<std::size_t>();
      out.violations = s.at("violations").get<std::size_t>();
      if (!s.at("min_margin").is_null()) out.min_margin = s.at("min_margin").get<double>();
      out.expected_violation = s.at("expected_violation").get<bool>();
      r.summary.push_back(std::move(out));
    }
    for (const auto& c : j.at("checks")) {
      CheckRecord out;
      out.name = c.at("name").get<std::string>();
      if (c.contains("expected")) out.expected = c.at("expected").get<double>();
      out.actual = c.at("actual").get<double>();
      out.tolerance = c.at("tolerance").get<double>();
      out.passed = c.at("passed").get<bool>();
      r.checks.push_back(std::move(out));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string emit_report(const VerificationReport& report, ReportFormat format,
                        ReportDetail detail) {
  switch (format) {
    case ReportFormat::json:
      return to_json(report, detail).dump(2) + "\n";
    case ReportFormat::markdown:
      return emit_markdown(report, detail);
    case ReportFormat::csv:
      return emit_csv(report, detail);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unsupported report format");
}

}  // namespace cgrain
