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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cgrain/distribution.hpp"
#include "cgrain/entropy.hpp"

namespace cgrain {

inline constexpr double kMarginTolerance = 1e-9;
inline constexpr double kCampaignInteriorFloor = 1e-6;
inline constexpr std::size_t kMaxLatticeSize = 8;
inline constexpr int kReportSchema = 1;

/**
 * One compared pair of entropy values. For coarse-graining cases h_a is
 * H(P^A) for the finer partition A and h_b is H(P^B) for the coarser B; for
 * max-entropy cases h_a is the uniform value and h_b is H(P).
 * margin = h_a - h_b and pass = margin >= -tolerance. A skipped case keeps
 * the error text and zeros elsewhere.
 */
struct CaseRecord {
  std::string label;
  std::string kind;
  std::size_t n = 0;
  std::size_t case_index = 0;
  std::uint64_t case_seed = 0;
  std::vector<double> probs;
  std::optional<Partition> a;
  std::optional<Partition> b;
  double h_a = 0;
  double h_b = 0;
  double margin = 0;
  bool pass = false;
  bool expected_violation = false;
  std::string skipped;

  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

/// Tally for one (spec, kind) pair.
struct SpecSummary {
  std::string label;
  std::string kind;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  std::optional<double> min_margin;
  bool expected_violation = false;

  /// violations == 0 unless a violation is expected. Whether an expected
  /// violation actually showed up is judged per spec, across kinds, by
  /// VerificationReport::conforms().
  bool conforms() const noexcept { return expected_violation || violations == 0; }

  friend bool operator==(const SpecSummary&, const SpecSummary&) = default;
};

/// A named scalar assertion (exact value or inequality) inside a report.
struct CheckRecord {
  std::string name;
  std::optional<double> expected;
  double actual = 0;
  double tolerance = 0;
  bool passed = false;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
  int schema = kReportSchema;
  std::string campaign_id;
  std::uint64_t seed = 0;
  double tolerance = kMarginTolerance;
  std::string notes;
  std::vector<std::string> specs;
  std::vector<CaseRecord> entries;
  std::vector<SpecSummary> summary;
  std::vector<CheckRecord> checks;

  /// Every summary conforms, every check passed, and every spec expected to
  /// violate did so in at least one of its kinds.
  bool conforms() const noexcept;
  std::size_t violations() const noexcept;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Rebuilds `summary` from `entries`, in first-appearance order.
void summarize(VerificationReport& report);

/// Appends the entries, summaries and checks of `other`.
void append(VerificationReport& report, const VerificationReport& other);

/// True for specs whose violations are the point (the counterexample).
bool expects_violation(const EntropySpec& spec) noexcept;

/**
 * For each spec, n and case: draws P from the flat Dirichlet (entries below
 * 1e-6 redrawn for non-zero-safe specs) and a strict refinement pair (A, B),
 * then compares H(P^A) with H(P^B). The case seed is
 * derive_seed(seed, {spec index, n, case}). Cases run in parallel; the
 * report does not depend on the thread count.
 */
VerificationReport run_monotonicity_campaign(const std::vector<EntropySpec>& specs,
                                             const std::vector<std::size_t>& n_values,
                                             std::size_t cases_per_cell, std::uint64_t seed,
                                             double tolerance = kMarginTolerance);

/**
 * Every covering edge of the partition lattice of P's support (A and one
 * merge of two of its blocks) plus every comparison against the identity
 * partition. Edges and comparisons ending at the one-block partition are
 * reported under separate kinds. Requires P.n <= 8.
 */
VerificationReport exhaustive_lattice_check(const EntropySpec& spec, const FiniteDistribution& p,
                                            double tolerance = kMarginTolerance);

/// H(P^B) <= H(P) for every partition B other than the identity.
VerificationReport corollary1_check(const EntropySpec& spec, const FiniteDistribution& p,
                                    double tolerance = kMarginTolerance);

/// The counterexample's four values, both inequalities and the slope jump.
VerificationReport counterexample_suite();

/**
 * H(uniform n) >= H(P) - tolerance for sampled P. For the counterexample the
 * distribution (0.2, 0.25, 0.25, 0.3) is always included and at least one
 * violation at n = 4 is asserted.
 */
VerificationReport max_entropy_check(const EntropySpec& spec,
                                     const std::vector<std::size_t>& n_values,
                                     std::size_t samples, std::uint64_t seed,
                                     double tolerance = kMarginTolerance);

enum class ReportFormat { json, markdown, csv };
/// Throws UnsupportedFormat.
ReportFormat report_format_from_string(std::string_view name);

enum class ReportDetail { all, failures };

/// Deterministic serialization. With ReportDetail::failures only failing and
/// skipped entries are written (summaries and checks are always complete).
std::string emit_report(const VerificationReport& report, ReportFormat format,
                        ReportDetail detail = ReportDetail::all);

nlohmann::json to_json(const VerificationReport& report, ReportDetail detail = ReportDetail::all);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace cgrain
