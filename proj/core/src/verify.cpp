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


#include "cgrain/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <string_view>
#include <thread>

#include "cgrain/error.hpp"
#include "cgrain/sampling.hpp"

namespace cgrain {

namespace {

// Runs body(i) for i in [0, count) on a small thread pool. Callers write
// into preallocated slots, so the result does not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, std::max<std::size_t>(1, count / 256));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<double> to_vector(const FiniteDistribution& p) {
  return {p.probs().begin(), p.probs().end()};
}

void set_margin(CaseRecord& c, double h_a, double h_b, double tolerance) {
  c.h_a = h_a;
  c.h_b = h_b;
  c.margin = h_a - h_b;
  c.pass = c.margin >= -tolerance;
}

void mark_skipped(CaseRecord& c, const std::exception& e) {
  c.skipped = e.what();
  c.h_a = c.h_b = c.margin = 0;
  c.pass = false;
}

CheckRecord value_check(std::string name, double expected, double actual, double tolerance) {
  return {std::move(name), expected, actual, tolerance, std::abs(actual - expected) <= tolerance};
}

CheckRecord inequality_check(std::string name, double smaller, double larger) {
  // actual is the gap larger - smaller, which must be positive.
  const double gap = larger - smaller;
  return {std::move(name), std::nullopt, gap, 0.0, gap > 0};
}

}  // namespace

bool expects_violation(const EntropySpec& spec) noexcept {
  return spec.id() == EntropyId::counterexample_HE;
}

bool VerificationReport::conforms() const noexcept {
  std::map<std::string_view, std::size_t> expected;  // label -> violations over all kinds
  for (const auto& s : summary) {
    if (!s.conforms()) return false;
    if (s.expected_violation) expected[s.label] += s.violations;
  }
  return std::all_of(expected.begin(), expected.end(), [](const auto& e) { return e.second > 0; }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::size_t VerificationReport::violations() const noexcept {
  std::size_t total = 0;
  for (const auto& s : summary) total += s.violations;
  return total;
}

void summarize(VerificationReport& report) {
  report.summary.clear();
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const auto& e : report.entries) {
    auto key = std::make_pair(e.label, e.kind);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, report.summary.size()).first;
      report.summary.push_back({e.label, e.kind, 0, 0, 0, std::nullopt, e.expected_violation});
    }
    auto& s = report.summary[it->second];
    ++s.cases;
    s.expected_violation = s.expected_violation || e.expected_violation;
    if (!e.skipped.empty()) {
      ++s.skipped;
      continue;
    }
    if (!e.pass) ++s.violations;
    if (!s.min_margin || e.margin < *s.min_margin) s.min_margin = e.margin;
  }
}

void append(VerificationReport& report, const VerificationReport& other) {
  for (const auto& label : other.specs) {
    if (std::find(report.specs.begin(), report.specs.end(), label) == report.specs.end()) {
      report.specs.push_back(label);
    }
  }
  report.entries.insert(report.entries.end(), other.entries.begin(), other.entries.end());
  report.checks.insert(report.checks.end(), other.checks.begin(), other.checks.end());
  summarize(report);
}

VerificationReport run_monotonicity_campaign(const std::vector<EntropySpec>& specs,
                                             const std::vector<std::size_t>& n_values,
                                             std::size_t cases_per_cell, std::uint64_t seed,
                                             double tolerance) {
  for (std::size_t n : n_values) {
    if (n < 3) throw Error(ErrorCode::TooSmall, "campaign sizes must be at least 3");
  }
  VerificationReport report;
  report.campaign_id = "monotonicity";
  report.seed = seed;
  report.tolerance = tolerance;
  report.notes = "P ~ flat Dirichlet; entries below 1e-6 redrawn for specs that reject zeros; "
                 "(A, B) by sequential random merging";
  for (const auto& spec : specs) report.specs.push_back(spec.label());

  const std::size_t per_spec = n_values.size() * cases_per_cell;
  report.entries.resize(specs.size() * per_spec);
  parallel_for(report.entries.size(), [&](std::size_t flat) {
    const std::size_t s = flat / per_spec;
    const std::size_t n = n_values[(flat % per_spec) / cases_per_cell];
    const std::size_t c = flat % cases_per_cell;
    const auto& spec = specs[s];
    auto& rec = report.entries[flat];
    rec.label = report.specs[s];
    rec.kind = "refinement";
    rec.n = n;
    rec.case_index = c;
    rec.case_seed = derive_seed(seed, {s, n, c});
    rec.expected_violation = expects_violation(spec);
    try {
      const auto p_seed = derive_seed(rec.case_seed, {0});
      const auto p = spec.descriptor().zero_safe
                         ? sample_dirichlet_uniform(n, p_seed)
                         : sample_dirichlet_interior(n, p_seed, kCampaignInteriorFloor);
      auto [a, b] = random_refinement_pair(n, derive_seed(rec.case_seed, {1}));
      rec.probs = to_vector(p);
      set_margin(rec, evaluate(spec, coarse_grain(p, a)), evaluate(spec, coarse_grain(p, b)),
                 tolerance);
      rec.a = std::move(a);
      rec.b = std::move(b);
    } catch (const std::exception& e) {
      mark_skipped(rec, e);
    }
  });
  summarize(report);
  return report;
}

VerificationReport exhaustive_lattice_check(const EntropySpec& spec, const FiniteDistribution& p,
                                            double tolerance) {
  const std::size_t n = p.size();
  if (n > kMaxLatticeSize) {
    throw Error(ErrorCode::TooLarge, "exhaustive lattice check is limited to n <= 8");
  }
  VerificationReport report;
  report.campaign_id = "lattice";
  report.tolerance = tolerance;
  report.specs = {spec.label()};
  const auto probs = to_vector(p);
  const auto partitions = enumerate_partitions(n);
  const auto identity = Partition::singletons(n);
  const double h_identity = evaluate(spec, p);

  std::size_t index = 0;
  auto add = [&](const char* kind, const Partition& a, const Partition& b, double ha, double hb) {
    CaseRecord rec;
    rec.label = report.specs.front();
    rec.kind = kind;
    rec.n = n;
    rec.case_index = index++;
    rec.probs = probs;
    rec.a = a;
    rec.b = b;
    rec.expected_violation = expects_violation(spec);
    set_margin(rec, ha, hb, tolerance);
    report.entries.push_back(std::move(rec));
  };

  for (const auto& a : partitions) {
    const double ha = evaluate(spec, coarse_grain(p, a));
    const std::size_t k = a.block_count();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto b = merge_blocks(a, i, j);
        const double hb = evaluate(spec, coarse_grain(p, b));
        add(b.block_count() == 1 ? "covering_edge_total_merge" : "covering_edge", a, b, ha, hb);
      }
    }
  }
  for (const auto& b : partitions) {
    if (b == identity) continue;
    add(b.block_count() == 1 ? "corollary_total_merge" : "corollary", identity, b, h_identity,
        evaluate(spec, coarse_grain(p, b)));
  }
  summarize(report);
  return report;
}

VerificationReport corollary1_check(const EntropySpec& spec, const FiniteDistribution& p,
                                    double tolerance) {
  const std::size_t n = p.size();
  if (n > kMaxLatticeSize) throw Error(ErrorCode::TooLarge, "corollary check is limited to n <= 8");
  VerificationReport report;
  report.campaign_id = "corollary1";
  report.tolerance = tolerance;
  report.specs = {spec.label()};
  const auto identity = Partition::singletons(n);
  const double h = evaluate(spec, p);
  std::size_t index = 0;
  for_each_partition(n, [&](const Partition& b) {
    if (b == identity) return;
    CaseRecord rec;
    rec.label = report.specs.front();
    rec.kind = b.block_count() == 1 ? "corollary_total_merge" : "corollary";
    rec.n = n;
    rec.case_index = index++;
    rec.probs = to_vector(p);
    rec.a = identity;
    rec.b = b;
    rec.expected_violation = expects_violation(spec);
    set_margin(rec, h, evaluate(spec, coarse_grain(p, b)), tolerance);
    report.entries.push_back(std::move(rec));
  });
  summarize(report);
  return report;
}

VerificationReport counterexample_suite() {
  const auto he = EntropySpec::counterexample();
  VerificationReport report;
  report.campaign_id = "counterexample";
  report.specs = {he.label()};
  constexpr double kExact = 1e-12;

  const FiniteDistribution p3({0.2, 0.3, 0.5});
  const FiniteDistribution p2({0.5, 0.5});
  const auto u4 = FiniteDistribution::uniform(4);
  const FiniteDistribution p4({0.2, 0.25, 0.25, 0.3});
  const double h3 = evaluate(he, p3), h2 = evaluate(he, p2);
  const double hu = evaluate(he, u4), h4 = evaluate(he, p4);

  report.checks.push_back(value_check("H_E(0.2,0.3,0.5)", 1.3, h3, kExact));
  report.checks.push_back(value_check("H_E(0.5,0.5)", 1.5, h2, kExact));
  report.checks.push_back(value_check("H_E(0.25,0.25,0.25,0.25)", 1.0, hu, kExact));
  report.checks.push_back(value_check("H_E(0.2,0.25,0.25,0.3)", 1.05, h4, kExact));
  report.checks.push_back(inequality_check("H_E(0.2,0.3,0.5) < H_E(0.5,0.5)", h3, h2));
  report.checks.push_back(
      inequality_check("H_E(0.25,0.25,0.25,0.25) < H_E(0.2,0.25,0.25,0.3)", hu, h4));
  report.checks.push_back(value_check("phi_E'(0.1)", 1.0, phi_prime(he, 0.1), 0.0));
  report.checks.push_back(value_check("phi_E'(0.3)", 2.0, phi_prime(he, 0.3), 0.0));

  CaseRecord merge;
  merge.label = report.specs.front();
  merge.kind = "refinement";
  merge.n = 3;
  merge.probs = to_vector(p3);
  merge.a = Partition::singletons(3);
  merge.b = Partition({{0, 1}, {2}}, 3);
  merge.expected_violation = true;
  set_margin(merge, h3, evaluate(he, coarse_grain(p3, *merge.b)), report.tolerance);
  report.entries.push_back(std::move(merge));

  CaseRecord maxent;
  maxent.label = report.specs.front();
  maxent.kind = "max_entropy";
  maxent.n = 4;
  maxent.probs = to_vector(p4);
  maxent.expected_violation = true;
  set_margin(maxent, hu, h4, report.tolerance);
  report.entries.push_back(std::move(maxent));

  summarize(report);
  return report;
}

VerificationReport max_entropy_check(const EntropySpec& spec,
                                     const std::vector<std::size_t>& n_values,
                                     std::size_t samples, std::uint64_t seed, double tolerance) {
  VerificationReport report;
  report.campaign_id = "max_entropy";
  report.seed = seed;
  report.tolerance = tolerance;
  report.specs = {spec.label()};
  const bool he = expects_violation(spec);
  std::vector<std::size_t> sizes = n_values;
  if (he && std::find(sizes.begin(), sizes.end(), 4) == sizes.end()) sizes.push_back(4);

  for (std::size_t n : sizes) {
    std::vector<FiniteDistribution> points;
    if (he && n == 4) points.push_back(FiniteDistribution({0.2, 0.25, 0.25, 0.3}));
    const std::size_t explicit_points = points.size();
    for (std::size_t c = 0; c < samples; ++c) {
      const auto s = derive_seed(seed, {n, c});
      points.push_back(spec.descriptor().zero_safe
                           ? sample_dirichlet_uniform(n, s)
                           : sample_dirichlet_interior(n, s, kCampaignInteriorFloor));
    }
    double h_uniform = 0;
    std::string uniform_error;
    try {
      h_uniform = evaluate(spec, FiniteDistribution::uniform(n));
    } catch (const std::exception& e) {
      uniform_error = e.what();
    }
    for (std::size_t c = 0; c < points.size(); ++c) {
      CaseRecord rec;
      rec.label = report.specs.front();
      rec.kind = "max_entropy";
      rec.n = n;
      rec.case_index = c;
      rec.case_seed = c < explicit_points ? 0 : derive_seed(seed, {n, c - explicit_points});
      rec.probs = to_vector(points[c]);
      rec.expected_violation = he;
      try {
        if (!uniform_error.empty()) throw Error(ErrorCode::DomainViolation, uniform_error);
        set_margin(rec, h_uniform, evaluate(spec, points[c]), tolerance);
      } catch (const std::exception& e) {
        mark_skipped(rec, e);
      }
      report.entries.push_back(std::move(rec));
    }
  }
  summarize(report);
  if (he) {
    double found = 0;
    for (const auto& e : report.entries) {
      if (e.n == 4 && e.skipped.empty() && !e.pass) ++found;
    }
    report.checks.push_back({"violations at n=4", std::nullopt, found, 0.0, found > 0});
  }
  return report;
}

}  // namespace cgrain
