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


#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cgrain/axioms.hpp"
#include "cgrain/catalog.hpp"
#include "cgrain/classification.hpp"
#include "cgrain/error.hpp"
#include "cgrain/io.hpp"
#include "cgrain/sampling.hpp"
#include "cgrain/verify.hpp"

namespace cgrain::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool looks_inline(const std::string& arg) {
  const auto pos = arg.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '[');
}

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(flag + ": cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& flag) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(flag + ": invalid JSON (" + e.what() + ")");
  }
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Accepts inline JSON, a file path, or a bare id for parameter-free entries.
EntropySpec load_spec(const std::string& arg) {
  if (looks_inline(arg)) return spec_from_json(parse_json(arg, "--entropy"));
  std::ifstream probe(arg);
  if (!probe) {
    try {
      return spec_from_json({{"id", arg}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnknownEntropy) throw;
      throw UsageError("--entropy: '" + arg + "' is neither JSON, a readable file nor an entropy id");
    }
  }
  return spec_from_json(parse_json(read_file(arg, "--entropy"), "--entropy"));
}

FiniteDistribution load_dist(const std::string& arg) {
  if (looks_inline(arg)) return distribution_from_json(parse_json(arg, "--dist"));
  const auto text = read_file(arg, "--dist");
  if (ends_with(arg, ".csv")) return distribution_from_csv(text);
  return distribution_from_json(parse_json(text, "--dist"));
}

Partition load_partition(const std::string& arg) {
  if (looks_inline(arg)) return partition_from_json(parse_json(arg, "--partition"));
  return partition_from_json(parse_json(read_file(arg, "--partition"), "--partition"));
}

std::size_t parse_count(const std::string& s, const std::string& flag) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw UsageError(flag + ": '" + s + "' is not a count");
  return static_cast<std::size_t>(v);
}

// "3..8", "3,5,7" or "4".
std::vector<std::size_t> parse_range(const std::string& s) {
  std::vector<std::size_t> out;
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const auto lo = parse_count(s.substr(0, dots), "--n");
    const auto hi = parse_count(s.substr(dots + 2), "--n");
    if (lo > hi) throw UsageError("--n: empty range '" + s + "'");
    for (auto n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_count(item, "--n"));
  if (out.empty()) throw UsageError("--n: empty range");
  return out;
}

std::vector<EntropySpec> collect_specs(const std::vector<std::string>& entropies, bool all,
                                       bool include_unstable) {
  std::vector<EntropySpec> specs;
  if (all) specs = reference_catalog(include_unstable);
  for (const auto& e : entropies) specs.push_back(load_spec(e));
  if (specs.empty()) throw UsageError("no entropy given: use --entropy or --all");
  return specs;
}

ReportDetail parse_detail(const std::string& s) {
  if (s == "all") return ReportDetail::all;
  if (s == "failures") return ReportDetail::failures;
  throw UsageError("--detail: expected 'all' or 'failures', got '" + s + "'");
}

struct Options {
  std::vector<std::string> entropies;
  std::string dist;
  std::string partition;
  std::string n = "3..8";
  std::size_t cases = 200;
  std::uint64_t seed = 0;
  std::string format;
  double tolerance = kMarginTolerance;
  bool all = false;
  bool include_unstable = false;
  bool expect_violation = false;
  std::string detail = "all";
  std::string mode = "monotonicity";
  std::string check = "all";
  std::size_t grid = kDefaultGridDensity;
  double base = 0;
  bool curve = false;
  bool count_only = false;
  std::size_t points = 101;
};

int run_compute(const Options& o, std::ostream& out) {
  if (o.entropies.size() != 1) throw UsageError("compute: give exactly one --entropy");
  if (o.dist.empty()) throw UsageError("compute: --dist is required");
  const auto spec = load_spec(o.entropies.front());
  const auto p = load_dist(o.dist);
  double value = evaluate(spec, p);
  if (o.base != 0) {
    if (spec.id() != EntropyId::shannon) throw UsageError("--base: only supported for shannon");
    if (!(o.base > 0) || o.base == 1) throw UsageError("--base: must be positive and != 1");
    value /= std::log(o.base);
  }
  if (o.format == "json") {
    nlohmann::json j = {{"spec", to_json(spec)}, {"value", value}};
    if (o.base != 0) j["base"] = o.base;
    out << j.dump() << "\n";
  } else if (o.format.empty() || o.format == "text") {
    out << format_double(value) << "\n";
  } else {
    throw UsageError("--format: compute supports text or json");
  }
  return kExitOk;
}

int run_coarsen(const Options& o, std::ostream& out) {
  if (o.dist.empty() || o.partition.empty()) {
    throw UsageError("coarsen: --dist and --partition are required");
  }
  const auto coarse = coarse_grain(load_dist(o.dist), load_partition(o.partition));
  if (o.format == "csv") {
    out << to_csv(coarse);
  } else if (o.format.empty() || o.format == "json") {
    out << to_json(coarse).dump() << "\n";
  } else {
    throw UsageError("--format: coarsen supports json or csv");
  }
  return kExitOk;
}

int finish_report(const VerificationReport& report, const Options& o, std::ostream& out) {
  const auto format = report_format_from_string(o.format.empty() ? "json" : o.format);
  out << emit_report(report, format, parse_detail(o.detail));
  if (!report.conforms()) return kExitViolation;
  if (report.violations() > 0 && !o.expect_violation) return kExitViolation;
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  const auto specs = collect_specs(o.entropies, o.all, o.include_unstable);
  const auto ns = parse_range(o.n);
  if (o.mode == "monotonicity") {
    return finish_report(run_monotonicity_campaign(specs, ns, o.cases, o.seed, o.tolerance), o, out);
  }
  VerificationReport report;
  report.campaign_id = o.mode;
  report.seed = o.seed;
  report.tolerance = o.tolerance;
  if (o.mode == "max-entropy") {
    for (const auto& spec : specs) {
      append(report, max_entropy_check(spec, ns, o.cases, o.seed, o.tolerance));
    }
    return finish_report(report, o, out);
  }
  if (o.mode != "lattice" && o.mode != "corollary") {
    throw UsageError("--mode: expected monotonicity, lattice, corollary or max-entropy");
  }
  std::vector<FiniteDistribution> points;
  if (!o.dist.empty()) {
    points.push_back(load_dist(o.dist));
  } else {
    report.notes = "P ~ flat Dirichlet, seed derive_seed(seed, {n, case})";
    for (std::size_t n : ns) {
      for (std::size_t c = 0; c < o.cases; ++c) {
        points.push_back(sample_dirichlet_interior(n, derive_seed(o.seed, {n, c}), kCampaignInteriorFloor));
      }
    }
  }
  for (const auto& spec : specs) {
    for (const auto& p : points) {
      append(report, o.mode == "lattice" ? exhaustive_lattice_check(spec, p, o.tolerance)
                                         : corollary1_check(spec, p, o.tolerance));
    }
  }
  return finish_report(report, o, out);
}

int run_classify(const Options& o, std::ostream& out) {
  const auto specs = collect_specs(o.entropies, o.all, o.include_unstable);
  const bool all_checks = o.check == "all";
  if (!all_checks && o.check != "s1" && o.check != "concavity" && o.check != "pairing") {
    throw UsageError("--check: expected s1, concavity, pairing or all");
  }
  if (o.grid < 10) throw UsageError("--grid: must be at least 10");
  nlohmann::json result = nlohmann::json::array();
  bool ok = true;
  for (const auto& spec : specs) {
    std::vector<S1Certificate> certs;
    if (all_checks || o.check == "s1") certs.push_back(check_s1_condition(spec, o.grid));
    if (all_checks || o.check == "concavity") certs.push_back(check_concavity(spec, o.grid));
    if (all_checks || o.check == "pairing") certs.push_back(check_h_phi_pairing(spec, o.grid));
    for (const auto& c : certs) {
      ok = ok && c.passed;
      result.push_back(to_json(c));
    }
  }
  out << result.dump(2) << "\n";
  return ok ? kExitOk : kExitViolation;
}

int run_axioms(const Options& o, std::ostream& out) {
  const auto specs = collect_specs(o.entropies, o.all, o.include_unstable);
  nlohmann::json result = nlohmann::json::array();
  bool ok = true;
  for (const auto& spec : specs) {
    for (const auto& r : run_axiom_suite(spec, o.cases, o.seed)) {
      ok = ok && r.matches_expectation();
      result.push_back(to_json(r));
    }
  }
  out << result.dump(2) << "\n";
  return ok ? kExitOk : kExitViolation;
}

int run_counterexample(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.curve) {
    if (o.points < 2) throw UsageError("--count: the curve needs at least 2 points");
    const auto he = EntropySpec::counterexample();
    out << "x,phi_E\n";
    for (std::size_t i = 0; i < o.points; ++i) {
      const double x = double(i) / double(o.points - 1);
      out << format_double(x) << "," << format_double(phi_component(he, x)) << "\n";
    }
    return kExitOk;
  }
  const auto report = counterexample_suite();
  const std::string format = o.format.empty() ? "markdown" : o.format;
  const std::string marker = "expected=true violations=" + std::to_string(report.violations()) +
                             " checks=" + (report.conforms() ? "pass" : "fail") + "\n";
  (format == "markdown" ? out : err) << marker;
  out << emit_report(report, report_format_from_string(format), parse_detail(o.detail));
  if (!report.conforms()) return kExitViolation;
  return o.expect_violation ? kExitOk : kExitViolation;
}

int run_partitions(const Options& o, std::ostream& out) {
  const auto ns = parse_range(o.n);
  if (ns.size() != 1) throw UsageError("partitions: --n takes a single size");
  const std::size_t n = ns.front();
  if (o.count_only) {
    std::size_t count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    out << count << "\n";
    return kExitOk;
  }
  for_each_partition(n, [&](const Partition& a) { out << to_json(a).dump() << "\n"; });
  return kExitOk;
}

void add_entropy_options(CLI::App* cmd, Options& o, bool allow_all) {
  cmd->add_option("--entropy", o.entropies, "Entropy spec: inline JSON, file, or parameter-free id")
      ->take_all();
  if (allow_all) {
    cmd->add_flag("--all", o.all, "Use the reference catalog (counterexample excluded)");
    cmd->add_flag("--include-unstable", o.include_unstable, "Add group_entropy to --all");
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized entropies under coarse-graining", "cgrain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cgrain 0.1.0");
  Options o;

  auto* compute = app.add_subcommand("compute", "Evaluate an entropy on a distribution");
  add_entropy_options(compute, o, false);
  compute->add_option("--dist", o.dist, "Distribution: JSON array/object, .json or .csv file");
  compute->add_option("--base", o.base, "Display Shannon entropy in this logarithm base");
  compute->add_option("--format", o.format, "text (default) or json");

  auto* coarsen = app.add_subcommand("coarsen", "Coarse-grain a distribution by a partition");
  coarsen->add_option("--dist", o.dist, "Distribution")->required();
  coarsen->add_option("--partition", o.partition, "Partition: {\"blocks\": [[...], ...]} or file")
      ->required();
  coarsen->add_option("--format", o.format, "json (default) or csv");

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  add_entropy_options(verify, o, true);
  verify->add_option("--mode", o.mode, "monotonicity (default), lattice, corollary, max-entropy");
  verify->add_option("--dist", o.dist, "Fixed distribution for lattice/corollary modes");
  verify->add_option("--n", o.n, "Sizes: 3..8, 3,5,7 or 4");
  verify->add_option("--cases", o.cases, "Cases per (spec, n) cell");
  verify->add_option("--seed", o.seed, "Campaign seed");
  verify->add_option("--format", o.format, "json (default), markdown or csv");
  verify->add_option("--tolerance", o.tolerance, "Margin tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--detail", o.detail, "Entries to write: all (default) or failures");
  verify->add_flag("--expect-violation", o.expect_violation, "Exit 0 when violations are found");

  auto* classify = app.add_subcommand("classify", "Certify the monotone-difference condition");
  add_entropy_options(classify, o, true);
  classify->add_option("--grid", o.grid, "Grid density");
  classify->add_option("--check", o.check, "s1, concavity, pairing or all (default)");

  auto* axioms = app.add_subcommand("axioms", "Axiom residual suite");
  add_entropy_options(axioms, o, true);
  axioms->add_option("--cases", o.cases, "Random cases per axiom");
  axioms->add_option("--seed", o.seed, "Seed");

  auto* counter = app.add_subcommand("counterexample", "Reproduce the counterexample values");
  counter->add_option("--format", o.format, "markdown (default), json or csv");
  counter->add_option("--detail", o.detail, "Entries to write: all (default) or failures");
  counter->add_flag("--expect-violation", o.expect_violation, "Exit 0 when the violations appear");
  counter->add_flag("--curve", o.curve, "Write (x, phi_E(x)) samples as CSV instead");
  counter->add_option("--count", o.points, "Number of curve samples");

  auto* partitions = app.add_subcommand("partitions", "Enumerate set partitions");
  partitions->add_option("--n", o.n, "Ground set size")->required();
  partitions->add_flag("--count", o.count_only, "Print only the number of partitions");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return run_compute(o, out);
    if (*coarsen) return run_coarsen(o, out);
    if (*verify) return run_verify(o, out);
    if (*classify) return run_classify(o, out);
    if (*axioms) return run_axioms(o, out);
    if (*counter) return run_counterexample(o, out, err);
    if (*partitions) return run_partitions(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cgrain::cli
