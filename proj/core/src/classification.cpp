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


#include "cgrain/classification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cgrain/error.hpp"
#include "cgrain/sampling.hpp"

namespace cgrain {

namespace {

constexpr double kUpperCap = 1 - 1e-6;
constexpr double kBreakpointSkip = 1e-4;
constexpr double kZeroProbe = 1e-300;
constexpr std::size_t kRangeSamples = 64;
constexpr std::size_t kContextN = 2;

void require_phi(const EntropySpec& spec) {
  if (!spec.descriptor().phi_available) {
    throw Error(ErrorCode::NoPhiDecomposition, spec.label() + " has no phi decomposition");
  }
}

bool near_breakpoint(const EntropySpec& spec, double x) {
  for (double b : phi_breakpoints(spec)) {
    if (std::abs(x - b) < kBreakpointSkip) return true;
  }
  return false;
}

double phi_at(const EntropySpec& spec, double x) { return phi_component(spec, x, kContextN); }

double fd_step(double x) { return 1e-6 * std::max(x, 1e-3); }

double slope(const EntropySpec& spec, double x) {
  if (spec.descriptor().phi_prime_available) return phi_prime(spec, x);
  const double h = fd_step(x);
  return (phi_at(spec, x + h) - phi_at(spec, x - h)) / (2 * h);
}

double phi_zero(const EntropySpec& spec) {
  if (spec.descriptor().phi_depends_on_n) return phi_zero_constancy_residual(spec);
  const double x = spec.descriptor().zero_safe ? 0.0 : kZeroProbe;
  return std::abs(phi_at(spec, x));
}

// Sign of h' over the reachable range: +1, -1, or 0 when mixed or zero.
int h_orientation(const EntropySpec& spec) {
  if (spec.descriptor().h_is_identity) return 1;
  const auto [lo, hi] = reachable_phi_sum_range(spec);
  int sign = 0;
  for (std::size_t i = 0; i <= kRangeSamples; ++i) {
    const double s = lo + (hi - lo) * double(i) / kRangeSamples;
    const double d = h_outer_prime(spec, s);
    const int si = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (si == 0) return 0;
    if (sign == 0) sign = si;
    if (si != sign) return 0;
  }
  return sign;
}

S1Certificate start(const char* check, const EntropySpec& spec, std::size_t grid) {
  S1Certificate c;
  c.check = check;
  c.spec = spec.label();
  c.grid_points = grid;
  c.closed_form_derivative = spec.descriptor().phi_prime_available;
  c.max_violation = -std::numeric_limits<double>::infinity();
  return c;
}

}  // namespace

std::pair<double, double> reachable_phi_sum_range(const EntropySpec& spec) {
  require_phi(spec);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const double eps = spec.descriptor().zero_safe ? 0.0 : 1e-9;
  for (std::size_t n = 2; n <= 12; ++n) {
    const double u = n * phi_component(spec, 1.0 / double(n), n);
    const double rest = eps / double(n - 1);
    const double d = phi_component(spec, 1 - eps, n) + (n - 1) * phi_component(spec, rest, n);
    lo = std::min({lo, u, d});
    hi = std::max({hi, u, d});
  }
  return {lo, hi};
}

double phi_zero_constancy_residual(const EntropySpec& spec) {
  require_phi(spec);
  if (!spec.descriptor().phi_depends_on_n) return 0.0;
  const double ref = 2 * phi_component(spec, 0.0, 2);
  double worst = 0;
  for (std::size_t n = 3; n <= 12; ++n) {
    worst = std::max(worst, std::abs(double(n) * phi_component(spec, 0.0, n) - ref));
  }
  return worst;
}

S1Certificate check_s1_condition(const EntropySpec& spec, std::size_t grid_density) {
  require_phi(spec);
  if (grid_density < 10) throw Error(ErrorCode::TooSmall, "grid density must be at least 10");
  auto cert = start("s1", spec, grid_density);
  const int orientation = h_orientation(spec);
  cert.orientation = orientation == 0 ? 1 : orientation;
  cert.phi_zero_residual = phi_zero(spec);
  const double g = double(grid_density);
  for (std::size_t i = 1; i <= grid_density; ++i) {
    const double x = 0.5 * double(i) / g;
    if (near_breakpoint(spec, x)) {
      cert.skipped += grid_density + 1;
      continue;
    }
    const double left = cert.orientation * slope(spec, x);
    for (std::size_t j = 0; j <= grid_density; ++j) {
      const double y = std::min(x + (1 - x) * double(j) / g, kUpperCap);
      if (near_breakpoint(spec, y)) {
        ++cert.skipped;
        continue;
      }
      const double right = cert.orientation * slope(spec, y);
      ++cert.evaluations;
      const double v = right - left;
      if (v > cert.max_violation) {
        cert.max_violation = v;
        cert.witness = S1Witness{x, y - x, left, right};
      }
    }
  }
  cert.passed = orientation != 0 && cert.max_violation <= cert.threshold &&
                cert.phi_zero_residual <= kPhiZeroTolerance;
  if (orientation == 0) cert.pattern = "h' changes sign";
  if (cert.passed) cert.witness.reset();
  if (!cert.passed && !cert.witness) cert.witness = S1Witness{};
  return cert;
}

S1Certificate check_concavity(const EntropySpec& spec, std::size_t grid_density) {
  require_phi(spec);
  if (grid_density < 10) throw Error(ErrorCode::TooSmall, "grid density must be at least 10");
  auto cert = start("concavity", spec, grid_density);
  const int orientation = h_orientation(spec);
  cert.orientation = orientation == 0 ? 1 : orientation;
  const double g = double(grid_density);
  // Non-zero-safe phi is sampled from the first interior point.
  const std::size_t first = spec.descriptor().zero_safe ? 0 : 1;
  std::vector<double> values(grid_density + 1, 0.0);
  double scale = 0;
  for (std::size_t i = first; i <= grid_density; ++i) {
    values[i] = cert.orientation * phi_at(spec, double(i) / g);
    scale = std::max(scale, std::abs(values[i]));
  }
  cert.threshold = kConcavityRelativeThreshold * std::max(scale, 1.0);
  for (std::size_t i = first + 1; i < grid_density; ++i) {
    const double d2 = values[i - 1] - 2 * values[i] + values[i + 1];
    ++cert.evaluations;
    if (d2 > cert.max_violation) {
      cert.max_violation = d2;
      cert.witness = S1Witness{double(i) / g, 0.0, d2, 0.0};
    }
  }
  cert.passed = orientation != 0 && cert.max_violation <= cert.threshold;
  if (orientation == 0) cert.pattern = "h' changes sign";
  if (cert.passed) cert.witness.reset();
  if (!cert.passed && !cert.witness) cert.witness = S1Witness{};
  return cert;
}

S1Certificate check_h_phi_pairing(const EntropySpec& spec, std::size_t grid_density) {
  if (!spec.descriptor().phi_available || !spec.descriptor().h_available) {
    throw Error(ErrorCode::NoDecomposition, spec.label() + " has no (h, phi) decomposition");
  }
  auto cert = start("pairing", spec, grid_density);
  cert.strict = true;
  cert.threshold = 0;
  const int orientation = h_orientation(spec);
  cert.orientation = orientation == 0 ? 1 : orientation;
  // Signed curvature sigma * phi'' must be negative everywhere: that is
  // h' > 0 with phi'' < 0, or h' < 0 with phi'' > 0.
  for (std::size_t i = 1; i <= grid_density; ++i) {
    const double x = double(i) / double(grid_density + 1);
    if (near_breakpoint(spec, x)) {
      ++cert.skipped;
      continue;
    }
    const double h = 1e-5 * std::min(x, 1 - x);
    const double curvature = (slope(spec, x + h) - slope(spec, x - h)) / (2 * h);
    const double v = cert.orientation * curvature;
    ++cert.evaluations;
    if (v > cert.max_violation) {
      cert.max_violation = v;
      cert.witness = S1Witness{x, 0.0, curvature, 0.0};
    }
  }
  cert.passed = orientation != 0 && cert.max_violation < cert.threshold;
  if (orientation == 0) {
    cert.pattern = "h' changes sign";
  } else if (cert.passed) {
    cert.pattern = orientation > 0 ? "h'>0,phi''<0" : "h'<0,phi''>0";
  } else {
    cert.pattern = "none";
  }
  if (cert.passed) cert.witness.reset();
  if (!cert.passed && !cert.witness) cert.witness = S1Witness{};
  return cert;
}

TransformConsistency check_transform_consistency(const EntropySpec& source,
                                                 const EntropySpec& target, std::size_t samples,
                                                 std::uint64_t seed) {
  if (!is_supported_transform(source.id(), target.id())) {
    throw Error(ErrorCode::UnsupportedPair, source.label() + " -> " + target.label());
  }
  TransformConsistency out;
  out.source = source.label();
  out.target = target.label();
  out.samples = samples;
  out.seed = seed;
  const bool interior = !source.descriptor().zero_safe || !target.descriptor().zero_safe;
  std::vector<std::pair<double, double>> mapped;
  mapped.reserve(2 * samples);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, {i}));
    const std::size_t n = 2 + rng.below(11);
    const auto draw = [&](std::uint64_t k) {
      const auto s = derive_seed(seed, {i, k});
      return interior ? sample_dirichlet_interior(n, s, 1e-6) : sample_dirichlet_uniform(n, s);
    };
    const auto p = draw(1);
    const auto p2 = draw(2);
    const double s1 = evaluate(source, p), s2 = evaluate(source, p2);
    const double t1 = evaluate(target, p), t2 = evaluate(target, p2);
    const double g1 = transform_between(source, target.id(), s1);
    const double g2 = transform_between(source, target.id(), s2);
    out.max_identity_residual =
        std::max({out.max_identity_residual, std::abs(g1 - t1) / std::max(1.0, std::abs(t1)),
                  std::abs(g2 - t2) / std::max(1.0, std::abs(t2))});
    mapped.emplace_back(s1, g1);
    mapped.emplace_back(s2, g2);
    const double ds = s1 - s2, dt = t1 - t2;
    if (std::abs(ds) > 1e-8 && std::abs(dt) > 1e-8) {
      ++out.compared;
      if ((ds > 0) != (dt > 0)) ++out.order_violations;
    }
  }
  std::sort(mapped.begin(), mapped.end());
  for (std::size_t i = 1; i < mapped.size(); ++i) {
    const auto& [a, ga] = mapped[i - 1];
    const auto& [b, gb] = mapped[i];
    if (b - a > 1e-12 * std::max(1.0, std::abs(a)) && !(gb > ga)) ++out.monotonicity_violations;
  }
  out.passed = out.order_violations == 0 && out.monotonicity_violations == 0 &&
               out.max_identity_residual <= 1e-10;
  return out;
}

nlohmann::json to_json(const S1Certificate& c) {
  nlohmann::json j = {
      {"check", c.check},
      {"spec", c.spec},
      {"grid_points", c.grid_points},
      {"evaluations", c.evaluations},
      {"skipped", c.skipped},
      {"orientation", c.orientation},
      {"closed_form_derivative", c.closed_form_derivative},
      {"max_violation", c.max_violation},
      {"threshold", c.threshold},
      {"strict", c.strict},
      {"phi_zero_residual", c.phi_zero_residual},
      {"passed", c.passed},
  };
  if (!c.pattern.empty()) j["pattern"] = c.pattern;
  if (c.witness) {
    j["witness"] = {{"x", c.witness->x},
                    {"p", c.witness->p},
                    {"left", c.witness->left},
                    {"right", c.witness->right}};
  }
  return j;
}

nlohmann::json to_json(const TransformConsistency& t) {
  return {{"source", t.source},
          {"target", t.target},
          {"samples", t.samples},
          {"seed", t.seed},
          {"compared", t.compared},
          {"order_violations", t.order_violations},
          {"monotonicity_violations", t.monotonicity_violations},
          {"max_identity_residual", t.max_identity_residual},
          {"passed", t.passed}};
}

}  // namespace cgrain
