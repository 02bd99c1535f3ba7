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


#include "cgrain/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cgrain/error.hpp"
#include "cgrain/io.hpp"
#include "cgrain/sampling.hpp"

namespace cgrain {

namespace {

constexpr double kInteriorFloor = 1e-6;
constexpr double kInverseTolerance = 1e-10;

FiniteDistribution draw(const EntropySpec& spec, std::size_t n, std::uint64_t seed) {
  return spec.descriptor().zero_safe ? sample_dirichlet_uniform(n, seed)
                                     : sample_dirichlet_interior(n, seed, kInteriorFloor);
}

JointDistribution draw_joint(const EntropySpec& spec, std::size_t rows, std::size_t cols,
                             std::uint64_t seed) {
  const auto cells = draw(spec, rows * cols, seed);
  return JointDistribution(rows, cols, {cells.probs().begin(), cells.probs().end()});
}

bool is_shannon_like(const EntropySpec& spec) {
  return spec.id() == EntropyId::shannon ||
         (spec.id() == EntropyId::nath && spec.param("lambda") == 1);
}

bool is_q_family(EntropyId id) {
  return id == EntropyId::renyi || id == EntropyId::tsallis || id == EntropyId::havrda_charvat ||
         id == EntropyId::mathai_Mq || id == EntropyId::mathai_Mq_star;
}

AxiomResidual start(AxiomId axiom, const EntropySpec& spec, double tolerance) {
  AxiomResidual r;
  r.axiom = axiom;
  r.spec = spec.label();
  r.tolerance = tolerance;
  r.expected = expected_conformance(spec, axiom);
  return r;
}

void record(AxiomResidual& r, double residual, nlohmann::json inputs) {
  ++r.cases_run;
  const double a = std::isnan(residual) ? INFINITY : std::abs(residual);
  if (r.cases_run == 1 || a > r.max_abs_residual) {
    r.max_abs_residual = a;
    inputs["residual"] = residual;
    r.worst_case = std::move(inputs);
  }
}

void finish(AxiomResidual& r) {
  r.within_tolerance = r.cases_run > 0 && r.max_abs_residual <= r.tolerance;
  if (r.cases_run == 0 && !r.not_applicable) r.note = "every case was skipped";
}

// Runs `body(i)` for each case, counting evaluation errors as skipped.
template <typename Body>
void run_cases(AxiomResidual& r, std::size_t samples, Body&& body) {
  for (std::size_t i = 0; i < samples; ++i) {
    try {
      body(i);
    } catch (const Error& e) {
      ++r.cases_skipped;
      if (r.note.empty()) r.note = e.what();
    }
  }
}

}  // namespace

std::string_view to_string(AxiomId id) noexcept {
  switch (id) {
    case AxiomId::positivity: return "positivity";
    case AxiomId::expandability: return "expandability";
    case AxiomId::symmetry: return "symmetry";
    case AxiomId::continuity: return "continuity";
    case AxiomId::A1: return "A1";
    case AxiomId::A2: return "A2";
    case AxiomId::A3: return "A3";
    case AxiomId::A4: return "A4";
    case AxiomId::A5: return "A5";
    case AxiomId::product_additivity: return "product_additivity";
    case AxiomId::product_pseudo_additivity: return "product_pseudo_additivity";
  }
  return "unknown";
}

std::string_view to_string(Conformance c) noexcept {
  switch (c) {
    case Conformance::conforming: return "conforming";
    case Conformance::nonconforming: return "nonconforming";
    case Conformance::unknown: return "unknown";
  }
  return "unknown";
}

Conformance expected_conformance(const EntropySpec& spec, AxiomId axiom) {
  const EntropyId id = spec.id();
  const bool he = id == EntropyId::counterexample_HE;
  switch (axiom) {
    case AxiomId::positivity:
    case AxiomId::expandability:
    case AxiomId::symmetry:
    case AxiomId::continuity:
      if (id == EntropyId::group_entropy || id == EntropyId::h_phi_custom) return Conformance::unknown;
      return Conformance::conforming;
    case AxiomId::A1:
    case AxiomId::A2:
    case AxiomId::A3:
      if (is_shannon_like(spec)) return Conformance::conforming;
      if (he || is_q_family(id)) return Conformance::nonconforming;
      return Conformance::unknown;
    case AxiomId::A4:
      if (is_shannon_like(spec)) return Conformance::conforming;
      if (he) return Conformance::nonconforming;
      return Conformance::unknown;
    case AxiomId::A5:
      if (id == EntropyId::tsallis || id == EntropyId::havrda_charvat || id == EntropyId::mathai_Mq) {
        return Conformance::conforming;
      }
      if (he) return Conformance::nonconforming;
      return Conformance::unknown;
    case AxiomId::product_additivity: {
      if (he) return Conformance::nonconforming;
      const auto g = pseudo_additivity_gamma(spec);
      if (!g) return Conformance::unknown;
      return *g == 0 ? Conformance::conforming : Conformance::nonconforming;
    }
    case AxiomId::product_pseudo_additivity:
      if (he) return Conformance::nonconforming;
      return pseudo_additivity_gamma(spec) ? Conformance::conforming : Conformance::unknown;
  }
  return Conformance::unknown;
}

bool AxiomResidual::matches_expectation() const noexcept {
  if (not_applicable || cases_run == 0) return true;
  switch (expected) {
    case Conformance::conforming: return within_tolerance;
    case Conformance::nonconforming: return !within_tolerance;
    case Conformance::unknown: return true;
  }
  return true;
}

ScalarMap ScalarMap::identity() {
  return {"identity", [](double x) { return x; }, [](double x) { return x; }};
}

std::optional<double> pseudo_additivity_gamma(const EntropySpec& spec) {
  switch (spec.id()) {
    case EntropyId::shannon:
    case EntropyId::renyi:
    case EntropyId::nath:
    case EntropyId::mathai_Mq_star:
      return 0.0;
    case EntropyId::tsallis:
      return 1 - spec.param("q");
    case EntropyId::havrda_charvat:
      return std::exp2(1 - spec.param("q")) - 1;
    case EntropyId::mathai_Mq:
      return spec.param("q") - 1;
    case EntropyId::sharma_mittal_rs:
      return 1 - spec.param("s");
    default:
      return std::nullopt;
  }
}

std::optional<CompositionPreset> composition_preset(const EntropySpec& spec) {
  if (is_shannon_like(spec)) return CompositionPreset{AxiomId::A4, 1.0, 0.0};
  switch (spec.id()) {
    case EntropyId::tsallis:
    case EntropyId::havrda_charvat:
      return CompositionPreset{AxiomId::A5, spec.param("q"), *pseudo_additivity_gamma(spec)};
    case EntropyId::mathai_Mq:
      return CompositionPreset{AxiomId::A5, 2 - spec.param("q"), *pseudo_additivity_gamma(spec)};
    default:
      return std::nullopt;
  }
}

double residual_A1(const EntropySpec& spec, const FiniteDistribution& p) {
  if (p.size() < 3) throw Error(ErrorCode::TooSmall, "A1 needs at least 3 entries");
  const double head = p[0] + p[1];
  if (!(head > 0)) throw Error(ErrorCode::DegenerateHead, "p1 + p2 must be positive");
  std::vector<double> merged{head};
  merged.insert(merged.end(), p.probs().begin() + 2, p.probs().end());
  const std::vector<double> split{p[0] / head, p[1] / head};
  return evaluate(spec, p) - evaluate(spec, std::span<const double>(merged)) -
         head * evaluate(spec, std::span<const double>(split));
}

double residual_A2(const EntropySpec& spec, const JointDistribution& j) {
  const auto marginal = j.row_sums();
  double conditional = 0;
  for (std::size_t i = 0; i < j.rows(); ++i) {
    conditional += marginal[i] * evaluate(spec, j.row_conditional(i));
  }
  return evaluate(spec, j.cells()) - evaluate(spec, std::span<const double>(marginal)) - conditional;
}

double residual_A3(const EntropySpec& spec, const FiniteDistribution& p,
                   const FiniteDistribution& q, std::size_t m) {
  if (p.size() != m) throw Error(ErrorCode::DimensionMismatch, "P must have m entries");
  const double tail = p[m - 1];
  if (!(tail > 0)) throw Error(ErrorCode::ZeroTail, "p_m must be positive");
  std::vector<double> split(p.probs().begin(), p.probs().end() - 1);
  for (double qi : q.probs()) split.push_back(tail * qi);
  return evaluate(spec, std::span<const double>(split)) - evaluate(spec, p) -
         tail * evaluate(spec, q);
}

double residual_product_composability(const EntropySpec& spec, const FiniteDistribution& p,
                                      const FiniteDistribution& q, double gamma) {
  const auto joint = JointDistribution::product(p, q);
  const double hp = evaluate(spec, p), hq = evaluate(spec, q);
  return evaluate(spec, joint.cells()) - (hp + hq + gamma * hp * hq);
}

double residual_A4_A5_general(const EntropySpec& spec, const JointDistribution& j, double alpha,
                              double gamma, const ScalarMap& f) {
  auto checked_f = [&f](double v) {
    const double fv = f.f(v);
    const double back = f.inverse(fv);
    if (!(std::abs(back - v) <= kInverseTolerance * std::max(1.0, std::abs(v)))) {
      throw Error(ErrorCode::BadInverse, "f^-1(f(x)) != x for map '" + f.name + "'");
    }
    return fv;
  };
  const auto marginal = j.column_marginal();
  const auto weights = escort(marginal, alpha);
  double mixed = 0;
  for (std::size_t k = 0; k < j.cols(); ++k) {
    mixed += weights[k] * checked_f(evaluate(spec, j.column_conditional(k)));
  }
  const double hm = f.inverse(mixed);
  const double hp = evaluate(spec, marginal);
  return evaluate(spec, j.cells()) - (hp + hm + gamma * hp * hm);
}

std::vector<AxiomResidual> check_basic_axioms(const EntropySpec& spec, std::size_t samples,
                                              std::uint64_t seed, double lipschitz_budget) {
  auto positivity = start(AxiomId::positivity, spec, kBasicAxiomTolerance);
  auto expandability = start(AxiomId::expandability, spec, kBasicAxiomTolerance);
  auto symmetry = start(AxiomId::symmetry, spec, kBasicAxiomTolerance);
  auto continuity = start(AxiomId::continuity, spec, lipschitz_budget);
  const bool zero_safe = spec.descriptor().zero_safe;
  expandability.not_applicable = !zero_safe;
  if (!zero_safe) expandability.note = "spec does not admit zero probabilities";

  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, {i, 0}));
    const std::size_t n = 2 + rng.below(7);
    std::optional<FiniteDistribution> p;
    double h = 0;
    try {
      p.emplace(draw(spec, n, derive_seed(seed, {i, 1})));
      h = evaluate(spec, *p);
    } catch (const Error& e) {
      for (auto* r : {&positivity, &expandability, &symmetry, &continuity}) {
        ++r->cases_skipped;
        if (r->note.empty()) r->note = e.what();
      }
      continue;
    }
    const auto probs = to_json(*p);
    record(positivity, std::max(0.0, -h), {{"p", probs}, {"H", h}});

    std::vector<double> permuted(p->probs().begin(), p->probs().end());
    for (std::size_t k = permuted.size(); k > 1; --k) std::swap(permuted[k - 1], permuted[rng.below(k)]);
    run_cases(symmetry, 1, [&](std::size_t) {
      record(symmetry, evaluate(spec, std::span<const double>(permuted)) - h,
             {{"p", probs}, {"permuted", permuted}});
    });

    if (zero_safe) {
      std::vector<double> expanded(p->probs().begin(), p->probs().end());
      expanded.insert(expanded.begin() + static_cast<std::ptrdiff_t>(rng.below(n + 1)), 0.0);
      run_cases(expandability, 1, [&](std::size_t) {
        record(expandability, evaluate(spec, std::span<const double>(expanded)) - h,
               {{"p", probs}, {"expanded", expanded}});
      });
    }

    std::vector<double> weights(p->probs().begin(), p->probs().end());
    for (double& w : weights) w += kContinuityEpsilon * rng.uniform_open();
    run_cases(continuity, 1, [&](std::size_t) {
      const auto moved = FiniteDistribution::from_weights(weights);
      record(continuity, (evaluate(spec, moved) - h) / kContinuityEpsilon,
             {{"p", probs}, {"perturbed", to_json(moved)}, {"epsilon", kContinuityEpsilon}});
    });
  }
  std::vector<AxiomResidual> out{positivity, expandability, symmetry, continuity};
  for (auto& r : out) finish(r);
  return out;
}

std::vector<AxiomResidual> run_axiom_suite(const EntropySpec& spec, std::size_t samples,
                                           std::uint64_t seed) {
  auto out = check_basic_axioms(spec, samples, derive_seed(seed, {0}));

  auto a1 = start(AxiomId::A1, spec, kStructuralAxiomTolerance);
  run_cases(a1, samples, [&](std::size_t i) {
    Rng rng(derive_seed(seed, {1, i}));
    const auto p = draw(spec, 3 + rng.below(4), derive_seed(seed, {1, i, 1}));
    record(a1, residual_A1(spec, p), {{"p", to_json(p)}});
  });
  finish(a1);
  out.push_back(std::move(a1));

  auto a2 = start(AxiomId::A2, spec, kStructuralAxiomTolerance);
  if (!spec.descriptor().zero_safe) {
    a2.not_applicable = true;
    a2.note = "zero-padding construction needs a zero-safe spec";
  } else {
    run_cases(a2, samples, [&](std::size_t i) {
      Rng rng(derive_seed(seed, {2, i}));
      const std::size_t rows = 2 + rng.below(5), cols = 2 + rng.below(5);
      const auto j = draw_joint(spec, rows, cols, derive_seed(seed, {2, i, 1}));
      record(a2, residual_A2(spec, j), {{"J", to_json(j)}});
    });
  }
  finish(a2);
  out.push_back(std::move(a2));

  auto a3 = start(AxiomId::A3, spec, kStructuralAxiomTolerance);
  run_cases(a3, samples, [&](std::size_t i) {
    Rng rng(derive_seed(seed, {3, i}));
    const std::size_t m = 2 + rng.below(4);
    const std::size_t k = 2 + rng.below(6 - m);
    const auto p = draw(spec, m, derive_seed(seed, {3, i, 1}));
    const auto q = draw(spec, k, derive_seed(seed, {3, i, 2}));
    record(a3, residual_A3(spec, p, q, m), {{"P", to_json(p)}, {"Q", to_json(q)}});
  });
  finish(a3);
  out.push_back(std::move(a3));

  const double gamma = pseudo_additivity_gamma(spec).value_or(0.0);
  auto product = start(gamma == 0 ? AxiomId::product_additivity : AxiomId::product_pseudo_additivity,
                       spec, kStructuralAxiomTolerance);
  run_cases(product, samples, [&](std::size_t i) {
    Rng rng(derive_seed(seed, {4, i}));
    const auto p = draw(spec, 2 + rng.below(5), derive_seed(seed, {4, i, 1}));
    const auto q = draw(spec, 2 + rng.below(5), derive_seed(seed, {4, i, 2}));
    record(product, residual_product_composability(spec, p, q, gamma),
           {{"P", to_json(p)}, {"Q", to_json(q)}, {"gamma", gamma}});
  });
  finish(product);
  out.push_back(std::move(product));

  if (const auto preset = composition_preset(spec)) {
    auto comp = start(preset->axiom, spec, kStructuralAxiomTolerance);
    const auto f = ScalarMap::identity();
    run_cases(comp, samples, [&](std::size_t i) {
      Rng rng(derive_seed(seed, {5, i}));
      const std::size_t rows = 2 + rng.below(5), cols = 2 + rng.below(5);
      const auto j = draw_joint(spec, rows, cols, derive_seed(seed, {5, i, 1}));
      record(comp, residual_A4_A5_general(spec, j, preset->alpha, preset->gamma, f),
             {{"J", to_json(j)}, {"alpha", preset->alpha}, {"gamma", preset->gamma}, {"f", f.name}});
    });
    finish(comp);
    out.push_back(std::move(comp));
  }
  return out;
}

nlohmann::json to_json(const AxiomResidual& r) {
  nlohmann::json j = {
      {"axiom", std::string(to_string(r.axiom))},
      {"spec", r.spec},
      {"max_abs_residual", r.max_abs_residual},
      {"tolerance", r.tolerance},
      {"cases_run", r.cases_run},
      {"cases_skipped", r.cases_skipped},
      {"expected", std::string(to_string(r.expected))},
      {"within_tolerance", r.within_tolerance},
      {"matches_expectation", r.matches_expectation()},
  };
  if (r.not_applicable) j["not_applicable"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.worst_case.is_null()) j["worst_case"] = r.worst_case;
  return j;
}

}  // namespace cgrain
