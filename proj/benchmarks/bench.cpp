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


#include <benchmark/benchmark.h>

#include "cgrain/catalog.hpp"
#include "cgrain/classification.hpp"
#include "cgrain/sampling.hpp"
#include "cgrain/verify.hpp"

namespace {

using namespace cgrain;

void BM_EvaluateCatalog(benchmark::State& state) {
  const auto specs = reference_catalog();
  const auto p = sample_dirichlet_uniform(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    double acc = 0;
    for (const auto& s : specs) acc += evaluate(s, p);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(specs.size()));
}
BENCHMARK(BM_EvaluateCatalog)->Arg(4)->Arg(12)->Arg(64);

void BM_EnumeratePartitions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(6, 10, 2);

void BM_LatticeCheck(benchmark::State& state) {
  const auto p = sample_dirichlet_uniform(static_cast<std::size_t>(state.range(0)), 3);
  const auto spec = EntropySpec::shannon();
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_lattice_check(spec, p));
}
BENCHMARK(BM_LatticeCheck)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Campaign(benchmark::State& state) {
  const auto specs = reference_catalog();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_monotonicity_campaign(specs, {6, 12}, 20, 0));
  }
}
BENCHMARK(BM_Campaign)->Unit(benchmark::kMillisecond);

void BM_S1Certificate(benchmark::State& state) {
  const auto spec = EntropySpec::tsallis(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(check_s1_condition(spec, 200));
}
BENCHMARK(BM_S1Certificate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
