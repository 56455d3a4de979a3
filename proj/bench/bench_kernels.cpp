/*
 * Copyright (C) 2026 mvl contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Verdict comparison: OpenMP kernel against its serial path and the naive reference.

#include <benchmark/benchmark.h>

#include <random>

#include "mvl/kernels.hpp"
#include "mvl/logiclib.hpp"
#include "mvl/reduce.hpp"

using namespace mvl;

namespace {

// Distinct formulas (no two share masks), so class merging leaves the full workload.
BoxModel random_model(std::size_t formulas, std::size_t boxes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Box> bs;
  for (std::size_t b = 0; b < boxes; ++b) {
    Box box{BitSet(formulas), BitSet(formulas)};
    for (std::size_t f = 0; f < formulas; ++f) {
      const auto r = rng() % 3;
      if (r == 0) box.p.set(f);
      if (r == 1) box.n.set(f);
    }
    bs.push_back(std::move(box));
  }
  return BoxModel::from_boxes(formulas, bs);
}

void BM_Random(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BoxModel a = random_model(n, 256, 1), b = random_model(n, 256, 1);
  std::uint64_t evals = 0;
  for (auto _ : state) {
    const AgreementResult r = compare_verdicts(a, b, 2, VerdictMode::equal, exec);
    evals = r.evaluations;
    benchmark::DoNotOptimize(r.disagreements);
  }
  state.counters["evaluations"] = static_cast<double>(evals);
  state.SetItemsProcessed(static_cast<std::int64_t>(evals) * state.iterations());
}

void BM_RandomReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BoxModel a = random_model(n, 256, 1), b = random_model(n, 256, 1);
  for (auto _ : state) benchmark::DoNotOptimize(compare_verdicts_reference(a, b, 2).disagreements);
}

// Original against reduced verdicts for K3 over the depth-2 fragment in p, q.
void BM_Reduction(benchmark::State& state, Exec exec) {
  const Semantics s = builtin("k3").semantics;
  const Fragment frag = generate_fragment({"p", "q"}, s.signature.restrict_to({"neg", "and", "or", "cond"}), 2);
  const ReductionResult red = scott_suszko(s, frag, 2);
  const BoxModel a = BoxModel::from_values(evaluate_fragment(s, frag), s.relation);
  const BoxModel b = BoxModel::from_values(evaluate_fragment(red.semantics, frag), red.semantics.relation);
  for (auto _ : state) benchmark::DoNotOptimize(compare_verdicts(a, b, 2, VerdictMode::equal, exec).disagreements);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Random, serial, Exec::serial)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Random, parallel, Exec::parallel)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomReference)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Reduction, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Reduction, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
