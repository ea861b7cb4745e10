// Copyright 2026 The permclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference against OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "permclone/builtins.hpp"
#include "permclone/kernels.hpp"

using namespace permclone;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel; }

void BM_TupleClasses(benchmark::State& state) {
  const Weight w = char_weight(builtins::hamming_relation(2));
  const kernels::ColumnProducts cp(w, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::tuple_classes(cp, exec_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_TupleClasses)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

// identity respects everything so the sweep never stops early
void BM_RespectsSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const Weight w = builtins::conservative_weights(2).front();
  const kernels::ColumnProducts cp(w, n);
  const Gate f = identity_gate(2, n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::respects_sweep(f, cp, exec_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_RespectsSweep)->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);

void BM_FilterPermutations(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(1));
  // keep the maps fixing the parity of every point
  const auto keep = [](std::span<const std::uint32_t> p) {
    for (std::uint32_t x = 0; x < p.size(); ++x) {
      if ((p[x] ^ x) & 1) return false;
    }
    return true;
  };
  for (auto _ : state) benchmark::DoNotOptimize(kernels::filter_permutations(m, keep, exec_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_FilterPermutations)->ArgsProduct({{0, 1}, {8, 9}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
