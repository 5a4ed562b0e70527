// Copyright 2026 The enlg Authors
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

#include <benchmark/benchmark.h>

#include "enlg/bounds.hpp"
#include "enlg/hierarchy.hpp"
#include "enlg/monogamy.hpp"

namespace {

using namespace enlg;

void BM_QcLevel1Bb84(benchmark::State& state) {
  const ExtendedGame g = bb84_extended_game();
  const HierarchyLevel lvl = parse_level("1");
  for (auto _ : state) benchmark::DoNotOptimize(qc_upper_bound(g, lvl).value);
}
BENCHMARK(BM_QcLevel1Bb84)->Unit(benchmark::kMillisecond);

void BM_QcChsh(benchmark::State& state) {
  const ExtendedGame g = chsh_extended_game();
  const HierarchyLevel lvl = parse_level(state.range(0) == 1 ? "1" : state.range(0) == 2 ? "1+AB" : "2");
  for (auto _ : state) benchmark::DoNotOptimize(qc_upper_bound(g, lvl).value);
}
BENCHMARK(BM_QcChsh)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_QcLevel1Mub43(benchmark::State& state) {
  const ExtendedGame g = monogamy_to_extended(mub_monogamy_game(3, 4));
  const HierarchyLevel lvl = parse_level("1");
  for (auto _ : state) benchmark::DoNotOptimize(qc_upper_bound(g, lvl).value);
}
BENCHMARK(BM_QcLevel1Mub43)->Unit(benchmark::kMillisecond);

void BM_NonsignalingBb84Repeated(benchmark::State& state) {
  const ExtendedGame g = monogamy_to_extended(parallel_repeat(bb84_monogamy_game(), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nonsignaling_value(g).value);
}
BENCHMARK(BM_NonsignalingBb84Repeated)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_SeesawBb84(benchmark::State& state) {
  const ExtendedGame g = bb84_extended_game();
  SeesawOptions o;
  o.restarts = 4;
  for (auto _ : state) benchmark::DoNotOptimize(seesaw_lower_bound(g, o).value);
}
BENCHMARK(BM_SeesawBb84)->Unit(benchmark::kMillisecond);

void BM_UnentangledMub(benchmark::State& state) {
  const MonogamyGame g = mub_monogamy_game(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(monogamy_unentangled_value(g).value);
}
BENCHMARK(BM_UnentangledMub)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MaxOverlapRepeated(benchmark::State& state) {
  const MonogamyGame g = parallel_repeat(mub_monogamy_game(3, 3), 2);
  for (auto _ : state) benchmark::DoNotOptimize(max_overlap(g, 2).c_value);
}
BENCHMARK(BM_MaxOverlapRepeated)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
