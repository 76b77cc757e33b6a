// Copyright 2026 The RecallForge Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Pure-strategy enumeration: the OpenMP kernel against the serial reference.
// The pennies family with keyed second player has ceil(n/2) + 2 binary
// infosets, so n controls the strategy count directly.

#include <benchmark/benchmark.h>

#include "recall_forge/generators.h"
#include "recall_forge/solver.h"

namespace recall_forge {
namespace {

void BM_BruteforceParallel(benchmark::State& state) {
  Game game = GenPennies(PenniesVariant::kIII, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveBruteforce(game));
  }
  state.counters["strategies"] = static_cast<double>(
      std::size_t{1} << ((state.range(0) + 1) / 2 + 2));
}

void BM_BruteforceSerial(benchmark::State& state) {
  Game game = GenPennies(PenniesVariant::kIII, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveBruteforceSerial(game));
  }
  state.counters["strategies"] = static_cast<double>(
      std::size_t{1} << ((state.range(0) + 1) / 2 + 2));
}

void BM_BruteforceRandom(benchmark::State& state) {
  RandomGameParams params;
  params.seed = static_cast<std::uint64_t>(state.range(0));
  params.depth = 6;
  Game game = GenRandom(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveBruteforce(game));
  }
}

BENCHMARK(BM_BruteforceParallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteforceSerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteforceRandom)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace recall_forge

BENCHMARK_MAIN();
