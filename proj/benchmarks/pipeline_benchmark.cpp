// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <string>

#include "provbench/pipeline/recorder.hpp"
#include "provbench/pipeline/run.hpp"

namespace {

using namespace provbench::pipeline;

void BM_RunBenchmark(benchmark::State& state) {
  RecorderProfile profile;
  profile.trials = static_cast<std::size_t>(state.range(1));
  const Recorder recorder(profile, builtin_templates());
  const auto spec = spec_for("scale" + std::to_string(state.range(0)));
  for (auto _ : state) {
    BenchmarkResult r = run_benchmark(recorder, spec);
    if (r.status.kind == StatusKind::kError) state.SkipWithError(r.status.reason.c_str());
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RunBenchmark)
    ->ArgNames({"k", "trials"})
    ->ArgsProduct({{1, 2, 4, 8}, {2, 11}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
