// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <string>

#include "provbench/canonical.hpp"
#include "provbench/matcher.hpp"
#include "provbench/pipeline/templates.hpp"

namespace {

using namespace provbench;
using namespace provbench::pipeline;

const SyntheticTemplate& scaled(std::size_t k) {
  return builtin_templates().at("scale" + std::to_string(k));
}

// Background embedded into foreground, the comparison-stage query.
void BM_EmbedBackground(benchmark::State& state) {
  const auto& t = scaled(static_cast<std::size_t>(state.range(0)));
  const PropertyGraph fg = render_trial(t, Role::kForeground, 1, 1);
  const PropertyGraph bg = render_trial(t, Role::kBackground, 1, 1);
  SolveStats stats;
  for (auto _ : state) {
    auto m = best_subgraph_matching(bg, fg, {}, &stats);
    benchmark::DoNotOptimize(m);
  }
  state.counters["expansions"] = static_cast<double>(stats.expansions);
  state.counters["fg_nodes"] = static_cast<double>(fg.node_count());
}
BENCHMARK(BM_EmbedBackground)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

// Similarity between two trials, the generalization-stage query.
void BM_TrialSimilarity(benchmark::State& state) {
  const auto& t = scaled(static_cast<std::size_t>(state.range(0)));
  const PropertyGraph a = render_trial(t, Role::kForeground, 1, 1);
  const PropertyGraph b = render_trial(t, Role::kForeground, 1, 2);
  for (auto _ : state) {
    auto m = check_similar(a, b);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_TrialSimilarity)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

// Repeated identical deltas are the worst case for tie breaking.
void BM_Canonicalize(benchmark::State& state) {
  const auto& t = scaled(static_cast<std::size_t>(state.range(0)));
  const PropertyGraph g = render_trial(t, Role::kForeground, 1, 1);
  for (auto _ : state) {
    auto text = canonical_datalog(g);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_Canonicalize)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
