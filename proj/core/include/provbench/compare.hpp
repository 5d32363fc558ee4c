// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>

#include "provbench/datalog.hpp"
#include "provbench/generalize.hpp"
#include "provbench/graph.hpp"
#include "provbench/matcher.hpp"

namespace provbench {

struct SubtractDiagnostics {
  /// Property mismatches tolerated by the background embedding.
  std::uint64_t embedding_cost = 0;
  /// Distinct optimal node maps found, capped at optimal_embedding_limit.
  std::size_t optimal_embeddings = 0;
  std::size_t optimal_embedding_limit = 0;
  std::uint64_t expansions = 0;
};

/// The part of a foreground graph attributable to the target activity.
struct BenchmarkGraph {
  PropertyGraph graph;
  /// Background nodes kept, without properties, because a surviving edge
  /// touches them.
  std::set<ElementId> dummy_nodes;
  bool empty = true;
  SubtractDiagnostics diagnostics;
};

struct SubtractOptions {
  MatchOptions match;
  /// Cap on the optimal-embedding count diagnostic; 0 skips counting.
  std::size_t count_optimal_limit = 16;
};

/// Embeds background into foreground with minimum property mismatch and
/// removes the matched nodes and edges. Throws BackgroundNotEmbeddable when
/// the background is not a subgraph of the foreground.
BenchmarkGraph subtract(const GeneralizedGraph& foreground,
                        const GeneralizedGraph& background,
                        const SubtractOptions& options = {});

bool is_empty_result(const BenchmarkGraph& b);

/// Canonical `.dl` text with `#dummy` markers.
std::string emit_benchmark_datalog(const BenchmarkGraph& b, std::string_view gid);
BenchmarkGraph parse_benchmark_datalog(std::string_view text);

/// Relabels to canonical ids, carrying the dummy set along.
BenchmarkGraph canonicalize_benchmark(const BenchmarkGraph& b);

}  // namespace provbench
