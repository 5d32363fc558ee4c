// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "provbench/graph.hpp"
#include "provbench/pipeline/run.hpp"

namespace provbench::pipeline {

struct NodeStyle {
  std::string shape;
  std::string fillcolor;
};

/// Node label -> style; labels not listed use fallback. Dummies always use
/// dummy.
struct StyleTable {
  std::map<std::string, NodeStyle> by_label;
  NodeStyle fallback{"ellipse", "#fff3b0"};
  NodeStyle dummy{"ellipse", "#d9d9d9"};

  /// Processes and activities as blue boxes, everything else as yellow
  /// ellipses.
  static StyleTable standard();
  const NodeStyle& style_for(const std::string& label, bool is_dummy) const;
};

/// Styled DOT for viewing. Element ids are emitted as given, so callers pass
/// canonical graphs to get stable output.
std::string emit_graph_dot(const PropertyGraph& graph,
                           const std::set<ElementId>& dummies = {},
                           const StyleTable& style = StyleTable::standard());

/// DOT for a run's benchmark graph, canonicalized. Empty and failed results
/// give an empty digraph with a comment line.
std::string emit_dot(const BenchmarkResult& result,
                     const StyleTable& style = StyleTable::standard());

/// Single self-contained page: one section per result, sorted by spec name,
/// with status, sizes, stage timings and the DOT of the background,
/// foreground and benchmark graphs.
std::string emit_html(std::vector<BenchmarkResult> results);

std::string escape_html(std::string_view s);

}  // namespace provbench::pipeline
