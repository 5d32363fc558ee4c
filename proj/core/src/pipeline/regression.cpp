// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/pipeline/regression.hpp"

#include <fstream>
#include <sstream>

#include "provbench/error.hpp"

namespace provbench::pipeline {

namespace fs = std::filesystem;

namespace {

// Dummy nodes get a label no ingested node can carry, so the similarity
// check can only pair them with each other.
PropertyGraph with_marked_dummies(const BenchmarkGraph& b) {
  PropertyGraph g;
  for (const auto& [id, node] : b.graph.nodes()) {
    g.add_node(id, b.dummy_nodes.count(id) ? "\x01dummy:" + node.label
                                           : node.label);
    g.replace_properties(id, node.properties);
  }
  for (const auto& [id, edge] : b.graph.edges()) {
    g.add_edge(id, edge.source, edge.target, edge.label);
    g.replace_properties(id, edge.properties);
  }
  return g;
}

std::string signed_delta(std::int64_t v) {
  return (v > 0 ? "+" : "") + std::to_string(v);
}

}  // namespace

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kUnchanged: return "unchanged";
    case VerdictKind::kChanged: return "changed";
    case VerdictKind::kNew: return "new";
  }
  return "new";
}

fs::path baseline_path(const fs::path& dir, std::string_view spec) {
  return dir / (std::string(spec) + ".dl");
}

Verdict compare_to_baseline(const BenchmarkGraph& current,
                            const BenchmarkGraph& baseline,
                            const MatchOptions& options) {
  Verdict v;
  v.node_delta = static_cast<std::int64_t>(current.graph.node_count()) -
                 static_cast<std::int64_t>(baseline.graph.node_count());
  v.edge_delta = static_cast<std::int64_t>(current.graph.edge_count()) -
                 static_cast<std::int64_t>(baseline.graph.edge_count());

  auto witness = check_similar(with_marked_dummies(baseline),
                               with_marked_dummies(current), options);
  v.same_shape = witness.has_value();
  if (witness) {
    v.property_delta = static_cast<std::int64_t>(witness->cost);
  } else {
    v.property_delta = static_cast<std::int64_t>(current.graph.property_count()) -
                       static_cast<std::int64_t>(baseline.graph.property_count());
  }
  v.kind = witness && witness->cost == 0 ? VerdictKind::kUnchanged
                                         : VerdictKind::kChanged;

  std::ostringstream s;
  if (v.kind == VerdictKind::kUnchanged) {
    s << "unchanged";
  } else if (v.same_shape) {
    s << "changed: same shape, " << v.property_delta << " property mismatches";
  } else {
    s << "changed: nodes " << signed_delta(v.node_delta) << ", edges "
      << signed_delta(v.edge_delta) << ", properties "
      << signed_delta(v.property_delta);
  }
  v.summary = s.str();
  return v;
}

Verdict check_regression(const fs::path& dir, std::string_view spec,
                         const BenchmarkGraph& current,
                         const MatchOptions& options) {
  const fs::path path = baseline_path(dir, spec);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    Verdict v;
    v.kind = VerdictKind::kNew;
    v.node_delta = static_cast<std::int64_t>(current.graph.node_count());
    v.edge_delta = static_cast<std::int64_t>(current.graph.edge_count());
    v.property_delta = static_cast<std::int64_t>(current.graph.property_count());
    v.summary = "new: no baseline at " + path.string();
    return v;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  BenchmarkGraph baseline;
  try {
    baseline = parse_benchmark_datalog(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::kCorruptBaseline, path.string() + ": " + e.what());
  }
  return compare_to_baseline(current, baseline, options);
}

void write_baseline(const fs::path& dir, std::string_view spec,
                    const BenchmarkGraph& b) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = baseline_path(dir, spec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << emit_benchmark_datalog(b, kDefaultGid);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

}  // namespace provbench::pipeline
