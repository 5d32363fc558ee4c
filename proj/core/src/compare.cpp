// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/compare.hpp"

#include <utility>
#include <vector>

#include "provbench/canonical.hpp"
#include "provbench/error.hpp"

namespace provbench {

BenchmarkGraph subtract(const GeneralizedGraph& foreground,
                        const GeneralizedGraph& background,
                        const SubtractOptions& options) {
  const PropertyGraph& fg = foreground.graph;
  const PropertyGraph& bg = background.graph;

  SolveStats stats;
  auto m = best_subgraph_matching(bg, fg, options.match, &stats);
  if (!m) {
    throw Error(ErrorCode::kBackgroundNotEmbeddable,
                "background graph (" + std::to_string(bg.node_count()) +
                    " nodes, " + std::to_string(bg.edge_count()) +
                    " edges) is not a subgraph of the foreground (" +
                    std::to_string(fg.node_count()) + " nodes, " +
                    std::to_string(fg.edge_count()) + " edges)");
  }

  BenchmarkGraph out;
  out.diagnostics.embedding_cost = m->cost;
  out.diagnostics.expansions = stats.expansions;
  if (options.count_optimal_limit > 0) {
    out.diagnostics.optimal_embedding_limit = options.count_optimal_limit;
    try {
      out.diagnostics.optimal_embeddings = count_optimal_embeddings(
          bg, fg, MatchMode::kSubgraph, m->cost, options.count_optimal_limit,
          options.match);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      // Diagnostic only; leave the count at zero.
    }
  }

  std::set<ElementId> matched_nodes;
  std::set<ElementId> matched_edges;
  for (const auto& [_, image] : m->node_map) matched_nodes.insert(image);
  for (const auto& [_, image] : m->edge_map) matched_edges.insert(image);

  std::vector<std::pair<ElementId, const Edge*>> surviving;
  for (const auto& [id, e] : fg.edges()) {
    if (!matched_edges.count(id)) surviving.emplace_back(id, &e);
  }

  out.graph.set_gid(fg.gid());
  for (const auto& [id, node] : fg.nodes()) {
    if (!matched_nodes.count(id)) {
      out.graph.add_node(id, node.label);
      out.graph.replace_properties(id, node.properties);
    }
  }
  for (const auto& [id, e] : surviving) {
    for (const auto* endpoint : {&e->source, &e->target}) {
      if (!out.graph.has_node(*endpoint)) {
        out.graph.add_node(*endpoint, fg.node(*endpoint).label);
        out.dummy_nodes.insert(*endpoint);
      }
    }
    out.graph.add_edge(id, e->source, e->target, e->label);
    out.graph.replace_properties(id, e->properties);
  }
  out.empty = out.graph.empty();
  return out;
}

bool is_empty_result(const BenchmarkGraph& b) {
  return b.graph.node_count() == 0 && b.graph.edge_count() == 0;
}

BenchmarkGraph canonicalize_benchmark(const BenchmarkGraph& b) {
  CanonicalizeOptions options;
  for (const auto& id : b.dummy_nodes) options.node_tags[id] = "dummy";
  CanonicalForm form = canonical_form(b.graph, options);

  BenchmarkGraph out;
  out.graph = std::move(form.graph);
  for (const auto& id : b.dummy_nodes) out.dummy_nodes.insert(form.renaming.at(id));
  out.empty = out.graph.empty();
  out.diagnostics = b.diagnostics;
  return out;
}

std::string emit_benchmark_datalog(const BenchmarkGraph& b, std::string_view gid) {
  BenchmarkGraph canonical = canonicalize_benchmark(b);
  return emit_datalog_document({canonical.graph, canonical.dummy_nodes}, gid);
}

BenchmarkGraph parse_benchmark_datalog(std::string_view text) {
  DatalogDocument doc = parse_datalog_document(text);
  BenchmarkGraph out;
  out.graph = std::move(doc.graph);
  out.dummy_nodes = std::move(doc.dummy_nodes);
  out.empty = out.graph.empty();
  return out;
}

}  // namespace provbench
