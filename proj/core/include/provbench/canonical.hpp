// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "provbench/graph.hpp"

namespace provbench {

struct CanonicalForm {
  PropertyGraph graph;
  /// original id -> canonical id, for nodes and edges
  std::map<ElementId, ElementId> renaming;
};

struct CanonicalizeOptions {
  /// Extra per-node tags that must be respected by the relabeling (e.g. the
  /// dummy flag of a benchmark graph). Nodes absent from the map get "".
  std::map<ElementId, std::string> node_tags;
  /// Upper bound on complete orderings examined during tie breaking. Beyond
  /// it, remaining ties fall back to original-id order.
  std::size_t max_leaves = 1024;
};

/// Relabels nodes to n1..nk and edges to e1..em.
///
/// Nodes are first ordered by (label, out/in degree, properties), refined by
/// neighbourhood until stable. Remaining ties are resolved by trying each
/// candidate and keeping the lexicographically least Datalog serialization,
/// so isomorphic graphs with equal properties produce byte-identical output
/// as long as the search stays under max_leaves.
CanonicalForm canonical_form(const PropertyGraph& graph,
                             const CanonicalizeOptions& options = {});

PropertyGraph canonicalize(const PropertyGraph& graph);

/// emit_datalog(canonicalize(graph), graph.gid())
std::string canonical_datalog(const PropertyGraph& graph);

}  // namespace provbench
