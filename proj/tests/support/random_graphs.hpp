// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <random>
#include <string>

#include "provbench/graph.hpp"

namespace provbench::testing {

struct RandomGraphShape {
  std::size_t max_nodes = 6;
  std::size_t max_edges = 8;
  std::size_t labels = 3;
  std::size_t keys = 4;
  /// Values are drawn from this many strings; small means frequent clashes.
  std::size_t values = 3;
  /// Chance that a given (element, key) is set.
  double property_probability = 0.4;
  std::size_t min_nodes = 1;
};

PropertyGraph random_graph(std::mt19937_64& rng, const RandomGraphShape& shape);

/// Same graph with node and edge ids replaced by a random permutation of
/// fresh ids.
PropertyGraph shuffle_ids(const PropertyGraph& g, std::mt19937_64& rng);

/// Induced-free random subgraph: a nonempty node subset and a random subset
/// of the edges between kept nodes.
PropertyGraph random_subgraph(const PropertyGraph& g, std::mt19937_64& rng);

/// Changes, adds or drops up to `edits` properties, using the value pool of
/// `shape`.
PropertyGraph perturb_properties(const PropertyGraph& g, std::mt19937_64& rng,
                                 std::size_t edits,
                                 const RandomGraphShape& shape);

/// Exactly `p` properties spread over the elements of a random shape, with
/// values unique per (element, key).
PropertyGraph graph_with_properties(std::mt19937_64& rng, std::size_t p);

}  // namespace provbench::testing
