// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "provbench/graph.hpp"
#include "provbench/matcher.hpp"

namespace provbench {

struct TrialGraph {
  std::size_t trial = 0;
  PropertyGraph graph;
};

/// Trials that are mutually similar (same shape, properties may differ).
struct SimilarityClass {
  /// Ordered by trial index.
  std::vector<TrialGraph> members;
  /// Trial index of the canonically least member.
  std::size_t representative = 0;
  /// trial index -> similarity witness from that member to the representative
  std::map<std::size_t, Matching> witness;

  const TrialGraph& member(std::size_t trial) const;
  const TrialGraph& representative_member() const { return member(representative); }
  std::size_t size() const { return members.size(); }
};

struct GeneralizedGraph {
  PropertyGraph graph;
  /// Trial indices of the pair the graph was generalized from.
  std::pair<std::size_t, std::size_t> trials{0, 0};
};

struct RepresentativePair {
  TrialGraph first;
  TrialGraph second;
  /// Minimum-cost similarity from first.graph to second.graph.
  Matching matching;
};

struct GeneralizeOptions {
  MatchOptions match;
  /// Classes smaller than this are treated as failed runs.
  std::size_t min_class_size = 2;
};

/// Groups trials by similarity. Classes are ordered by representative size
/// (nodes, then edges, then canonical Datalog text). BudgetExceeded names the
/// pair of trials that could not be decided.
std::vector<SimilarityClass> partition_similarity_classes(
    const std::vector<PropertyGraph>& trials, const MatchOptions& options = {});

/// Picks the smallest class of at least min_class_size members and, within
/// it, the pair with the fewest property differences (ties to the lower trial
/// indices). Throws InsufficientConsistentTrials when no class qualifies.
RepresentativePair select_representative_pair(
    const std::vector<SimilarityClass>& classes,
    const GeneralizeOptions& options = {});

/// Keeps g1's shape and ids and only the properties that g2 holds with the
/// same value at the matched element. Throws InvalidMatching unless m is a
/// bijective similarity between g1 and g2.
GeneralizedGraph generalize_pair(const PropertyGraph& g1, const PropertyGraph& g2,
                                 const Matching& m);

/// partition, select, generalize.
GeneralizedGraph generalize_trials(const std::vector<PropertyGraph>& trials,
                                   const GeneralizeOptions& options = {});

}  // namespace provbench
