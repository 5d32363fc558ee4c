// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>

#include "provbench/graph.hpp"

namespace provbench {

enum class MatchMode {
  /// Bijection on nodes and edges preserving labels and endpoints. Cost is
  /// the number of (element, key) pairs whose values differ on the two sides,
  /// counting keys present on only one side.
  kExactBijective,
  /// Injection of every pattern node and edge into the host preserving labels
  /// and endpoints. Cost counts pattern properties that are absent or
  /// different at the image; host-only properties are free.
  kSubgraph,
};

/// A label- and structure-preserving correspondence plus its cost.
struct Matching {
  std::map<ElementId, ElementId> node_map;
  std::map<ElementId, ElementId> edge_map;
  std::uint64_t cost = 0;

  friend bool operator==(const Matching&, const Matching&) = default;
};

inline constexpr std::uint64_t kDefaultExpansionBudget = 10'000'000;

struct MatchProblem {
  PropertyGraph pattern;
  PropertyGraph host;
  MatchMode mode = MatchMode::kSubgraph;
  /// Node expansion limit; must be positive when set.
  std::optional<std::uint64_t> budget;
};

struct MatchOptions {
  std::uint64_t budget = kDefaultExpansionBudget;
  /// When set, the solver writes one line per improving solution plus a
  /// summary line.
  std::ostream* trace = nullptr;
};

struct SolveStats {
  std::uint64_t expansions = 0;
  std::uint64_t improvements = 0;
};

/// Minimum-cost similarity witness between two graphs, or nullopt when they
/// do not have the same shape. Throws BudgetExceeded.
std::optional<Matching> check_similar(const PropertyGraph& g1,
                                      const PropertyGraph& g2,
                                      const MatchOptions& options = {},
                                      SolveStats* stats = nullptr);

/// Minimum-cost embedding of pattern into host, or nullopt when none exists.
/// Among optima, returns the one whose node_map is lexicographically least
/// when pattern nodes are read in search order and host nodes compared by
/// id. Throws BudgetExceeded.
std::optional<Matching> best_subgraph_matching(const PropertyGraph& pattern,
                                               const PropertyGraph& host,
                                               const MatchOptions& options = {},
                                               SolveStats* stats = nullptr);

/// Dispatches on problem.mode; problem.budget overrides options.budget.
std::optional<Matching> solve(const MatchProblem& problem,
                              const MatchOptions& options = {},
                              SolveStats* stats = nullptr);

/// Number of distinct node_maps reaching exactly `cost`, stopping at `limit`.
std::size_t count_optimal_embeddings(const PropertyGraph& pattern,
                                     const PropertyGraph& host,
                                     MatchMode mode, std::uint64_t cost,
                                     std::size_t limit,
                                     const MatchOptions& options = {});

inline constexpr std::size_t kOracleMaxNodes = 8;
inline constexpr std::size_t kOracleMaxEdges = 10;

/// Exhaustive enumeration of every node and edge injection. Exponential; only
/// for checking the solver. Throws OracleTooLarge past the size guard.
std::optional<Matching> brute_force_matching(const MatchProblem& problem);

/// Property mismatch between one pattern element and its image.
std::uint64_t property_mismatch(const Properties& pattern,
                                const Properties& host, MatchMode mode);

/// Throws InvalidMatching unless m maps every pattern element injectively
/// onto host elements with equal labels and consistent endpoints (and, for
/// kExactBijective, covers the host).
void validate_matching(const Matching& m, const PropertyGraph& pattern,
                       const PropertyGraph& host, MatchMode mode);

/// Recomputes the cost of m from scratch, ignoring m.cost.
std::uint64_t matching_cost(const Matching& m, const PropertyGraph& pattern,
                            const PropertyGraph& host,
                            MatchMode mode = MatchMode::kSubgraph);

}  // namespace provbench
