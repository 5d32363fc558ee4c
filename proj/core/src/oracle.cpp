// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

// Exhaustive reference matcher and matching validation. Works directly on the
// PropertyGraph maps and shares no search code with the solver.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "provbench/error.hpp"
#include "provbench/matcher.hpp"

namespace provbench {

namespace {

class Enumerator {
 public:
  explicit Enumerator(const MatchProblem& problem)
      : problem_(problem),
        pattern_(problem.pattern),
        host_(problem.host) {
    for (const auto& [id, _] : pattern_.nodes()) pattern_nodes_.push_back(id);
    for (const auto& [id, _] : pattern_.edges()) pattern_edges_.push_back(id);
    for (const auto& [id, _] : host_.nodes()) host_nodes_.push_back(id);
    for (const auto& [id, _] : host_.edges()) host_edges_.push_back(id);
  }

  std::optional<Matching> run() {
    if (problem_.mode == MatchMode::kExactBijective &&
        (pattern_.node_count() != host_.node_count() ||
         pattern_.edge_count() != host_.edge_count())) {
      return std::nullopt;
    }
    enumerate_nodes(0);
    return best_;
  }

 private:
  void enumerate_nodes(std::size_t i) {
    if (i == pattern_nodes_.size()) {
      enumerate_edges(0);
      return;
    }
    const auto& u = pattern_nodes_[i];
    for (const auto& x : host_nodes_) {
      if (used_nodes_.count(x)) continue;
      if (pattern_.node(u).label != host_.node(x).label) continue;
      current_.node_map[u] = x;
      used_nodes_.insert(x);
      enumerate_nodes(i + 1);
      used_nodes_.erase(x);
      current_.node_map.erase(u);
    }
  }

  void enumerate_edges(std::size_t i) {
    if (i == pattern_edges_.size()) {
      consider();
      return;
    }
    const auto& e = pattern_edges_[i];
    const Edge& pe = pattern_.edge(e);
    for (const auto& f : host_edges_) {
      if (used_edges_.count(f)) continue;
      const Edge& he = host_.edge(f);
      if (pe.label != he.label) continue;
      if (current_.node_map.at(pe.source) != he.source) continue;
      if (current_.node_map.at(pe.target) != he.target) continue;
      current_.edge_map[e] = f;
      used_edges_.insert(f);
      enumerate_edges(i + 1);
      used_edges_.erase(f);
      current_.edge_map.erase(e);
    }
  }

  void consider() {
    std::uint64_t cost = 0;
    for (const auto& [u, x] : current_.node_map) {
      cost += property_mismatch(pattern_.node(u).properties,
                                host_.node(x).properties, problem_.mode);
    }
    for (const auto& [e, f] : current_.edge_map) {
      cost += property_mismatch(pattern_.edge(e).properties,
                                host_.edge(f).properties, problem_.mode);
    }
    // Enumeration is in lexicographic order, so strict improvement keeps the
    // least map among equal-cost optima.
    if (!best_ || cost < best_->cost) {
      best_ = current_;
      best_->cost = cost;
    }
  }

  const MatchProblem& problem_;
  const PropertyGraph& pattern_;
  const PropertyGraph& host_;
  std::vector<ElementId> pattern_nodes_, pattern_edges_;
  std::vector<ElementId> host_nodes_, host_edges_;
  std::set<ElementId> used_nodes_, used_edges_;
  Matching current_;
  std::optional<Matching> best_;
};

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidMatching, message);
}

void check_injective_total(const std::map<ElementId, ElementId>& map,
                           std::size_t pattern_size, const char* what) {
  if (map.size() != pattern_size) {
    invalid(std::string("not every pattern ") + what + " is mapped");
  }
  std::set<ElementId> images;
  for (const auto& [from, to] : map) {
    if (!images.insert(to).second) {
      invalid(std::string(what) + " image '" + to + "' used twice");
    }
  }
}

}  // namespace

std::optional<Matching> brute_force_matching(const MatchProblem& problem) {
  if (problem.pattern.node_count() > kOracleMaxNodes ||
      problem.pattern.edge_count() > kOracleMaxEdges) {
    throw Error(ErrorCode::kOracleTooLarge,
                "pattern has " + std::to_string(problem.pattern.node_count()) +
                    " nodes and " +
                    std::to_string(problem.pattern.edge_count()) + " edges");
  }
  return Enumerator(problem).run();
}

void validate_matching(const Matching& m, const PropertyGraph& pattern,
                       const PropertyGraph& host, MatchMode mode) {
  check_injective_total(m.node_map, pattern.node_count(), "node");
  check_injective_total(m.edge_map, pattern.edge_count(), "edge");
  if (mode == MatchMode::kExactBijective &&
      (pattern.node_count() != host.node_count() ||
       pattern.edge_count() != host.edge_count())) {
    invalid("bijective matching between graphs of different size");
  }
  for (const auto& [u, x] : m.node_map) {
    if (!pattern.has_node(u)) invalid("'" + u + "' is not a pattern node");
    if (!host.has_node(x)) invalid("'" + x + "' is not a host node");
    if (pattern.node(u).label != host.node(x).label) {
      invalid("label differs between '" + u + "' and '" + x + "'");
    }
  }
  for (const auto& [e, f] : m.edge_map) {
    if (!pattern.has_edge(e)) invalid("'" + e + "' is not a pattern edge");
    if (!host.has_edge(f)) invalid("'" + f + "' is not a host edge");
    const Edge& pe = pattern.edge(e);
    const Edge& he = host.edge(f);
    if (pe.label != he.label) {
      invalid("label differs between '" + e + "' and '" + f + "'");
    }
    if (m.node_map.at(pe.source) != he.source ||
        m.node_map.at(pe.target) != he.target) {
      invalid("edge '" + e + "' endpoints not preserved by '" + f + "'");
    }
  }
}

std::uint64_t matching_cost(const Matching& m, const PropertyGraph& pattern,
                            const PropertyGraph& host, MatchMode mode) {
  validate_matching(m, pattern, host, mode);
  std::uint64_t cost = 0;
  for (const auto& [u, x] : m.node_map) {
    cost += property_mismatch(pattern.node(u).properties,
                              host.node(x).properties, mode);
  }
  for (const auto& [e, f] : m.edge_map) {
    cost += property_mismatch(pattern.edge(e).properties,
                              host.edge(f).properties, mode);
  }
  return cost;
}

}  // namespace provbench
