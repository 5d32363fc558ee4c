// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/generalize.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>

#include "provbench/canonical.hpp"
#include "provbench/error.hpp"

namespace provbench {

const TrialGraph& SimilarityClass::member(std::size_t trial) const {
  for (const auto& m : members) {
    if (m.trial == trial) return m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "trial " + std::to_string(trial) + " is not in this class");
}

std::vector<SimilarityClass> partition_similarity_classes(
    const std::vector<PropertyGraph>& trials, const MatchOptions& options) {
  if (trials.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no trials to partition");
  }

  std::vector<SimilarityClass> classes;
  std::vector<std::string> canonical_text;
  canonical_text.reserve(trials.size());
  for (const auto& g : trials) canonical_text.push_back(canonical_datalog(g));

  auto similar = [&](std::size_t a, std::size_t b) {
    try {
      return check_similar(trials[a], trials[b], options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      throw Error(ErrorCode::kBudgetExceeded,
                  "similarity of trials " + std::to_string(a) + " and " +
                      std::to_string(b) + " undecided: " + e.what());
    }
  };

  // Similarity is an equivalence, so comparing with the first member decides.
  for (std::size_t i = 0; i < trials.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (similar(cls.members.front().trial, i)) {
        cls.members.push_back({i, trials[i]});
        placed = true;
        break;
      }
    }
    if (!placed) {
      SimilarityClass cls;
      cls.members.push_back({i, trials[i]});
      classes.push_back(std::move(cls));
    }
  }

  for (auto& cls : classes) {
    auto least = std::min_element(
        cls.members.begin(), cls.members.end(),
        [&](const TrialGraph& a, const TrialGraph& b) {
          return std::tie(canonical_text[a.trial], a.trial) <
                 std::tie(canonical_text[b.trial], b.trial);
        });
    cls.representative = least->trial;
    for (const auto& m : cls.members) {
      if (m.trial == cls.representative) {
        Matching identity;
        for (const auto& [id, _] : m.graph.nodes()) identity.node_map[id] = id;
        for (const auto& [id, _] : m.graph.edges()) identity.edge_map[id] = id;
        cls.witness[m.trial] = std::move(identity);
      } else {
        auto w = similar(m.trial, cls.representative);
        if (!w) {
          throw Error(ErrorCode::kInvalidMatching,
                      "trial " + std::to_string(m.trial) +
                          " lost similarity to its class representative");
        }
        cls.witness[m.trial] = std::move(*w);
      }
    }
  }

  std::stable_sort(classes.begin(), classes.end(),
                   [&](const SimilarityClass& a, const SimilarityClass& b) {
                     const auto& ga = a.representative_member().graph;
                     const auto& gb = b.representative_member().graph;
                     return std::make_tuple(ga.node_count(), ga.edge_count(),
                                            std::cref(canonical_text[a.representative])) <
                            std::make_tuple(gb.node_count(), gb.edge_count(),
                                            std::cref(canonical_text[b.representative]));
                   });
  return classes;
}

RepresentativePair select_representative_pair(
    const std::vector<SimilarityClass>& classes,
    const GeneralizeOptions& options) {
  const std::size_t min_size = std::max<std::size_t>(2, options.min_class_size);
  // Classes arrive smallest first.
  for (const auto& cls : classes) {
    if (cls.size() < min_size) continue;

    std::optional<RepresentativePair> best;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
        const auto& a = cls.members[i];
        const auto& b = cls.members[j];
        auto m = check_similar(a.graph, b.graph, options.match);
        if (!m) {
          throw Error(ErrorCode::kInvalidMatching,
                      "class members " + std::to_string(a.trial) + " and " +
                          std::to_string(b.trial) + " are not similar");
        }
        if (!best || m->cost < best->matching.cost) {
          best = RepresentativePair{a, b, std::move(*m)};
        }
      }
    }
    return std::move(*best);
  }
  throw Error(ErrorCode::kInsufficientConsistentTrials,
              "no similarity class has " + std::to_string(min_size) +
                  " or more members; record more trials");
}

GeneralizedGraph generalize_pair(const PropertyGraph& g1, const PropertyGraph& g2,
                                 const Matching& m) {
  validate_matching(m, g1, g2, MatchMode::kExactBijective);

  GeneralizedGraph out;
  out.graph = g1;
  auto keep_agreeing = [&](const ElementId& x, const ElementId& image) {
    const Properties& theirs = g2.properties_of(image);
    Properties kept;
    for (const auto& [k, v] : g1.properties_of(x)) {
      auto it = theirs.find(k);
      if (it != theirs.end() && it->second == v) kept.emplace(k, v);
    }
    out.graph.replace_properties(x, std::move(kept));
  };
  for (const auto& [x, image] : m.node_map) keep_agreeing(x, image);
  for (const auto& [x, image] : m.edge_map) keep_agreeing(x, image);
  return out;
}

GeneralizedGraph generalize_trials(const std::vector<PropertyGraph>& trials,
                                   const GeneralizeOptions& options) {
  auto classes = partition_similarity_classes(trials, options.match);
  auto pair = select_representative_pair(classes, options);
  auto out = generalize_pair(pair.first.graph, pair.second.graph, pair.matching);
  out.trials = {pair.first.trial, pair.second.trial};
  return out;
}

}  // namespace provbench
