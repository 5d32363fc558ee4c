// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "provbench/datalog.hpp"
#include "provbench/error.hpp"
#include "provbench/generalize.hpp"
#include "random_graphs.hpp"

namespace provbench {
namespace {

PropertyGraph trial(const std::string& time, const std::string& extra = "") {
  return parse_datalog(
      "ng(p,\"Process\"). pg(p,\"name\",\"bench\"). pg(p,\"time\",\"" + time +
      "\").\n"
      "ng(f,\"Artifact\"). pg(f,\"path\",\"/tmp/x\").\n"
      "eg(u,p,f,\"Used\"). pg(u,\"time\",\"" + time + "\").\n" + extra);
}

TEST(Partition, GroupsBySimilarity) {
  std::vector<PropertyGraph> trials = {
      trial("1", "ng(s,\"Artifact\")."), trial("2"), trial("3"),
      trial("4", "ng(s,\"Artifact\").")};
  auto classes = partition_similarity_classes(trials);
  ASSERT_EQ(classes.size(), 2u);
  // Smaller graphs first.
  ASSERT_EQ(classes[0].size(), 2u);
  EXPECT_EQ(classes[0].members[0].trial, 1u);
  EXPECT_EQ(classes[0].members[1].trial, 2u);
  EXPECT_EQ(classes[1].members[0].trial, 0u);
  EXPECT_EQ(classes[1].members[1].trial, 3u);
  for (const auto& c : classes) {
    EXPECT_EQ(c.witness.size(), c.size());
    EXPECT_EQ(c.witness.at(c.representative).cost, 0u);
  }
}

TEST(Partition, EmptyInput) {
  EXPECT_THROW(partition_similarity_classes({}), Error);
}

TEST(SelectPair, SkipsSingletonsAndPrefersFewestDifferences) {
  PropertyGraph odd = trial("9", "ng(s,\"Artifact\").");
  PropertyGraph a = trial("1"), b = trial("2"), c = trial("1");
  auto classes = partition_similarity_classes({odd, a, b, c});
  auto pair = select_representative_pair(classes);
  EXPECT_EQ(pair.first.trial, 1u);
  EXPECT_EQ(pair.second.trial, 3u);
  EXPECT_EQ(pair.matching.cost, 0u);
}

TEST(SelectPair, InsufficientConsistentTrials) {
  auto classes = partition_similarity_classes(
      {trial("1"), trial("2", "ng(s,\"Artifact\").")});
  try {
    select_representative_pair(classes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientConsistentTrials);
  }
}

TEST(GeneralizePair, KeepsOnlyAgreeingProperties) {
  PropertyGraph a = trial("1"), b = trial("2");
  auto m = check_similar(a, b);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->cost, 2u);
  GeneralizedGraph g = generalize_pair(a, b, *m);
  EXPECT_EQ(g.graph.node_count(), 2u);
  EXPECT_EQ(g.graph.edge_count(), 1u);
  EXPECT_EQ(g.graph.property_count(), 2u);
  EXPECT_FALSE(g.graph.property("p", "time"));
  EXPECT_EQ(g.graph.property("p", "name"), "bench");
}

TEST(GeneralizePair, RejectsInvalidMatching) {
  PropertyGraph a = trial("1"), b = trial("2");
  Matching bogus{{{"p", "f"}, {"f", "p"}}, {{"u", "u"}}, 0};
  EXPECT_THROW(generalize_pair(a, b, bogus), Error);
}

TEST(GeneralizeTrials, IgnoresFailedRuns) {
  GeneralizedGraph g = generalize_trials(
      {PropertyGraph{}, trial("1"), trial("2"), trial("5", "ng(s,\"A\").")});
  EXPECT_EQ(g.trials, (std::pair<std::size_t, std::size_t>{1, 2}));
  EXPECT_EQ(g.graph.node_count(), 2u);
  EXPECT_EQ(g.graph.property_count(), 2u);
}

TEST(GeneralizeTrials, MinClassSizeOption) {
  GeneralizeOptions options;
  options.min_class_size = 3;
  EXPECT_THROW(generalize_trials({trial("1"), trial("2")}, options), Error);
  EXPECT_NO_THROW(generalize_trials({trial("1"), trial("2"), trial("3")}, options));
}

TEST(GeneralizeProperty, DropsExactlyTheTransientProperties) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const std::size_t p = rng() % 21;
    const std::size_t k = p == 0 ? 0 : rng() % (p + 1);
    PropertyGraph a = testing::graph_with_properties(rng, p);
    PropertyGraph b = a;
    std::size_t changed = 0;
    for (const auto& [id, n] : a.nodes()) {
      for (const auto& [key, v] : n.properties) {
        if (changed < k) {
          Properties props = b.properties_of(id);
          props[key] = "transient" + std::to_string(changed++);
          b.replace_properties(id, props);
        }
      }
    }
    for (const auto& [id, e] : a.edges()) {
      for (const auto& [key, v] : e.properties) {
        if (changed < k) {
          Properties props = b.properties_of(id);
          props[key] = "transient" + std::to_string(changed++);
          b.replace_properties(id, props);
        }
      }
    }
    ASSERT_EQ(changed, k);
    GeneralizedGraph g = generalize_trials({a, testing::shuffle_ids(b, rng)});
    EXPECT_EQ(g.graph.property_count(), p - k);
    auto shape = check_similar(g.graph, a);
    ASSERT_TRUE(shape);
    EXPECT_EQ(shape->cost, k);
  }
}

}  // namespace
}  // namespace provbench
