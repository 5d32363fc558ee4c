// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "provbench/canonical.hpp"
#include "provbench/datalog.hpp"
#include "random_graphs.hpp"

namespace provbench {
namespace {

PropertyGraph ring(std::size_t n, bool with_chord) {
  PropertyGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node("a" + std::to_string(i), "X");
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge("r" + std::to_string(i), "a" + std::to_string(i),
               "a" + std::to_string((i + 1) % n), "next");
  }
  if (with_chord) g.add_edge("chord", "a0", "a2", "next");
  return g;
}

TEST(Canonical, FrozenSampleOutput) {
  PropertyGraph g = parse_datalog(
      "ng(b,\"Process\").ng(a,\"File\").eg(u,a,b,\"Used\")."
      "pg(a,\"Userid\",\"1\").pg(a,\"Name\",\"text\").");
  EXPECT_EQ(canonical_datalog(g),
            "ng(n1,\"File\").\n"
            "ng(n2,\"Process\").\n"
            "eg(e1,n1,n2,\"Used\").\n"
            "pg(n1,\"Name\",\"text\").\n"
            "pg(n1,\"Userid\",\"1\").\n");
}

TEST(Canonical, RenamingCoversAllElements) {
  PropertyGraph g = ring(4, true);
  CanonicalForm f = canonical_form(g);
  EXPECT_EQ(f.renaming.size(), g.node_count() + g.edge_count());
  EXPECT_TRUE(f.graph.has_node("n4"));
  EXPECT_TRUE(f.graph.has_edge("e5"));
  for (const auto& [from, to] : f.renaming) {
    EXPECT_EQ(g.label_of(from), f.graph.label_of(to));
  }
}

TEST(Canonical, SymmetricGraphsAreStable) {
  std::mt19937_64 rng(5);
  for (bool chord : {false, true}) {
    const PropertyGraph g = ring(6, chord);
    const std::string expected = canonical_datalog(g);
    for (int i = 0; i < 20; ++i) {
      EXPECT_EQ(canonical_datalog(testing::shuffle_ids(g, rng)), expected);
    }
  }
  EXPECT_NE(canonical_datalog(ring(6, false)), canonical_datalog(ring(6, true)));
}

TEST(Canonical, NodeTagsSeparateOtherwiseEqualNodes) {
  PropertyGraph g;
  g.add_node("a", "X");
  g.add_node("b", "X");
  g.add_edge("e", "a", "b", "R");
  g.add_edge("f", "b", "a", "R");
  CanonicalizeOptions tag_a, tag_b;
  tag_a.node_tags["a"] = "dummy";
  tag_b.node_tags["b"] = "dummy";
  EXPECT_EQ(emit_datalog(canonical_form(g, tag_a).graph),
            emit_datalog(canonical_form(g, tag_b).graph));
  EXPECT_EQ(canonical_form(g, tag_a).renaming.at("a"),
            canonical_form(g, tag_b).renaming.at("b"));
}

TEST(CanonicalProperty, InvariantUnderIdShuffles) {
  std::mt19937_64 rng(99);
  testing::RandomGraphShape shape;
  shape.max_nodes = 9;
  shape.max_edges = 14;
  shape.labels = 2;
  shape.property_probability = 0.2;
  for (int i = 0; i < 200; ++i) {
    const PropertyGraph g = testing::random_graph(rng, shape);
    const std::string expected = canonical_datalog(g);
    EXPECT_EQ(canonical_datalog(g), expected);
    EXPECT_EQ(canonical_datalog(testing::shuffle_ids(g, rng)), expected)
        << emit_datalog(g);
    EXPECT_EQ(canonical_datalog(parse_datalog(expected)), expected);
  }
}

TEST(CanonicalProperty, DistinguishesPropertyChanges) {
  std::mt19937_64 rng(3);
  testing::RandomGraphShape shape;
  for (int i = 0; i < 100; ++i) {
    const PropertyGraph g = testing::random_graph(rng, shape);
    PropertyGraph h = g;
    h.replace_properties(g.nodes().begin()->first, {{"fresh", "value"}});
    if (g.nodes().begin()->second.properties ==
        Properties{{"fresh", "value"}}) {
      continue;
    }
    EXPECT_NE(canonical_datalog(g), canonical_datalog(h));
  }
}

}  // namespace
}  // namespace provbench
