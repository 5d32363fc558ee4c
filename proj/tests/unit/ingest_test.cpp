// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "provbench/datalog.hpp"
#include "provbench/error.hpp"
#include "provbench/ingest.hpp"
#include "provbench/matcher.hpp"
#include "random_graphs.hpp"

namespace provbench {
namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(PROVBENCH_FIXTURE_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(Formats, NamesAndPaths) {
  for (auto f : {Format::kDot, Format::kProvJson, Format::kGenericJson,
                 Format::kDatalog}) {
    EXPECT_EQ(parse_format(to_string(f)), f);
    EXPECT_EQ(format_from_path("x" + std::string(file_extension(f))), f);
  }
  EXPECT_FALSE(parse_format("xml"));
  EXPECT_EQ(format_from_path("a/b.gv"), Format::kDot);
  EXPECT_EQ(code_of([] { format_from_path("a.txt"); }), ErrorCode::kInvalidArgument);
}

// ---- DOT

TEST(ParseDot, SpadeFixture) {
  PropertyGraph g = parse_dot(fixture("spade_open.dot"));
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.property_count(), 37u);
  EXPECT_EQ(g.label_of("n1"), "Process");
  EXPECT_EQ(g.property("n1", "name"), "bench");
  EXPECT_EQ(g.label_of("n4"), "Artifact");
  EXPECT_EQ(g.property("n4", "path"), "/tmp/open.txt");
  EXPECT_EQ(g.edge("e3").source, "n1");
  EXPECT_EQ(g.edge("e3").target, "n4");
  EXPECT_EQ(g.property("e3", "operation"), "open");
  EXPECT_FALSE(g.property("n1", "label"));
}

TEST(ParseDot, ChainsImplicitNodesAndLabelAttribute) {
  FormatProfile profile;
  profile.label_attr = "type";
  PropertyGraph g = parse_dot(
      "strict digraph { a -> b -> c [type=R, w=1]; b [type=B]; }",
      profile);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.label_of("n1"), "");
  EXPECT_EQ(g.label_of("n2"), "B");
  EXPECT_EQ(g.label_of("e2"), "R");
  EXPECT_EQ(g.property("e1", "w"), "1");
}

TEST(ParseDot, EscapesAndComments) {
  PropertyGraph g = parse_dot(
      "# preprocessor-style line\n"
      "digraph G { // one\n /* two */ \"x\\\"y\" [label=\"a\\\\b\" note=\"l1\\\nl2\"]; }");
  ASSERT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.label_of("n1"), "a\\b");
  EXPECT_EQ(g.property("n1", "note"), "l1l2");
}

TEST(ParseDot, RejectsUnsupported) {
  EXPECT_EQ(code_of([] { parse_dot("graph { a -- b; }"); }),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(code_of([] { parse_dot("digraph { subgraph s { a; } }"); }),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(code_of([] { parse_dot("digraph { { a b } -> c; }"); }),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(code_of([] { parse_dot("digraph { a:p -> b; }"); }),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(code_of([] { parse_dot("digraph { a [label=<b>x</b>]; }"); }),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(code_of([] { parse_dot("digraph { a -> ; }"); }),
            ErrorCode::kSyntaxError);
  // Later assignments win, as in Graphviz.
  EXPECT_EQ(parse_dot("digraph { a [x=\"1\", x=\"2\"]; a [x=3]; }").property("n1", "x"),
            "3");
}

TEST(EmitPlainDot, RoundTripsUpToIds) {
  std::mt19937_64 rng(4);
  testing::RandomGraphShape shape;
  shape.max_nodes = 8;
  shape.max_edges = 10;
  for (int i = 0; i < 100; ++i) {
    PropertyGraph g = testing::random_graph(rng, shape);
    PropertyGraph back = parse_dot(emit_plain_dot(g));
    auto m = check_similar(g, back);
    ASSERT_TRUE(m) << emit_plain_dot(g);
    EXPECT_EQ(m->cost, 0u);
  }
}

TEST(EmitPlainDot, RejectsPropertyNamedLikeLabel) {
  PropertyGraph g;
  g.add_node("a", "A");
  g.set_property("a", "label", "x");
  EXPECT_EQ(code_of([&] { emit_plain_dot(g); }), ErrorCode::kInvalidArgument);
}

// ---- PROV-JSON

TEST(ParseProvJson, CamflowFixture) {
  PropertyGraph g = parse_prov_json(fixture("camflow_open.json"));
  EXPECT_EQ(g.node_count(), 6u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.property_count(), 26u);
  // Sections in entity, activity, agent order.
  EXPECT_EQ(g.label_of("n1"), "entity");
  EXPECT_EQ(g.label_of("n4"), "activity");
  EXPECT_EQ(g.label_of("n5"), "agent");
  EXPECT_EQ(g.label_of("n6"), "");
  EXPECT_EQ(g.property("n6", "external"), "true");
  EXPECT_EQ(g.property("n4", "cf:pid"), "4242");

  std::size_t used = 0;
  for (const auto& [id, e] : g.edges()) {
    if (e.label == "used") {
      ++used;
      EXPECT_EQ(e.source, "n4");
    }
    if (e.label == "wasDerivedFrom") {
      EXPECT_EQ(g.property(e.source, "cf:type"), "inode_file");
      EXPECT_EQ(g.property(e.target, "cf:type"), "path");
    }
  }
  EXPECT_EQ(used, 2u);
}

TEST(ParseProvJson, StrictRejectsUndeclared) {
  FormatProfile strict;
  strict.strict = true;
  EXPECT_EQ(code_of([&] { parse_prov_json(fixture("camflow_open.json"), strict); }),
            ErrorCode::kUnresolvedEndpoint);
}

TEST(ParseProvJson, UnknownRelationsUseIdentifierFields) {
  PropertyGraph g = parse_prov_json(R"({
    "entity": {"a": {}, "b": {}},
    "custom": {"r1": {"x:left": "a", "x:right": "b", "note": "zz"}}})");
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge("e1").label, "custom");
  EXPECT_EQ(g.edge("e1").source, "n1");
  EXPECT_EQ(g.edge("e1").target, "n2");
  EXPECT_EQ(g.property("e1", "note"), "zz");

  EXPECT_EQ(code_of([] {
              parse_prov_json(R"({"entity": {"a": {}},
                                  "custom": {"r1": {"x": "a", "y": "nope"}}})");
            }),
            ErrorCode::kUnresolvedEndpoint);
}

TEST(ParseProvJson, Errors) {
  EXPECT_EQ(code_of([] { parse_prov_json(R"({"bundle": {}})"); }),
            ErrorCode::kUnsupportedConstruct);
  EXPECT_EQ(code_of([] { parse_prov_json("[]"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] {
              parse_prov_json(R"({"entity": {"a": {}}, "agent": {"a": {}}})");
            }),
            ErrorCode::kIdClash);
  try {
    parse_prov_json("{\n  \"entity\": {,}\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(EmitProvJson, RoundTrip) {
  PropertyGraph g = parse_prov_json(fixture("camflow_open.json"));
  // The external placeholder has no PROV type; drop it for the round trip.
  const PropertyGraph parsed = g;
  for (const auto& [id, n] : parsed.nodes()) {
    if (n.label.empty()) g.remove_node(id);
  }
  PropertyGraph back = parse_prov_json(emit_prov_json(g));
  auto m = check_similar(g, back);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->cost, 0u);
}

TEST(EmitProvJson, RejectsForeignVocabulary) {
  PropertyGraph g;
  g.add_node("a", "Process");
  EXPECT_EQ(code_of([&] { emit_prov_json(g); }), ErrorCode::kInvalidArgument);
}

// ---- generic JSON

TEST(ParseGenericJson, Basic) {
  PropertyGraph g = parse_generic_json(R"({"gid": "G7",
    "nodes": [{"id": "a", "label": "A", "properties": {"k": "v", "n": 3}},
              {"id": "b", "label": "B"}],
    "edges": [{"id": "e", "from": "a", "to": "b", "label": "R",
               "properties": {"flag": true}}]})");
  EXPECT_EQ(g.gid(), "G7");
  EXPECT_EQ(g.property("a", "n"), "3");
  EXPECT_EQ(g.property("e", "flag"), "true");
  EXPECT_EQ(parse_generic_json(emit_generic_json(g)), g);
}

TEST(ParseGenericJson, Errors) {
  EXPECT_EQ(code_of([] { parse_generic_json(R"({"nodes": [{"label": "A"}]})"); }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] {
              parse_generic_json(
                  R"({"nodes": [{"id": "a"}], "edges": [{"id": "e", "from": "a", "to": "z"}]})");
            }),
            ErrorCode::kDanglingReference);
  EXPECT_EQ(code_of([] { parse_generic_json(R"({"nodes": [{"id": "A1"}]})"); }),
            ErrorCode::kSyntaxError);
}

TEST(IngestDocument, Dispatches) {
  FormatProfile p;
  p.format = Format::kDatalog;
  EXPECT_EQ(ingest_document("ng(a,\"A\").", p).node_count(), 1u);
  p.format = Format::kDot;
  EXPECT_EQ(ingest_document("digraph { a; }", p).node_count(), 1u);
  p.format = Format::kGenericJson;
  EXPECT_EQ(ingest_document(R"({"nodes":[{"id":"a"}]})", p).node_count(), 1u);
  p.format = Format::kProvJson;
  EXPECT_EQ(ingest_document(R"({"entity":{"a":{}}})", p).node_count(), 1u);
}

}  // namespace
}  // namespace provbench
