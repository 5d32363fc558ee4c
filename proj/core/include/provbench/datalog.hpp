// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <string>
#include <string_view>

#include "provbench/graph.hpp"

namespace provbench {

/// A parsed `.dl` document: the graph plus any `#dummy <id>` markers, which
/// benchmark outputs use to flag retained anchor nodes.
struct DatalogDocument {
  PropertyGraph graph;
  std::set<ElementId> dummy_nodes;
};

/// Parses node/edge/property facts:
///
///   n<gid>(id,"label").   e<gid>(id,src,tgt,"label").   p<gid>(id,"k","v").
///
/// Facts may appear in any order; identical duplicates collapse. `%` starts a
/// comment that runs to end of line. Errors are ParseError with a position.
DatalogDocument parse_datalog_document(std::string_view text);
PropertyGraph parse_datalog(std::string_view text);

/// Nodes, then edges, then properties; each group sorted by element id (and
/// key for properties). One fact per line; empty graph -> empty string.
std::string emit_datalog(const PropertyGraph& graph, std::string_view gid);
std::string emit_datalog(const PropertyGraph& graph);

/// emit_datalog preceded by one `#dummy <id>` line per dummy node.
std::string emit_datalog_document(const DatalogDocument& doc,
                                  std::string_view gid);

/// Quoted-string encoding used inside facts: `"` and `\` are backslash
/// escaped, nothing else is.
std::string quote_datalog_string(std::string_view raw);

}  // namespace provbench
