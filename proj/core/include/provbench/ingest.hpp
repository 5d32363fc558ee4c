// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "provbench/graph.hpp"

namespace provbench {

enum class Format { kDot, kProvJson, kGenericJson, kDatalog };

std::string_view to_string(Format format);
/// Accepts "dot", "prov-json", "generic-json", "datalog".
std::optional<Format> parse_format(std::string_view name);
/// `.gj.json` -> generic, `.json` -> PROV-JSON, `.dot`/`.gv` -> DOT,
/// `.dl` -> Datalog. Throws InvalidArgument otherwise.
Format format_from_path(const std::filesystem::path& path);
/// Extension written for a format, including the leading dot.
std::string_view file_extension(Format format);

struct EndpointFields {
  std::string source;
  std::string target;

  friend bool operator==(const EndpointFields&, const EndpointFields&) = default;
};

/// PROV relation key -> fields naming its source and target records.
std::map<std::string, EndpointFields> default_relation_endpoints();

struct FormatProfile {
  Format format = Format::kDatalog;
  /// DOT attribute used as the element label.
  std::string label_attr = "label";
  std::map<std::string, EndpointFields> relation_endpoints =
      default_relation_endpoints();
  /// PROV-JSON: fail on relations that reference undeclared records instead
  /// of synthesizing placeholder nodes.
  bool strict = false;
};

/// Restricted DOT digraphs: node and edge statements with attribute lists.
/// Nodes become n1, n2, ... and edges e1, e2, ... in order of first
/// appearance. graph/node/edge default attribute statements and top-level
/// `a = b` assignments are accepted and ignored.
PropertyGraph parse_dot(std::string_view text, const FormatProfile& profile = {});

/// W3C PROV-JSON. entity/activity/agent records become nodes with those
/// labels; every other top-level key except "prefix" is a relation.
PropertyGraph parse_prov_json(std::string_view text,
                              const FormatProfile& profile = {});

/// {"gid": ..., "nodes": [{"id","label","properties"}],
///  "edges": [{"id","from","to","label","properties"}]}
PropertyGraph parse_generic_json(std::string_view text);

/// PROV-JSON for graphs whose node labels are entity/activity/agent. Edge
/// endpoints use profile.relation_endpoints; other relations get "from"/"to".
/// Throws InvalidArgument for graphs outside that vocabulary.
std::string emit_prov_json(const PropertyGraph& graph,
                           const FormatProfile& profile = {});
std::string emit_generic_json(const PropertyGraph& graph);
/// Unstyled DOT that parse_dot reads back to an isomorphic graph. The label
/// goes into profile.label_attr; a property with that name is rejected.
std::string emit_plain_dot(const PropertyGraph& graph,
                           const FormatProfile& profile = {});
/// DOT double-quoted string literal.
std::string quote_dot_string(std::string_view s);

/// Dispatches on profile.format.
PropertyGraph ingest_document(std::string_view text, const FormatProfile& profile);

}  // namespace provbench
