// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/ingest.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "provbench/datalog.hpp"
#include "provbench/error.hpp"

namespace provbench {

namespace {

using nlohmann::json;

constexpr const char* kNodeSections[] = {"entity", "activity", "agent"};

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(ErrorCode::kSyntaxError, line, column, e.what());
  }
}

[[noreturn]] void syntax(const std::string& message) {
  throw Error(ErrorCode::kSyntaxError, message);
}

/// Property values are strings: strings verbatim, scalars in their JSON
/// spelling, arrays and objects as compact JSON text.
std::string stringify(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string element_id(const json& value, const char* what) {
  if (!value.is_string()) syntax(std::string(what) + " must be a string");
  auto id = value.get<std::string>();
  if (!is_valid_element_id(id)) {
    syntax(std::string("invalid ") + what + " '" + id + "'");
  }
  return id;
}

}  // namespace

std::string_view to_string(Format format) {
  switch (format) {
    case Format::kDot: return "dot";
    case Format::kProvJson: return "prov-json";
    case Format::kGenericJson: return "generic-json";
    case Format::kDatalog: return "datalog";
  }
  return "datalog";
}

std::optional<Format> parse_format(std::string_view name) {
  for (auto f : {Format::kDot, Format::kProvJson, Format::kGenericJson,
                 Format::kDatalog}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Format format_from_path(const std::filesystem::path& path) {
  const std::string name = path.filename().string();
  auto ends_with = [&](std::string_view suffix) {
    return name.size() >= suffix.size() &&
           name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".gj.json")) return Format::kGenericJson;
  if (ends_with(".json")) return Format::kProvJson;
  if (ends_with(".dot") || ends_with(".gv")) return Format::kDot;
  if (ends_with(".dl")) return Format::kDatalog;
  throw Error(ErrorCode::kInvalidArgument,
              "cannot infer graph format from '" + name + "'");
}

std::string_view file_extension(Format format) {
  switch (format) {
    case Format::kDot: return ".dot";
    case Format::kProvJson: return ".json";
    case Format::kGenericJson: return ".gj.json";
    case Format::kDatalog: return ".dl";
  }
  return ".dl";
}

std::map<std::string, EndpointFields> default_relation_endpoints() {
  return {
      {"used", {"prov:activity", "prov:entity"}},
      {"wasGeneratedBy", {"prov:entity", "prov:activity"}},
      {"wasInformedBy", {"prov:informed", "prov:informant"}},
      {"wasDerivedFrom", {"prov:generatedEntity", "prov:usedEntity"}},
      {"wasAssociatedWith", {"prov:activity", "prov:agent"}},
      {"actedOnBehalfOf", {"prov:delegate", "prov:responsible"}},
      {"wasAttributedTo", {"prov:entity", "prov:agent"}},
      {"wasInvalidatedBy", {"prov:entity", "prov:activity"}},
      {"wasStartedBy", {"prov:activity", "prov:trigger"}},
      {"wasEndedBy", {"prov:activity", "prov:trigger"}},
      {"wasInfluencedBy", {"prov:influencee", "prov:influencer"}},
      {"specializationOf", {"prov:specificEntity", "prov:generalEntity"}},
      {"alternateOf", {"prov:alternate1", "prov:alternate2"}},
      {"hadMember", {"prov:collection", "prov:entity"}},
      {"relation", {"prov:sender", "prov:receiver"}},
  };
}

PropertyGraph parse_prov_json(std::string_view text,
                              const FormatProfile& profile) {
  const json doc = parse_json(text);
  if (!doc.is_object()) syntax("PROV-JSON document must be an object");

  PropertyGraph g;
  std::map<std::string, ElementId> ids;  // PROV id -> node id
  auto fresh_node = [&](const std::string& prov_id, const std::string& label) {
    ElementId id = "n" + std::to_string(ids.size() + 1);
    ids.emplace(prov_id, id);
    g.add_node(id, label);
    return id;
  };

  for (const char* section : kNodeSections) {
    auto it = doc.find(section);
    if (it == doc.end()) continue;
    if (!it->is_object()) syntax(std::string("'") + section + "' must be an object");
    for (const auto& [prov_id, record] : it->items()) {
      if (ids.count(prov_id)) {
        throw Error(ErrorCode::kIdClash,
                    "record '" + prov_id + "' declared more than once");
      }
      if (!record.is_object()) {
        syntax("record '" + prov_id + "' must be an object");
      }
      ElementId id = fresh_node(prov_id, section);
      for (const auto& [key, value] : record.items()) {
        g.set_property(id, key, stringify(value));
      }
    }
  }

  std::size_t edge_count = 0;
  for (const auto& [relation, records] : doc.items()) {
    if (relation == "prefix" ||
        std::find(std::begin(kNodeSections), std::end(kNodeSections),
                  relation) != std::end(kNodeSections)) {
      continue;
    }
    if (relation == "bundle") {
      throw Error(ErrorCode::kUnsupportedConstruct,
                  "PROV-JSON bundles are not supported");
    }
    if (!records.is_object()) {
      syntax("relation '" + relation + "' must be an object");
    }
    for (const auto& [record_id, record] : records.items()) {
      if (!record.is_object()) {
        syntax("relation record '" + record_id + "' must be an object");
      }
      EndpointFields fields;
      if (auto known = profile.relation_endpoints.find(relation);
          known != profile.relation_endpoints.end()) {
        fields = known->second;
      } else {
        // First two fields (in name order) that name a declared record.
        std::vector<std::string> candidates;
        for (const auto& [key, value] : record.items()) {
          if (value.is_string() && ids.count(value.get<std::string>())) {
            candidates.push_back(key);
          }
        }
        if (candidates.size() < 2) {
          throw Error(ErrorCode::kUnresolvedEndpoint,
                      "cannot identify endpoints of '" + relation + "' record '" +
                          record_id + "'");
        }
        fields = {candidates[0], candidates[1]};
      }

      auto endpoint = [&](const std::string& field) {
        auto v = record.find(field);
        if (v == record.end() || !v->is_string()) {
          syntax("'" + relation + "' record '" + record_id +
                 "' lacks string field '" + field + "'");
        }
        const auto prov_id = v->get<std::string>();
        if (auto known = ids.find(prov_id); known != ids.end()) {
          return known->second;
        }
        if (profile.strict) {
          throw Error(ErrorCode::kUnresolvedEndpoint,
                      "'" + relation + "' record '" + record_id +
                          "' references undeclared '" + prov_id + "'");
        }
        ElementId id = fresh_node(prov_id, "");
        g.set_property(id, "external", "true");
        return id;
      };
      ElementId source = endpoint(fields.source);
      ElementId target = endpoint(fields.target);

      ElementId id = "e" + std::to_string(++edge_count);
      g.add_edge(id, source, target, relation);
      for (const auto& [key, value] : record.items()) {
        if (key == fields.source || key == fields.target) continue;
        g.set_property(id, key, stringify(value));
      }
    }
  }
  return g;
}

PropertyGraph parse_generic_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) syntax("generic graph document must be an object");

  PropertyGraph g;
  if (auto gid = doc.find("gid"); gid != doc.end()) {
    if (!gid->is_string() || !is_valid_gid(gid->get<std::string>())) {
      syntax("'gid' must be an alphanumeric string");
    }
    g.set_gid(gid->get<std::string>());
  }

  auto array = [&](const char* key) -> const json& {
    static const json kEmpty = json::array();
    auto it = doc.find(key);
    if (it == doc.end()) return kEmpty;
    if (!it->is_array()) syntax(std::string("'") + key + "' must be an array");
    return *it;
  };
  auto label = [](const json& record) -> std::string {
    auto it = record.find("label");
    if (it == record.end()) return "";
    if (!it->is_string()) syntax("'label' must be a string");
    return it->get<std::string>();
  };
  auto properties = [&](const ElementId& id, const json& record) {
    auto it = record.find("properties");
    if (it == record.end()) return;
    if (!it->is_object()) syntax("'properties' must be an object");
    for (const auto& [key, value] : it->items()) {
      g.set_property(id, key, stringify(value));
    }
  };

  for (const auto& record : array("nodes")) {
    if (!record.is_object()) syntax("node entries must be objects");
    auto id_it = record.find("id");
    if (id_it == record.end()) syntax("node entry without 'id'");
    ElementId id = element_id(*id_it, "node id");
    g.add_node(id, label(record));
    properties(id, record);
  }
  for (const auto& record : array("edges")) {
    if (!record.is_object()) syntax("edge entries must be objects");
    for (const char* key : {"id", "from", "to"}) {
      if (!record.contains(key)) syntax(std::string("edge entry without '") + key + "'");
    }
    ElementId id = element_id(record["id"], "edge id");
    g.add_edge(id, element_id(record["from"], "edge source"),
               element_id(record["to"], "edge target"), label(record));
    properties(id, record);
  }
  return g;
}

std::string emit_generic_json(const PropertyGraph& graph) {
  json doc;
  doc["gid"] = graph.gid();
  doc["nodes"] = json::array();
  doc["edges"] = json::array();
  for (const auto& [id, node] : graph.nodes()) {
    doc["nodes"].push_back(
        {{"id", id}, {"label", node.label}, {"properties", node.properties}});
  }
  for (const auto& [id, edge] : graph.edges()) {
    doc["edges"].push_back({{"id", id},
                            {"from", edge.source},
                            {"to", edge.target},
                            {"label", edge.label},
                            {"properties", edge.properties}});
  }
  return doc.dump(2) + "\n";
}

std::string emit_prov_json(const PropertyGraph& graph,
                           const FormatProfile& profile) {
  json doc = json::object();
  for (const auto& [id, node] : graph.nodes()) {
    if (std::find(std::begin(kNodeSections), std::end(kNodeSections),
                  node.label) == std::end(kNodeSections)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "node '" + id + "' label '" + node.label +
                      "' is not a PROV node type");
    }
    doc[node.label][id] = node.properties;
  }
  for (const auto& [id, edge] : graph.edges()) {
    EndpointFields fields{"from", "to"};
    if (auto it = profile.relation_endpoints.find(edge.label);
        it != profile.relation_endpoints.end()) {
      fields = it->second;
    }
    if (edge.label == "prefix" || edge.label == "bundle" ||
        std::find(std::begin(kNodeSections), std::end(kNodeSections),
                  edge.label) != std::end(kNodeSections)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge label '" + edge.label + "' is reserved in PROV-JSON");
    }
    json record = edge.properties;
    if (record.contains(fields.source) || record.contains(fields.target)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge '" + id + "' has a property named like an endpoint field");
    }
    record[fields.source] = edge.source;
    record[fields.target] = edge.target;
    doc[edge.label][id] = std::move(record);
  }
  return doc.dump(2) + "\n";
}

PropertyGraph ingest_document(std::string_view text,
                              const FormatProfile& profile) {
  switch (profile.format) {
    case Format::kDot: return parse_dot(text, profile);
    case Format::kProvJson: return parse_prov_json(text, profile);
    case Format::kGenericJson: return parse_generic_json(text);
    case Format::kDatalog: return parse_datalog(text);
  }
  return parse_datalog(text);
}

}  // namespace provbench
