// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/graph.hpp"

#include <utility>
#include <vector>

#include "provbench/error.hpp"

namespace provbench {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return is_lower(c) || (c >= 'A' && c <= 'Z'); }

}  // namespace

bool is_valid_element_id(std::string_view id) {
  if (id.empty() || !is_lower(id.front())) return false;
  for (char c : id) {
    if (!is_lower(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

bool is_valid_gid(std::string_view gid) {
  if (gid.empty()) return false;
  for (char c : gid) {
    if (!is_alpha(c) && !is_digit(c)) return false;
  }
  return true;
}

PropertyGraph::PropertyGraph(std::string gid) { set_gid(std::move(gid)); }

void PropertyGraph::set_gid(std::string gid) {
  if (!is_valid_gid(gid)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid graph id '" + gid + "'");
  }
  gid_ = std::move(gid);
}

void PropertyGraph::add_node(const ElementId& id, std::string label) {
  if (!is_valid_element_id(id)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid element id '" + id + "'");
  }
  if (has_edge(id)) {
    throw Error(ErrorCode::kIdClash, "'" + id + "' is already an edge");
  }
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    nodes_.emplace(id, Node{std::move(label), {}});
  } else if (it->second.label != label) {
    throw Error(ErrorCode::kIdClash,
                "node '" + id + "' redeclared with a different label");
  }
}

void PropertyGraph::add_edge(const ElementId& id, const ElementId& source,
                             const ElementId& target, std::string label) {
  if (!is_valid_element_id(id)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid element id '" + id + "'");
  }
  if (has_node(id)) {
    throw Error(ErrorCode::kIdClash, "'" + id + "' is already a node");
  }
  for (const auto* endpoint : {&source, &target}) {
    if (!has_node(*endpoint)) {
      throw Error(ErrorCode::kDanglingReference,
                  "edge '" + id + "' references unknown node '" + *endpoint +
                      "'");
    }
  }
  Edge edge{source, target, std::move(label), {}};
  auto [it, inserted] = edges_.try_emplace(id, edge);
  if (!inserted && (it->second.source != edge.source ||
                    it->second.target != edge.target ||
                    it->second.label != edge.label)) {
    throw Error(ErrorCode::kIdClash,
                "edge '" + id + "' redeclared with a different definition");
  }
}

void PropertyGraph::set_property(const ElementId& id, const std::string& key,
                                 std::string value) {
  Properties* props = nullptr;
  if (auto n = nodes_.find(id); n != nodes_.end()) {
    props = &n->second.properties;
  } else if (auto e = edges_.find(id); e != edges_.end()) {
    props = &e->second.properties;
  } else {
    throw Error(ErrorCode::kDanglingReference,
                "property '" + key + "' on unknown element '" + id + "'");
  }
  auto [it, inserted] = props->try_emplace(key, value);
  if (!inserted && it->second != value) {
    throw Error(ErrorCode::kConflictingProperty,
                "element '" + id + "' has two values for '" + key + "'");
  }
}

void PropertyGraph::replace_properties(const ElementId& id,
                                       Properties properties) {
  if (auto n = nodes_.find(id); n != nodes_.end()) {
    n->second.properties = std::move(properties);
  } else if (auto e = edges_.find(id); e != edges_.end()) {
    e->second.properties = std::move(properties);
  } else {
    throw Error(ErrorCode::kDanglingReference,
                "unknown element '" + id + "'");
  }
}

void PropertyGraph::remove_edge(const ElementId& id) { edges_.erase(id); }

void PropertyGraph::remove_node(const ElementId& id) {
  std::vector<ElementId> incident;
  for (const auto& [eid, e] : edges_) {
    if (e.source == id || e.target == id) incident.push_back(eid);
  }
  for (const auto& eid : incident) edges_.erase(eid);
  nodes_.erase(id);
}

const Node& PropertyGraph::node(const ElementId& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::kDanglingReference, "unknown node '" + id + "'");
  }
  return it->second;
}

const Edge& PropertyGraph::edge(const ElementId& id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw Error(ErrorCode::kDanglingReference, "unknown edge '" + id + "'");
  }
  return it->second;
}

const std::string& PropertyGraph::label_of(const ElementId& id) const {
  if (auto n = nodes_.find(id); n != nodes_.end()) return n->second.label;
  return edge(id).label;
}

const Properties& PropertyGraph::properties_of(const ElementId& id) const {
  if (auto n = nodes_.find(id); n != nodes_.end()) return n->second.properties;
  return edge(id).properties;
}

std::optional<std::string> PropertyGraph::property(
    const ElementId& id, const std::string& key) const {
  const auto& props = properties_of(id);
  if (auto it = props.find(key); it != props.end()) return it->second;
  return std::nullopt;
}

std::size_t PropertyGraph::property_count() const noexcept {
  std::size_t count = 0;
  for (const auto& [_, n] : nodes_) count += n.properties.size();
  for (const auto& [_, e] : edges_) count += e.properties.size();
  return count;
}

}  // namespace provbench
