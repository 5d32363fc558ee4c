// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace provbench {

/// Element ids are tokens of the form [a-z][a-z0-9_]*.
using ElementId = std::string;
using Properties = std::map<std::string, std::string>;

bool is_valid_element_id(std::string_view id);
bool is_valid_gid(std::string_view gid);

inline constexpr std::string_view kDefaultGid = "g";

struct Node {
  std::string label;
  Properties properties;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  ElementId source;
  ElementId target;
  std::string label;
  Properties properties;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled directed multigraph with string key/value properties on every
/// node and edge. Node and edge ids share one namespace. Mutators enforce the
/// invariants and throw provbench::Error on violation, so a PropertyGraph
/// value is always well formed.
class PropertyGraph {
 public:
  using NodeMap = std::map<ElementId, Node>;
  using EdgeMap = std::map<ElementId, Edge>;

  PropertyGraph() = default;
  explicit PropertyGraph(std::string gid);

  const std::string& gid() const noexcept { return gid_; }
  void set_gid(std::string gid);

  void add_node(const ElementId& id, std::string label);
  void add_edge(const ElementId& id, const ElementId& source,
                const ElementId& target, std::string label);
  /// Sets (element, key) := value. Re-setting the same value is a no-op;
  /// a different value for an existing key throws ConflictingProperty.
  void set_property(const ElementId& id, const std::string& key,
                    std::string value);
  /// Overwrites or erases without the conflict check.
  void replace_properties(const ElementId& id, Properties properties);

  /// Removes an edge. Removing a node also removes its incident edges.
  void remove_edge(const ElementId& id);
  void remove_node(const ElementId& id);

  const NodeMap& nodes() const noexcept { return nodes_; }
  const EdgeMap& edges() const noexcept { return edges_; }

  bool has_node(const ElementId& id) const { return nodes_.count(id) != 0; }
  bool has_edge(const ElementId& id) const { return edges_.count(id) != 0; }
  bool has_element(const ElementId& id) const {
    return has_node(id) || has_edge(id);
  }

  const Node& node(const ElementId& id) const;
  const Edge& edge(const ElementId& id) const;
  const std::string& label_of(const ElementId& id) const;
  const Properties& properties_of(const ElementId& id) const;
  std::optional<std::string> property(const ElementId& id,
                                      const std::string& key) const;

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t property_count() const noexcept;
  bool empty() const noexcept { return nodes_.empty() && edges_.empty(); }

  /// Equality over ids, labels, endpoints and properties; gid is ignored.
  bool same_content(const PropertyGraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

  friend bool operator==(const PropertyGraph&, const PropertyGraph&) = default;

 private:
  std::string gid_{kDefaultGid};
  NodeMap nodes_;
  EdgeMap edges_;
};

}  // namespace provbench
