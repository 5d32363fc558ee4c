// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/canonical.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "provbench/datalog.hpp"

namespace provbench {

namespace {

std::string serialize_properties(const Properties& props) {
  std::string out;
  for (const auto& [k, v] : props) {
    out += quote_datalog_string(k);
    out += '=';
    out += quote_datalog_string(v);
    out += ';';
  }
  return out;
}

template <typename Key>
std::vector<int> dense_ranks(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    ranks[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
        sorted.begin());
  }
  return ranks;
}

int count_cells(const std::vector<int>& colors) {
  int max = -1;
  for (int c : colors) max = std::max(max, c);
  return max + 1;
}

class Canonicalizer {
 public:
  Canonicalizer(const PropertyGraph& graph, const CanonicalizeOptions& options)
      : graph_(graph), max_leaves_(std::max<std::size_t>(1, options.max_leaves)) {
    std::map<ElementId, int> index;
    for (const auto& [id, _] : graph.nodes()) {
      index.emplace(id, static_cast<int>(node_ids_.size()));
      node_ids_.push_back(id);
    }

    std::vector<std::pair<std::string, std::string>> edge_keys;
    for (const auto& [id, e] : graph.edges()) {
      edges_.push_back({index.at(e.source), index.at(e.target), 0, id});
      edge_keys.emplace_back(e.label, serialize_properties(e.properties));
    }
    auto edge_ranks = dense_ranks(edge_keys);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      edges_[i].signature = edge_ranks[i];
    }

    adjacency_.resize(node_ids_.size());
    std::vector<std::size_t> out_degree(node_ids_.size());
    std::vector<std::size_t> in_degree(node_ids_.size());
    for (const auto& e : edges_) {
      ++out_degree[e.source];
      ++in_degree[e.target];
      if (e.source == e.target) {
        adjacency_[e.source].push_back({2, e.signature, e.source});
      } else {
        adjacency_[e.source].push_back({0, e.signature, e.target});
        adjacency_[e.target].push_back({1, e.signature, e.source});
      }
    }

    using InitialKey = std::tuple<std::string, std::size_t, std::size_t,
                                  std::string, std::string>;
    std::vector<InitialKey> keys;
    for (std::size_t i = 0; i < node_ids_.size(); ++i) {
      const auto& node = graph.node(node_ids_[i]);
      std::string tag;
      if (auto it = options.node_tags.find(node_ids_[i]);
          it != options.node_tags.end()) {
        tag = it->second;
      }
      keys.emplace_back(node.label, out_degree[i], in_degree[i],
                        serialize_properties(node.properties), tag);
    }
    initial_colors_ = refine(dense_ranks(keys));
  }

  CanonicalForm run() {
    search(initial_colors_);
    return build(best_colors_.value_or(initial_colors_));
  }

 private:
  struct IndexedEdge {
    int source;
    int target;
    int signature;
    ElementId id;
  };
  struct Incidence {
    int direction;  // 0 out, 1 in, 2 self loop
    int signature;
    int neighbour;
  };

  std::vector<int> refine(std::vector<int> colors) const {
    int cells = count_cells(colors);
    while (true) {
      using Signature =
          std::pair<int, std::vector<std::tuple<int, int, int>>>;
      std::vector<Signature> sigs(colors.size());
      for (std::size_t v = 0; v < colors.size(); ++v) {
        sigs[v].first = colors[v];
        for (const auto& inc : adjacency_[v]) {
          sigs[v].second.emplace_back(inc.direction, inc.signature,
                                      colors[inc.neighbour]);
        }
        std::sort(sigs[v].second.begin(), sigs[v].second.end());
      }
      auto next = dense_ranks(sigs);
      int next_cells = count_cells(next);
      if (next_cells == cells) return next;
      colors = std::move(next);
      cells = next_cells;
    }
  }

  void search(const std::vector<int>& colors) {
    const int cells = count_cells(colors);
    if (cells == static_cast<int>(colors.size())) {
      ++leaves_;
      std::string text = emit_datalog(build(colors).graph, "c");
      if (!best_text_ || text < *best_text_) {
        best_text_ = std::move(text);
        best_colors_ = colors;
      }
      return;
    }

    // First non-singleton cell, members in original-id order.
    std::vector<int> size(cells, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;

    for (std::size_t v = 0; v < colors.size(); ++v) {
      if (colors[v] != target) continue;
      if (leaves_ >= max_leaves_ && best_text_) return;
      std::vector<int> split(colors.size());
      for (std::size_t u = 0; u < colors.size(); ++u) {
        split[u] = colors[u] * 2 + (colors[u] == target && u != v ? 1 : 0);
      }
      search(refine(dense_ranks(split)));
    }
  }

  CanonicalForm build(const std::vector<int>& colors) const {
    CanonicalForm form;
    form.graph.set_gid(graph_.gid());
    std::vector<ElementId> new_ids(node_ids_.size());
    for (std::size_t v = 0; v < node_ids_.size(); ++v) {
      new_ids[v] = "n" + std::to_string(colors[v] + 1);
      form.renaming[node_ids_[v]] = new_ids[v];
    }
    for (std::size_t v = 0; v < node_ids_.size(); ++v) {
      const auto& node = graph_.node(node_ids_[v]);
      form.graph.add_node(new_ids[v], node.label);
      form.graph.replace_properties(new_ids[v], node.properties);
    }

    std::vector<std::size_t> order(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = edges_[a];
      const auto& y = edges_[b];
      return std::tie(colors[x.source], colors[x.target], x.signature, x.id) <
             std::tie(colors[y.source], colors[y.target], y.signature, y.id);
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& e = edges_[order[i]];
      const auto& original = graph_.edge(e.id);
      ElementId id = "e" + std::to_string(i + 1);
      form.renaming[e.id] = id;
      form.graph.add_edge(id, new_ids[e.source], new_ids[e.target],
                          original.label);
      form.graph.replace_properties(id, original.properties);
    }
    return form;
  }

  const PropertyGraph& graph_;
  std::size_t max_leaves_;
  std::vector<ElementId> node_ids_;
  std::vector<IndexedEdge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<int> initial_colors_;

  std::size_t leaves_ = 0;
  std::optional<std::string> best_text_;
  std::optional<std::vector<int>> best_colors_;
};

}  // namespace

CanonicalForm canonical_form(const PropertyGraph& graph,
                             const CanonicalizeOptions& options) {
  return Canonicalizer(graph, options).run();
}

PropertyGraph canonicalize(const PropertyGraph& graph) {
  return canonical_form(graph).graph;
}

std::string canonical_datalog(const PropertyGraph& graph) {
  return emit_datalog(canonicalize(graph), graph.gid());
}

}  // namespace provbench
