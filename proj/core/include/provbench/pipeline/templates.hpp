// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "provbench/compare.hpp"
#include "provbench/graph.hpp"

namespace provbench::pipeline {

struct SketchNode {
  ElementId id;
  std::string label;
  Properties properties;
};

struct SketchEdge {
  ElementId id;
  ElementId source;
  ElementId target;
  std::string label;
  Properties properties;
};

struct GraphSketch {
  std::vector<SketchNode> nodes;
  std::vector<SketchEdge> edges;
};

/// Deterministic stand-in for a live recorder. The background program
/// records `background`; the foreground records background plus `delta`,
/// whose edges may reference background nodes (the anchors).
struct SyntheticTemplate {
  std::string name;
  std::string description;
  GraphSketch background;
  GraphSketch delta;
  /// Keys whose values are redrawn on every trial.
  std::set<std::string> transient_keys;
  /// Every n-th recording attempt yields an empty document (0 = never).
  std::size_t empty_every = 0;
  /// Every n-th recording attempt adds an unrelated node (0 = never).
  std::size_t spurious_every = 0;
};

/// Throws InvalidArgument on id clashes, dangling edges, or delta edges whose
/// anchors are missing from the background.
void validate(const SyntheticTemplate& t);

/// Background nodes referenced by delta edges.
std::set<ElementId> anchors(const SyntheticTemplate& t);

PropertyGraph background_graph(const SyntheticTemplate& t);
PropertyGraph foreground_graph(const SyntheticTemplate& t);

/// What a correct pipeline should extract: delta nodes and edges with
/// transient keys removed, anchors as property-less dummies.
BenchmarkGraph expected_target(const SyntheticTemplate& t);

enum class Role { kForeground, kBackground };
std::string_view to_string(Role role);

/// One recording attempt: the role's graph with transient values redrawn and
/// node/edge ids shuffled, both driven by (seed, template, role, attempt).
PropertyGraph render_trial(const SyntheticTemplate& t, Role role,
                           std::uint64_t seed, std::size_t attempt);

/// Repeats the template's delta `k` times with fresh ids.
SyntheticTemplate repeat_delta(const SyntheticTemplate& t, std::size_t k,
                               std::string name);

/// File, process, permission and pipe templates plus scale1/2/4/8.
const std::map<std::string, SyntheticTemplate>& builtin_templates();

/// JSON template format: {"name", "description", "transient_keys": [...],
/// "background": {"nodes": [...], "edges": [...]}, "delta": {...},
/// "empty_every", "spurious_every"} with nodes/edges in the generic-json
/// shape.
SyntheticTemplate parse_template_json(std::string_view text);
std::string emit_template_json(const SyntheticTemplate& t);
/// Loads `<dir>/<name>.json` for every template file in dir.
std::map<std::string, SyntheticTemplate> load_templates(
    const std::filesystem::path& dir);

}  // namespace provbench::pipeline
