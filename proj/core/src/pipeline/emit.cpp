// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/pipeline/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "provbench/canonical.hpp"
#include "provbench/ingest.hpp"

namespace provbench::pipeline {

namespace {

// Properties go into the tooltip so the label reads back unchanged.
std::string tooltip(const Properties& props) {
  std::string out;
  for (const auto& [k, v] : props) {
    if (!out.empty()) out += '\n';
    out += k + "=" + v;
  }
  return out;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

StyleTable StyleTable::standard() {
  StyleTable t;
  const NodeStyle process{"box", "#b3d1ff"};
  for (const char* label : {"Process", "process", "activity", "Activity"}) {
    t.by_label[label] = process;
  }
  return t;
}

const NodeStyle& StyleTable::style_for(const std::string& label,
                                       bool is_dummy) const {
  if (is_dummy) return dummy;
  auto it = by_label.find(label);
  return it == by_label.end() ? fallback : it->second;
}

std::string emit_graph_dot(const PropertyGraph& graph,
                           const std::set<ElementId>& dummies,
                           const StyleTable& style) {
  std::ostringstream out;
  out << "digraph " << graph.gid() << " {\n";
  if (!graph.empty()) out << "  node [style=filled];\n";
  for (const auto& [id, node] : graph.nodes()) {
    const bool dummy = dummies.count(id) > 0;
    const NodeStyle& s = style.style_for(node.label, dummy);
    out << "  " << id << " [label=" << quote_dot_string(node.label);
    if (!node.properties.empty()) {
      out << ", tooltip=" << quote_dot_string(tooltip(node.properties));
    }
    out << ", shape=" << s.shape << ", fillcolor=" << quote_dot_string(s.fillcolor);
    if (dummy) out << ", dummy=\"true\"";
    out << "];\n";
  }
  for (const auto& [id, edge] : graph.edges()) {
    out << "  " << edge.source << " -> " << edge.target
        << " [label=" << quote_dot_string(edge.label);
    if (!edge.properties.empty()) {
      out << ", tooltip=" << quote_dot_string(tooltip(edge.properties));
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_dot(const BenchmarkResult& result, const StyleTable& style) {
  if (result.status.kind == StatusKind::kError || !result.benchmark) {
    std::string reason = result.status.reason;
    std::replace(reason.begin(), reason.end(), '\n', ' ');
    return "digraph g { }\n// error: " + reason + "\n";
  }
  if (result.status.kind == StatusKind::kEmpty ||
      is_empty_result(*result.benchmark)) {
    return "digraph g { }\n// empty\n";
  }
  BenchmarkGraph canonical = canonicalize_benchmark(*result.benchmark);
  return emit_graph_dot(canonical.graph, canonical.dummy_nodes, style);
}

std::string escape_html(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string emit_html(std::vector<BenchmarkResult> results) {
  std::sort(results.begin(), results.end(),
            [](const BenchmarkResult& a, const BenchmarkResult& b) {
              return a.spec < b.spec;
            });
  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>provbench results</title>\n"
      << "<style>body{font-family:sans-serif} pre{background:#f4f4f4;"
         "padding:6px} .error{color:#b00} .empty{color:#777}</style>\n"
      << "</head>\n<body>\n<h1>" << results.size() << " benchmarks</h1>\n";
  for (const auto& r : results) {
    const std::string status(to_string(r.status.kind));
    out << "<section id=\"" << escape_html(r.spec) << "\">\n<h2>"
        << escape_html(r.spec) << "</h2>\n<p class=\"" << status
        << "\">recorder " << escape_html(r.recorder) << ", status " << status;
    if (r.status.stage) {
      out << " in " << to_string(*r.status.stage) << ": "
          << escape_html(r.status.reason);
    }
    out << "</p>\n";
    if (r.benchmark) {
      out << "<p>" << r.benchmark->graph.node_count() << " nodes ("
          << r.benchmark->dummy_nodes.size() << " dummy), "
          << r.benchmark->graph.edge_count() << " edges</p>\n";
    }
    out << "<table>\n";
    const std::pair<const char*, double> rows[] = {
        {"recording", r.durations.recording},
        {"transformation", r.durations.transformation},
        {"generalization", r.durations.generalization},
        {"comparison", r.durations.comparison}};
    for (const auto& [name, secs] : rows) {
      out << "<tr><td>" << name << "</td><td>" << seconds(secs)
          << " s</td></tr>\n";
    }
    out << "</table>\n";
    auto block = [&](const char* title, const std::string& dot) {
      out << "<h3>" << title << "</h3>\n<pre>" << escape_html(dot) << "</pre>\n";
    };
    if (r.background) {
      block("background", emit_graph_dot(canonicalize(r.background->graph)));
    }
    if (r.foreground) {
      block("foreground", emit_graph_dot(canonicalize(r.foreground->graph)));
    }
    block("benchmark", emit_dot(r));
    out << "</section>\n";
  }
  out << "</body>\n</html>\n";
  return out.str();
}

}  // namespace provbench::pipeline
