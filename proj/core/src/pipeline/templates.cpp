// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/pipeline/templates.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "provbench/error.hpp"

namespace provbench::pipeline {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& name, const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument,
              "template '" + name + "': " + message);
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void add_sketch(PropertyGraph& g, const GraphSketch& sketch, bool nodes,
                bool edges) {
  if (nodes) {
    for (const auto& n : sketch.nodes) {
      g.add_node(n.id, n.label);
      g.replace_properties(n.id, n.properties);
    }
  }
  if (edges) {
    for (const auto& e : sketch.edges) {
      g.add_edge(e.id, e.source, e.target, e.label);
      g.replace_properties(e.id, e.properties);
    }
  }
}

Properties strip(const Properties& props, const std::set<std::string>& keys) {
  Properties out;
  for (const auto& [k, v] : props) {
    if (!keys.count(k)) out.emplace(k, v);
  }
  return out;
}

// Fisher-Yates driven directly by the engine so the permutation does not
// depend on the standard library's distribution implementations.
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

json sketch_to_json(const GraphSketch& s) {
  json out{{"nodes", json::array()}, {"edges", json::array()}};
  for (const auto& n : s.nodes) {
    out["nodes"].push_back(
        {{"id", n.id}, {"label", n.label}, {"properties", n.properties}});
  }
  for (const auto& e : s.edges) {
    out["edges"].push_back({{"id", e.id},
                            {"from", e.source},
                            {"to", e.target},
                            {"label", e.label},
                            {"properties", e.properties}});
  }
  return out;
}

GraphSketch sketch_from_json(const json& j, const std::string& name) {
  GraphSketch s;
  if (j.is_null()) return s;
  if (!j.is_object()) bad(name, "graph sketches must be objects");
  auto props = [&](const json& record) {
    Properties p;
    if (auto it = record.find("properties"); it != record.end()) {
      for (const auto& [k, v] : it->items()) {
        p[k] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
    return p;
  };
  for (const auto& n : j.value("nodes", json::array())) {
    s.nodes.push_back({n.at("id").get<std::string>(),
                       n.value("label", std::string()), props(n)});
  }
  for (const auto& e : j.value("edges", json::array())) {
    s.edges.push_back({e.at("id").get<std::string>(),
                       e.at("from").get<std::string>(),
                       e.at("to").get<std::string>(),
                       e.value("label", std::string()), props(e)});
  }
  return s;
}

}  // namespace

std::string_view to_string(Role role) {
  return role == Role::kForeground ? "fg" : "bg";
}

void validate(const SyntheticTemplate& t) {
  if (t.name.empty()) bad(t.name, "name is empty");
  try {
    PropertyGraph fg = foreground_graph(t);
    (void)fg;
  } catch (const Error& e) {
    bad(t.name, e.what());
  }
  std::set<ElementId> background_nodes;
  for (const auto& n : t.background.nodes) background_nodes.insert(n.id);
  std::set<ElementId> background_ids = background_nodes;
  for (const auto& e : t.background.edges) background_ids.insert(e.id);
  std::set<ElementId> delta_nodes;
  for (const auto& n : t.delta.nodes) delta_nodes.insert(n.id);
  for (const auto& id : delta_nodes) {
    if (background_ids.count(id)) bad(t.name, "delta reuses background id '" + id + "'");
  }
  for (const auto& e : t.delta.edges) {
    if (background_ids.count(e.id)) {
      bad(t.name, "delta reuses background id '" + e.id + "'");
    }
  }
  for (const auto& e : t.delta.edges) {
    for (const auto* end : {&e.source, &e.target}) {
      if (!delta_nodes.count(*end) && !background_nodes.count(*end)) {
        bad(t.name, "delta edge '" + e.id + "' anchors on unknown node '" +
                        *end + "'");
      }
    }
  }
}

std::set<ElementId> anchors(const SyntheticTemplate& t) {
  std::set<ElementId> background_nodes;
  for (const auto& n : t.background.nodes) background_nodes.insert(n.id);
  std::set<ElementId> out;
  for (const auto& e : t.delta.edges) {
    for (const auto* end : {&e.source, &e.target}) {
      if (background_nodes.count(*end)) out.insert(*end);
    }
  }
  return out;
}

PropertyGraph background_graph(const SyntheticTemplate& t) {
  PropertyGraph g;
  add_sketch(g, t.background, true, true);
  return g;
}

PropertyGraph foreground_graph(const SyntheticTemplate& t) {
  PropertyGraph g;
  add_sketch(g, t.background, true, false);
  add_sketch(g, t.delta, true, false);
  add_sketch(g, t.background, false, true);
  add_sketch(g, t.delta, false, true);
  return g;
}

BenchmarkGraph expected_target(const SyntheticTemplate& t) {
  BenchmarkGraph out;
  std::map<ElementId, const SketchNode*> background_nodes;
  for (const auto& n : t.background.nodes) background_nodes[n.id] = &n;
  for (const auto& n : t.delta.nodes) {
    out.graph.add_node(n.id, n.label);
    out.graph.replace_properties(n.id, strip(n.properties, t.transient_keys));
  }
  for (const auto& id : anchors(t)) {
    out.graph.add_node(id, background_nodes.at(id)->label);
    out.dummy_nodes.insert(id);
  }
  for (const auto& e : t.delta.edges) {
    out.graph.add_edge(e.id, e.source, e.target, e.label);
    out.graph.replace_properties(e.id, strip(e.properties, t.transient_keys));
  }
  out.empty = out.graph.empty();
  return out;
}

PropertyGraph render_trial(const SyntheticTemplate& t, Role role,
                           std::uint64_t seed, std::size_t attempt) {
  std::uint64_t h = fnv1a(t.name);
  h = fnv1a(to_string(role), h);
  h = splitmix(h ^ splitmix(seed) ^ splitmix(attempt * 0x100000001b3ull));
  std::mt19937_64 rng(h);

  if (t.empty_every > 0 && attempt % t.empty_every == 0) return PropertyGraph{};

  PropertyGraph source =
      role == Role::kForeground ? foreground_graph(t) : background_graph(t);
  if (t.spurious_every > 0 && attempt % t.spurious_every == 0) {
    source.add_node("spurious", "Artifact");
    source.set_property("spurious", "path",
                        "/tmp/spurious-" + std::to_string(rng() % 100000));
  }

  auto redraw = [&](const Properties& props) {
    Properties out = props;
    for (auto& [k, v] : out) {
      if (t.transient_keys.count(k)) v = std::to_string(rng() % 1000000000000ull);
    }
    return out;
  };

  std::vector<ElementId> node_order;
  for (const auto& [id, _] : source.nodes()) node_order.push_back(id);
  std::vector<ElementId> edge_order;
  for (const auto& [id, _] : source.edges()) edge_order.push_back(id);
  shuffle(node_order, rng);
  shuffle(edge_order, rng);

  std::map<ElementId, ElementId> rename;
  PropertyGraph out;
  for (std::size_t i = 0; i < node_order.size(); ++i) {
    const auto& old_id = node_order[i];
    ElementId id = "n" + std::to_string(i + 1);
    rename[old_id] = id;
    const Node& n = source.node(old_id);
    out.add_node(id, n.label);
    out.replace_properties(id, redraw(n.properties));
  }
  for (std::size_t i = 0; i < edge_order.size(); ++i) {
    const Edge& e = source.edge(edge_order[i]);
    ElementId id = "e" + std::to_string(i + 1);
    out.add_edge(id, rename.at(e.source), rename.at(e.target), e.label);
    out.replace_properties(id, redraw(e.properties));
  }
  return out;
}

SyntheticTemplate repeat_delta(const SyntheticTemplate& t, std::size_t k,
                               std::string name) {
  SyntheticTemplate out = t;
  out.name = std::move(name);
  out.delta = {};
  std::set<ElementId> delta_nodes;
  for (const auto& n : t.delta.nodes) delta_nodes.insert(n.id);
  for (std::size_t copy = 1; copy <= k; ++copy) {
    auto rename = [&](const ElementId& id) {
      return delta_nodes.count(id) ? id + "_" + std::to_string(copy) : id;
    };
    for (auto n : t.delta.nodes) {
      n.id = rename(n.id);
      out.delta.nodes.push_back(std::move(n));
    }
    for (auto e : t.delta.edges) {
      e.id = e.id + "_" + std::to_string(copy);
      e.source = rename(e.source);
      e.target = rename(e.target);
      out.delta.edges.push_back(std::move(e));
    }
  }
  validate(out);
  return out;
}

SyntheticTemplate parse_template_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, e.what());
  }
  SyntheticTemplate t;
  try {
    t.name = doc.at("name").get<std::string>();
    t.description = doc.value("description", std::string());
    for (const auto& k : doc.value("transient_keys", json::array())) {
      t.transient_keys.insert(k.get<std::string>());
    }
    t.background = sketch_from_json(doc.value("background", json()), t.name);
    t.delta = sketch_from_json(doc.value("delta", json()), t.name);
    t.empty_every = doc.value("empty_every", std::size_t{0});
    t.spurious_every = doc.value("spurious_every", std::size_t{0});
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("template: ") + e.what());
  }
  validate(t);
  return t;
}

std::string emit_template_json(const SyntheticTemplate& t) {
  json doc{{"name", t.name},
           {"description", t.description},
           {"transient_keys", t.transient_keys},
           {"background", sketch_to_json(t.background)},
           {"delta", sketch_to_json(t.delta)},
           {"empty_every", t.empty_every},
           {"spurious_every", t.spurious_every}};
  return doc.dump(2) + "\n";
}

std::map<std::string, SyntheticTemplate> load_templates(
    const std::filesystem::path& dir) {
  std::map<std::string, SyntheticTemplate> out;
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot list " + dir.string());
  for (const auto& entry : it) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    std::ostringstream text;
    text << in.rdbuf();
    SyntheticTemplate t = parse_template_json(text.str());
    if (t.name + ".json" != entry.path().filename().string()) {
      bad(t.name, "file name " + entry.path().filename().string() +
                      " does not match template name");
    }
    out.emplace(t.name, std::move(t));
  }
  return out;
}

}  // namespace provbench::pipeline
