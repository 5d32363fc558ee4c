// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/datalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "provbench/error.hpp"

namespace provbench {

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class FactKind { kNode, kEdge, kProperty };

struct Fact {
  FactKind kind;
  std::vector<std::string> args;
  Position at;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  Position position() const { return here_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++here_.line;
      here_.column = 1;
    } else {
      ++here_.column;
    }
    ++pos_;
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorCode::kSyntaxError, here_.line, here_.column,
                     message);
  }

  void expect(char c) {
    skip_blank();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (at_end() ? " before end of input"
                     : std::string(", found '") + peek() + "'"));
    }
    advance();
  }

  std::string word() {
    std::string out;
    while (!at_end()) {
      char c = peek();
      bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                (c >= '0' && c <= '9') || c == '_';
      if (!ok) break;
      out.push_back(c);
      advance();
    }
    return out;
  }

  std::string element_id() {
    skip_blank();
    Position start = here_;
    std::string id = word();
    if (!is_valid_element_id(id)) {
      throw ParseError(ErrorCode::kSyntaxError, start.line, start.column,
                       "expected element id, found '" + id + "'");
    }
    return id;
  }

  std::string quoted() {
    skip_blank();
    if (peek() != '"') fail("expected quoted string");
    advance();
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated string");
      char c = peek();
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\\') {
        advance();
        if (at_end() || (peek() != '"' && peek() != '\\')) {
          fail("invalid escape sequence");
        }
        c = peek();
      }
      out.push_back(c);
      advance();
    }
  }

  std::string rest_of_line() {
    std::string out;
    while (!at_end() && peek() != '\n') {
      out.push_back(peek());
      advance();
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Position here_;
};

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

void append_fact(std::string& out, char rel, std::string_view gid,
                 std::initializer_list<std::string_view> ids,
                 std::initializer_list<std::string_view> strings) {
  out.push_back(rel);
  out.append(gid);
  out.push_back('(');
  bool first = true;
  for (auto id : ids) {
    if (!first) out.push_back(',');
    out.append(id);
    first = false;
  }
  for (auto s : strings) {
    if (!first) out.push_back(',');
    out.append(quote_datalog_string(s));
    first = false;
  }
  out.append(").\n");
}

}  // namespace

std::string quote_datalog_string(std::string_view raw) {
  std::string out;
  out.reserve(raw.size() + 2);
  out.push_back('"');
  for (char c : raw) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

DatalogDocument parse_datalog_document(std::string_view text) {
  Lexer lex(text);
  std::optional<std::string> gid;
  std::vector<Fact> facts;
  std::vector<std::pair<std::string, Position>> dummies;

  while (true) {
    lex.skip_blank();
    if (lex.at_end()) break;
    Position start = lex.position();

    if (lex.peek() == '#') {
      std::string directive = trim(lex.rest_of_line());
      const std::string_view prefix = "#dummy";
      std::string id;
      if (directive.rfind(prefix, 0) == 0 && directive.size() > prefix.size() &&
          std::isspace(static_cast<unsigned char>(directive[prefix.size()]))) {
        id = trim(directive.substr(prefix.size()));
      }
      if (!is_valid_element_id(id)) {
        throw ParseError(ErrorCode::kSyntaxError, start.line, start.column,
                         "unrecognized directive '" + directive + "'");
      }
      dummies.emplace_back(id, start);
      continue;
    }

    std::string rel = lex.word();
    if (rel.size() < 2 || (rel[0] != 'n' && rel[0] != 'e' && rel[0] != 'p') ||
        !is_valid_gid(std::string_view(rel).substr(1))) {
      throw ParseError(ErrorCode::kSyntaxError, start.line, start.column,
                       "expected relation n<gid>, e<gid> or p<gid>, found '" +
                           rel + "'");
    }
    std::string fact_gid = rel.substr(1);
    if (gid && *gid != fact_gid) {
      throw ParseError(ErrorCode::kMixedGid, start.line, start.column,
                       "graph id '" + fact_gid + "' differs from '" + *gid +
                           "'");
    }
    gid = fact_gid;

    Fact fact{FactKind::kNode, {}, start};
    lex.expect('(');
    switch (rel[0]) {
      case 'n':
        fact.args.push_back(lex.element_id());
        lex.expect(',');
        fact.args.push_back(lex.quoted());
        break;
      case 'e':
        fact.kind = FactKind::kEdge;
        for (int i = 0; i < 3; ++i) {
          fact.args.push_back(lex.element_id());
          lex.expect(',');
        }
        fact.args.push_back(lex.quoted());
        break;
      default:
        fact.kind = FactKind::kProperty;
        fact.args.push_back(lex.element_id());
        lex.expect(',');
        fact.args.push_back(lex.quoted());
        lex.expect(',');
        fact.args.push_back(lex.quoted());
        break;
    }
    lex.expect(')');
    lex.expect('.');
    facts.push_back(std::move(fact));
  }

  DatalogDocument doc;
  if (gid) doc.graph.set_gid(*gid);

  auto apply = [&](FactKind kind) {
    for (const auto& f : facts) {
      if (f.kind != kind) continue;
      try {
        switch (kind) {
          case FactKind::kNode:
            doc.graph.add_node(f.args[0], f.args[1]);
            break;
          case FactKind::kEdge:
            doc.graph.add_edge(f.args[0], f.args[1], f.args[2], f.args[3]);
            break;
          case FactKind::kProperty:
            doc.graph.set_property(f.args[0], f.args[1], f.args[2]);
            break;
        }
      } catch (const Error& e) {
        throw ParseError(e.code(), f.at.line, f.at.column, e.what());
      }
    }
  };
  // Nodes first so edges and properties may reference ids declared later.
  apply(FactKind::kNode);
  apply(FactKind::kEdge);
  apply(FactKind::kProperty);

  for (const auto& [id, at] : dummies) {
    if (!doc.graph.has_node(id)) {
      throw ParseError(ErrorCode::kDanglingReference, at.line, at.column,
                       "dummy marker for unknown node '" + id + "'");
    }
    doc.dummy_nodes.insert(id);
  }
  return doc;
}

PropertyGraph parse_datalog(std::string_view text) {
  return parse_datalog_document(text).graph;
}

std::string emit_datalog(const PropertyGraph& graph, std::string_view gid) {
  std::string out;
  for (const auto& [id, node] : graph.nodes()) {
    append_fact(out, 'n', gid, {id}, {node.label});
  }
  for (const auto& [id, edge] : graph.edges()) {
    append_fact(out, 'e', gid, {id, edge.source, edge.target}, {edge.label});
  }

  std::vector<std::tuple<std::string_view, std::string_view, std::string_view>>
      props;
  for (const auto& [id, node] : graph.nodes()) {
    for (const auto& [k, v] : node.properties) props.emplace_back(id, k, v);
  }
  for (const auto& [id, edge] : graph.edges()) {
    for (const auto& [k, v] : edge.properties) props.emplace_back(id, k, v);
  }
  std::sort(props.begin(), props.end());
  for (const auto& [id, k, v] : props) {
    append_fact(out, 'p', gid, {id}, {k, v});
  }
  return out;
}

std::string emit_datalog(const PropertyGraph& graph) {
  return emit_datalog(graph, graph.gid());
}

std::string emit_datalog_document(const DatalogDocument& doc,
                                  std::string_view gid) {
  std::string out;
  for (const auto& id : doc.dummy_nodes) out += "#dummy " + id + "\n";
  return out + emit_datalog(doc.graph, gid);
}

}  // namespace provbench
