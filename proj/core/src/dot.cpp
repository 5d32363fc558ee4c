// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "provbench/error.hpp"
#include "provbench/ingest.hpp"

namespace provbench {

namespace {

enum class Tok {
  kId,      // bare identifier or numeral
  kString,  // double-quoted
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kSemi,
  kComma,
  kEquals,
  kColon,
  kArrow,     // ->
  kUndirected,  // --
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      Token t{Tok::kEnd, "", line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      switch (c) {
        case '{': t.kind = Tok::kLBrace; advance(); break;
        case '}': t.kind = Tok::kRBrace; advance(); break;
        case '[': t.kind = Tok::kLBracket; advance(); break;
        case ']': t.kind = Tok::kRBracket; advance(); break;
        case ';': t.kind = Tok::kSemi; advance(); break;
        case ',': t.kind = Tok::kComma; advance(); break;
        case '=': t.kind = Tok::kEquals; advance(); break;
        case ':': t.kind = Tok::kColon; advance(); break;
        case '<':
          throw ParseError(ErrorCode::kUnsupportedConstruct, line_, column_,
                           "HTML labels are not supported");
        case '"': t.kind = Tok::kString; t.text = quoted(); break;
        default:
          if (c == '-' && peek(1) == '>') {
            t.kind = Tok::kArrow;
            advance();
            advance();
          } else if (c == '-' && peek(1) == '-') {
            t.kind = Tok::kUndirected;
            advance();
            advance();
          } else if (is_id_char(c) || c == '-' || c == '.') {
            t.kind = Tok::kId;
            t.text = bare();
          } else {
            fail(std::string("unexpected character '") + c + "'");
          }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static bool is_id_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || u >= 0x80;
  }

  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorCode::kSyntaxError, line_, column_, message);
  }

  void skip_blank() {
    bool line_start = column_ == 1;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        advance();
        line_start = true;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' && line_start) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        advance();
        advance();
        while (pos_ < text_.size() && !(text_[pos_] == '*' && peek(1) == '/')) {
          advance();
        }
        if (pos_ >= text_.size()) fail("unterminated comment");
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string quoted() {
    advance();
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string");
      char c = text_[pos_];
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\\' && peek(1) == '"') {
        advance();
        c = '"';
      } else if (c == '\\' && peek(1) == '\\') {
        advance();
      } else if (c == '\\' && peek(1) == '\n') {
        // line continuation
        advance();
        advance();
        continue;
      }
      out.push_back(c);
      advance();
    }
  }

  std::string bare() {
    std::string out;
    while (pos_ < text_.size() &&
           (is_id_char(text_[pos_]) || text_[pos_] == '.' ||
            (text_[pos_] == '-' && out.empty()))) {
      out.push_back(text_[pos_]);
      advance();
    }
    if (out.empty() || out == "-") fail("malformed identifier");
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

using Attributes = std::vector<std::pair<std::string, std::string>>;

class DotParser {
 public:
  DotParser(std::vector<Token> tokens, const FormatProfile& profile)
      : tokens_(std::move(tokens)), profile_(profile) {}

  PropertyGraph parse() {
    if (keyword("strict")) ++pos_;
    if (keyword("graph")) unsupported("undirected graphs are not supported");
    if (!keyword("digraph")) fail("expected 'digraph'");
    ++pos_;
    if (is_id(cur())) ++pos_;
    expect(Tok::kLBrace, "'{'");
    while (cur().kind != Tok::kRBrace) {
      if (cur().kind == Tok::kEnd) fail("expected '}' before end of input");
      statement();
    }
    ++pos_;
    if (cur().kind != Tok::kEnd) fail("content after closing '}'");
    return build();
  }

 private:
  struct PendingNode {
    std::map<std::string, std::string> attributes;
  };
  struct PendingEdge {
    std::size_t source;
    std::size_t target;
    Attributes attributes;
  };

  const Token& cur() const { return tokens_[pos_]; }
  static bool is_id(const Token& t) {
    return t.kind == Tok::kId || t.kind == Tok::kString;
  }
  bool keyword(const char* word) const {
    return cur().kind == Tok::kId && lower(cur().text) == word;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorCode::kSyntaxError, cur().line, cur().column, message);
  }
  [[noreturn]] void unsupported(const std::string& message) const {
    throw ParseError(ErrorCode::kUnsupportedConstruct, cur().line,
                     cur().column, message);
  }

  void expect(Tok kind, const char* what) {
    if (cur().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  void check_not_unsupported() const {
    if (cur().kind == Tok::kLBrace || keyword("subgraph")) {
      unsupported("subgraphs are not supported");
    }
    if (cur().kind == Tok::kUndirected) {
      unsupported("undirected edges are not supported");
    }
    if (cur().kind == Tok::kColon) unsupported("ports are not supported");
  }

  std::string id() {
    check_not_unsupported();
    if (!is_id(cur())) fail("expected identifier");
    return tokens_[pos_++].text;
  }

  Attributes attribute_lists() {
    Attributes attrs;
    while (cur().kind == Tok::kLBracket) {
      ++pos_;
      while (cur().kind != Tok::kRBracket) {
        std::string key = id();
        expect(Tok::kEquals, "'=' in attribute list");
        std::string value = id();
        attrs.emplace_back(std::move(key), std::move(value));
        if (cur().kind == Tok::kComma || cur().kind == Tok::kSemi) ++pos_;
      }
      ++pos_;
    }
    return attrs;
  }

  void statement() {
    check_not_unsupported();
    if (keyword("graph") || keyword("node") || keyword("edge")) {
      ++pos_;
      attribute_lists();  // styling defaults carry no provenance
    } else {
      std::string first = id();
      if (cur().kind == Tok::kEquals) {
        ++pos_;
        id();
      } else if (cur().kind == Tok::kArrow) {
        std::vector<std::size_t> chain{node_index(first)};
        while (cur().kind == Tok::kArrow) {
          ++pos_;
          chain.push_back(node_index(id()));
        }
        check_not_unsupported();
        Attributes attrs = attribute_lists();
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          edges_.push_back({chain[i], chain[i + 1], attrs});
        }
      } else {
        check_not_unsupported();
        std::size_t n = node_index(first);
        for (auto& [k, v] : attribute_lists()) {
          nodes_[n].attributes[k] = v;
        }
      }
    }
    if (cur().kind == Tok::kSemi) ++pos_;
  }

  std::size_t node_index(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, nodes_.size());
    if (inserted) nodes_.emplace_back();
    return it->second;
  }

  PropertyGraph build() const {
    PropertyGraph g;
    auto node_id = [](std::size_t i) { return "n" + std::to_string(i + 1); };
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      std::string label;
      if (auto it = nodes_[i].attributes.find(profile_.label_attr);
          it != nodes_[i].attributes.end()) {
        label = it->second;
      }
      g.add_node(node_id(i), label);
      Properties props;
      for (const auto& [k, v] : nodes_[i].attributes) {
        if (k != profile_.label_attr) props[k] = v;
      }
      g.replace_properties(node_id(i), std::move(props));
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      std::map<std::string, std::string> merged;
      for (const auto& [k, v] : e.attributes) merged[k] = v;
      std::string label;
      if (auto it = merged.find(profile_.label_attr); it != merged.end()) {
        label = it->second;
        merged.erase(it);
      }
      std::string id = "e" + std::to_string(i + 1);
      g.add_edge(id, node_id(e.source), node_id(e.target), label);
      g.replace_properties(id, Properties(merged.begin(), merged.end()));
    }
    return g;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const FormatProfile& profile_;
  std::map<std::string, std::size_t> index_;
  std::vector<PendingNode> nodes_;
  std::vector<PendingEdge> edges_;
};

}  // namespace

PropertyGraph parse_dot(std::string_view text, const FormatProfile& profile) {
  return DotParser(DotLexer(text).tokenize(), profile).parse();
}

std::string quote_dot_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string emit_plain_dot(const PropertyGraph& graph,
                           const FormatProfile& profile) {
  std::ostringstream out;
  auto attrs = [&](const std::string& label, const Properties& props,
                   const ElementId& id) {
    if (props.count(profile.label_attr)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "property '" + profile.label_attr + "' on " + id +
                      " collides with the DOT label attribute");
    }
    out << " [" << quote_dot_string(profile.label_attr) << '='
        << quote_dot_string(label);
    for (const auto& [k, v] : props) {
      out << ", " << quote_dot_string(k) << '=' << quote_dot_string(v);
    }
    out << "];\n";
  };
  out << "digraph " << graph.gid() << " {\n";
  for (const auto& [id, node] : graph.nodes()) {
    out << "  " << id;
    attrs(node.label, node.properties, id);
  }
  for (const auto& [id, edge] : graph.edges()) {
    out << "  " << edge.source << " -> " << edge.target;
    attrs(edge.label, edge.properties, id);
  }
  out << "}\n";
  return out.str();
}

}  // namespace provbench
