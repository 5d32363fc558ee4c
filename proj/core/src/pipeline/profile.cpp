// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/pipeline/profile.hpp"

#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "provbench/error.hpp"

namespace provbench::pipeline {

namespace {

namespace pt = boost::property_tree;

[[noreturn]] void bad(const std::string& profile, const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument,
              "profile '" + profile + "': " + message);
}

bool parse_bool(const std::string& profile, const std::string& key,
                const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad(profile, key + " must be true or false, got '" + value + "'");
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& value) {
  std::filesystem::path p(value);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

}  // namespace

std::string_view to_string(RecorderKind kind) {
  return kind == RecorderKind::kSynthetic ? "synthetic" : "directory";
}

void validate(const RecorderProfile& profile) {
  if (profile.name.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "profile name is empty");
  }
  if (profile.trials < 2) {
    bad(profile.name, "trials must be at least 2 to form a pair");
  }
}

std::map<std::string, RecorderProfile> builtin_profiles() {
  std::map<std::string, RecorderProfile> out;
  RecorderProfile datalog;
  datalog.name = "synthetic";
  out.emplace(datalog.name, datalog);

  RecorderProfile dot = datalog;
  dot.name = "synthetic-dot";
  dot.format.format = Format::kDot;
  out.emplace(dot.name, dot);

  RecorderProfile json = datalog;
  json.name = "synthetic-json";
  json.format.format = Format::kGenericJson;
  out.emplace(json.name, json);
  return out;
}

std::map<std::string, RecorderProfile> parse_profiles(
    std::string_view ini_text, const std::filesystem::path& base_dir) {
  pt::ptree tree;
  std::istringstream in{std::string(ini_text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(ErrorCode::kSyntaxError, e.line(), 1, e.message());
  }

  std::map<std::string, RecorderProfile> out;
  for (const auto& [name, section] : tree) {
    if (section.empty()) bad(name, "top-level keys must live in a [section]");
    RecorderProfile p;
    p.name = name;

    const std::string tool = section.get<std::string>("stage1tool", "synthetic");
    if (tool == "synthetic") {
      p.kind = RecorderKind::kSynthetic;
    } else if (tool == "directory" || tool.rfind("directory:", 0) == 0) {
      p.kind = RecorderKind::kDirectory;
      if (tool.size() > 10) p.source = resolve(base_dir, tool.substr(10));
    } else {
      bad(name, "unknown stage1tool '" + tool + "'");
    }

    const std::string handler = section.get<std::string>("stage2handler", "datalog");
    auto format = parse_format(handler);
    if (!format) bad(name, "unknown stage2handler '" + handler + "'");
    p.format.format = *format;

    p.filter_graphs = parse_bool(
        name, "filtergraphs", section.get<std::string>("filtergraphs", "false"));
    p.format.strict =
        parse_bool(name, "strict", section.get<std::string>("strict", "false"));
    p.format.label_attr = section.get<std::string>("label_attr", "label");
    if (auto staging = section.get_optional<std::string>("staging")) {
      p.staging = resolve(base_dir, *staging);
    }
    if (auto source = section.get_optional<std::string>("source")) {
      p.source = resolve(base_dir, *source);
    }
    try {
      p.trials = section.get<std::size_t>("trials", kDefaultTrials);
      p.seed = section.get<std::uint64_t>("seed", 1);
    } catch (const pt::ptree_bad_data&) {
      bad(name, "trials and seed must be nonnegative integers");
    }
    validate(p);
    out.emplace(name, std::move(p));
  }
  return out;
}

std::map<std::string, RecorderProfile> load_profiles(
    const std::filesystem::path& ini_path) {
  std::ifstream in(ini_path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read " + ini_path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_profiles(text.str(), ini_path.parent_path());
}

}  // namespace provbench::pipeline
