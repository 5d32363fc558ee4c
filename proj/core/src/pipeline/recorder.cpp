// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/pipeline/recorder.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "provbench/datalog.hpp"
#include "provbench/error.hpp"

namespace provbench::pipeline {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void stage_document(const fs::path& staging, const std::string& spec,
                    const RawDocument& doc) {
  if (staging.empty()) return;
  std::error_code ec;
  fs::path dir = staging / spec;
  fs::create_directories(dir, ec);
  std::ofstream out(dir / (doc.origin + std::string(file_extension(doc.format))),
                    std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write staging file under " +
                                         dir.string());
  }
  out << doc.text;
}

const std::string& source_for(const BenchmarkSpec& spec, Role role) {
  return role == Role::kForeground ? spec.foreground : spec.background;
}

}  // namespace

void validate(const BenchmarkSpec& spec) {
  if (spec.name.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "benchmark spec has no name");
  }
  if (spec.foreground.empty() || spec.background.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "spec " + spec.name + " needs foreground and background sources");
  }
  if (spec.foreground == spec.background) {
    throw Error(ErrorCode::kInvalidArgument,
                "spec " + spec.name + " uses the same source for both sides");
  }
}

BenchmarkSpec spec_for(const std::string& name) {
  return {name, name + ".fg", name + ".bg", {}};
}

std::string render_document(const PropertyGraph& graph, Format format) {
  switch (format) {
    case Format::kDatalog: return emit_datalog(graph);
    case Format::kDot: return emit_plain_dot(graph);
    case Format::kGenericJson: return emit_generic_json(graph);
    case Format::kProvJson: return emit_prov_json(graph);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown format");
}

Recorder::Recorder(RecorderProfile profile,
                   std::map<std::string, SyntheticTemplate> templates)
    : profile_(std::move(profile)), templates_(std::move(templates)) {
  validate(profile_);
}

std::vector<RawDocument> Recorder::record_trials(const BenchmarkSpec& spec,
                                                 Role role) const {
  validate(spec);
  auto docs = profile_.kind == RecorderKind::kSynthetic
                  ? record_synthetic(spec, role)
                  : record_directory(spec, role);
  for (const auto& doc : docs) stage_document(profile_.staging, spec.name, doc);
  return docs;
}

bool Recorder::acceptable(const RawDocument& doc) const {
  FormatProfile format = profile_.format;
  format.format = doc.format;
  try {
    return !ingest_document(doc.text, format).empty();
  } catch (const Error&) {
    return false;
  }
}

std::vector<RawDocument> Recorder::record_synthetic(const BenchmarkSpec& spec,
                                                    Role role) const {
  auto it = templates_.find(spec.name);
  if (it == templates_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no synthetic template named " + spec.name);
  }
  const SyntheticTemplate& t = it->second;
  const Format format = profile_.format.format;

  std::vector<RawDocument> out;
  const std::size_t max_attempts =
      profile_.filter_graphs ? profile_.trials * 10 : profile_.trials;
  for (std::size_t attempt = 1;
       attempt <= max_attempts && out.size() < profile_.trials; ++attempt) {
    PropertyGraph g = render_trial(t, role, profile_.seed, attempt);
    RawDocument doc{spec.name + "." + std::string(to_string(role)) + "." +
                        std::to_string(attempt),
                    {}, format};
    try {
      doc.text = render_document(g, format);
    } catch (const Error& e) {
      throw Error(ErrorCode::kRecorderFailure,
                  doc.origin + ": cannot render trial: " + e.what());
    }
    if (profile_.filter_graphs && !acceptable(doc)) continue;
    out.push_back(std::move(doc));
  }
  if (out.size() < profile_.trials) {
    throw Error(ErrorCode::kRecorderFailure,
                spec.name + " " + std::string(to_string(role)) + ": only " +
                    std::to_string(out.size()) + " usable trials of " +
                    std::to_string(profile_.trials) + " after " +
                    std::to_string(max_attempts) + " attempts");
  }
  return out;
}

std::vector<RawDocument> Recorder::record_directory(const BenchmarkSpec& spec,
                                                    Role role) const {
  const Format format = profile_.format.format;
  const std::string ext(file_extension(format));
  const std::string& stem = source_for(spec, role);

  // Trials live in <source>/<spec>/ or directly in <source>/.
  fs::path dir;
  for (const fs::path& candidate : {profile_.source / spec.name, profile_.source}) {
    if (fs::exists(candidate / (stem + ".1" + ext))) {
      dir = candidate;
      break;
    }
  }
  if (dir.empty()) {
    throw Error(ErrorCode::kMissingTrialFiles,
                "no trial files " + stem + ".<i>" + ext + " under " +
                    profile_.source.string());
  }

  std::vector<RawDocument> out;
  std::size_t skipped = 0;
  for (std::size_t i = 1; out.size() < profile_.trials; ++i) {
    fs::path path = dir / (stem + "." + std::to_string(i) + ext);
    if (!fs::exists(path)) {
      if (!profile_.filter_graphs) {
        throw Error(ErrorCode::kMissingTrialFiles,
                    "missing " + path.string() + " (need " +
                        std::to_string(profile_.trials) + " trials)");
      }
      throw Error(ErrorCode::kRecorderFailure,
                  stem + ": " + std::to_string(out.size()) +
                      " usable trials, " + std::to_string(skipped) +
                      " rejected, need " + std::to_string(profile_.trials));
    }
    RawDocument doc{path.filename().string(), read_file(path), format};
    if (profile_.filter_graphs && !acceptable(doc)) {
      ++skipped;
      continue;
    }
    out.push_back(std::move(doc));
  }
  return out;
}

std::vector<std::string> Recorder::available_specs() const {
  std::set<std::string> names;
  if (profile_.kind == RecorderKind::kSynthetic) {
    for (const auto& [name, _] : templates_) names.insert(name);
  } else {
    const std::string suffix =
        ".fg.1" + std::string(file_extension(profile_.format.format));
    std::error_code ec;
    for (fs::recursive_directory_iterator it(profile_.source, ec), end;
         !ec && it != end; it.increment(ec)) {
      if (it.depth() > 1) it.disable_recursion_pending();
      if (!it->is_regular_file()) continue;
      std::string file = it->path().filename().string();
      if (file.size() > suffix.size() &&
          file.compare(file.size() - suffix.size(), suffix.size(), suffix) == 0) {
        names.insert(file.substr(0, file.size() - suffix.size()));
      }
    }
  }
  return {names.begin(), names.end()};
}

Recorder make_recorder(const RecorderProfile& profile) {
  if (profile.kind == RecorderKind::kSynthetic && !profile.source.empty()) {
    return Recorder(profile, load_templates(profile.source));
  }
  if (profile.kind == RecorderKind::kSynthetic) {
    return Recorder(profile, builtin_templates());
  }
  return Recorder(profile);
}

}  // namespace provbench::pipeline
