// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "provbench/ingest.hpp"
#include "provbench/pipeline/profile.hpp"
#include "provbench/pipeline/templates.hpp"

namespace provbench::pipeline {

/// A benchmark: one target activity, recorded via a foreground source (with
/// the activity) and a background source (without it).
struct BenchmarkSpec {
  std::string name;
  std::string foreground;
  std::string background;
  std::string notes;
};

/// Throws InvalidArgument when the name is empty or both sources coincide.
void validate(const BenchmarkSpec& spec);

/// Spec whose sources are `<name>.fg` and `<name>.bg`.
BenchmarkSpec spec_for(const std::string& name);

struct RawDocument {
  /// File name or synthetic trial label, for diagnostics.
  std::string origin;
  std::string text;
  Format format = Format::kDatalog;
};

/// Serializes a graph in any supported format.
std::string render_document(const PropertyGraph& graph, Format format);

/// Access to recorded trials. The synthetic recorder needs a template
/// library; the directory recorder reads profile.source.
class Recorder {
 public:
  Recorder(RecorderProfile profile,
           std::map<std::string, SyntheticTemplate> templates = {});

  const RecorderProfile& profile() const { return profile_; }
  const std::map<std::string, SyntheticTemplate>& templates() const {
    return templates_;
  }

  /// Exactly profile.trials documents for one side of a spec. Throws
  /// MissingTrialFiles or RecorderFailure.
  std::vector<RawDocument> record_trials(const BenchmarkSpec& spec,
                                         Role role) const;

  /// Spec names this recorder can serve, sorted.
  std::vector<std::string> available_specs() const;

 private:
  std::vector<RawDocument> record_synthetic(const BenchmarkSpec& spec,
                                            Role role) const;
  std::vector<RawDocument> record_directory(const BenchmarkSpec& spec,
                                            Role role) const;
  bool acceptable(const RawDocument& doc) const;

  RecorderProfile profile_;
  std::map<std::string, SyntheticTemplate> templates_;
};

/// Builds the recorder for a profile: templates from profile.source when set
/// (synthetic), else the built-in library.
Recorder make_recorder(const RecorderProfile& profile);

}  // namespace provbench::pipeline
