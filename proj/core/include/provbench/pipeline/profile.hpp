// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "provbench/ingest.hpp"

namespace provbench::pipeline {

enum class RecorderKind {
  /// Generates trials from synthetic templates.
  kSynthetic,
  /// Reads pre-recorded trial files `<spec>.<role>.<i><ext>`.
  kDirectory,
};

std::string_view to_string(RecorderKind kind);

inline constexpr std::size_t kDefaultTrials = 2;

struct RecorderProfile {
  std::string name = "synthetic";
  RecorderKind kind = RecorderKind::kSynthetic;
  FormatProfile format;
  std::size_t trials = kDefaultTrials;
  /// Drop trials that fail to parse or have no nodes.
  bool filter_graphs = false;
  /// Working directory for intermediate files; empty disables staging.
  std::filesystem::path staging;
  /// Directory recorder: fixture root. Synthetic recorder: directory of
  /// `<spec>.json` templates; empty selects the built-in library.
  std::filesystem::path source;
  std::uint64_t seed = 1;
};

/// Throws InvalidArgument unless trials >= 2 and the name is nonempty.
void validate(const RecorderProfile& profile);

/// Profiles available without a config file: synthetic (Datalog),
/// synthetic-dot and synthetic-json.
std::map<std::string, RecorderProfile> builtin_profiles();

/// INI profiles, one section per profile:
///
///   [spade]
///   stage1tool = directory:fixtures/spade   ; or "synthetic"
///   stage2handler = dot                      ; dot|prov-json|generic-json|datalog
///   filtergraphs = false
///   trials = 2
///
/// Optional keys: label_attr, strict, staging, seed. Relative paths resolve
/// against the INI file's directory.
std::map<std::string, RecorderProfile> load_profiles(
    const std::filesystem::path& ini_path);
std::map<std::string, RecorderProfile> parse_profiles(
    std::string_view ini_text, const std::filesystem::path& base_dir = {});

}  // namespace provbench::pipeline
