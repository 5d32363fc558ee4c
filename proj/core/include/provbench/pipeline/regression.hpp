// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "provbench/compare.hpp"
#include "provbench/matcher.hpp"

namespace provbench::pipeline {

enum class VerdictKind { kUnchanged, kChanged, kNew };
std::string_view to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::kNew;
  /// current minus baseline
  std::int64_t node_delta = 0;
  std::int64_t edge_delta = 0;
  /// Property mismatches under the best similarity witness when the shapes
  /// agree, otherwise the difference in property counts.
  std::int64_t property_delta = 0;
  bool same_shape = false;
  std::string summary;
};

/// `<dir>/<spec>.dl`
std::filesystem::path baseline_path(const std::filesystem::path& dir,
                                    std::string_view spec);

/// Unchanged iff the graphs are similar at cost 0 with dummy nodes mapped
/// onto dummy nodes.
Verdict compare_to_baseline(const BenchmarkGraph& current,
                            const BenchmarkGraph& baseline,
                            const MatchOptions& options = {});

/// Reads the baseline for spec, if any, and compares. Throws CorruptBaseline
/// when the file does not parse.
Verdict check_regression(const std::filesystem::path& dir, std::string_view spec,
                         const BenchmarkGraph& current,
                         const MatchOptions& options = {});

/// Writes the canonical form of `b` as the new baseline. Throws IoError.
void write_baseline(const std::filesystem::path& dir, std::string_view spec,
                    const BenchmarkGraph& b);

}  // namespace provbench::pipeline
