// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "provbench/compare.hpp"
#include "provbench/generalize.hpp"
#include "provbench/pipeline/recorder.hpp"

namespace provbench::pipeline {

enum class Stage { kRecording, kTransformation, kGeneralization, kComparison };
std::string_view to_string(Stage stage);

/// Seconds spent in each stage.
struct StageDurations {
  double recording = 0;
  double transformation = 0;
  double generalization = 0;
  double comparison = 0;
};

enum class StatusKind { kOk, kEmpty, kError };
std::string_view to_string(StatusKind kind);

struct Status {
  StatusKind kind = StatusKind::kOk;
  /// Set when kind == kError.
  std::optional<Stage> stage;
  std::string reason;
};

struct BenchmarkResult {
  std::string spec;
  std::string recorder;
  std::optional<GeneralizedGraph> foreground;
  std::optional<GeneralizedGraph> background;
  std::optional<BenchmarkGraph> benchmark;
  StageDurations durations;
  Status status;
};

struct RunOptions {
  GeneralizeOptions generalize;
  SubtractOptions subtract;
  /// Solver and stage diagnostics; null for silence.
  std::ostream* verbose = nullptr;
};

/// Records both sides, ingests, generalizes each side and subtracts. Stage
/// failures are reported through result.status; later stages do not run
/// after a failure.
BenchmarkResult run_benchmark(const Recorder& recorder, const BenchmarkSpec& spec,
                              const RunOptions& options = {});

}  // namespace provbench::pipeline
