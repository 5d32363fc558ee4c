// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/pipeline/run.hpp"

#include <chrono>
#include <ostream>
#include <utility>
#include <vector>

#include "provbench/error.hpp"

namespace provbench::pipeline {

namespace {

class StageTimer {
 public:
  explicit StageTimer(double& sink)
      : sink_(sink), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    sink_ += std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           start_)
                 .count();
  }

 private:
  double& sink_;
  std::chrono::steady_clock::time_point start_;
};

struct StageFailure {
  Stage stage;
  std::string reason;
};

template <typename F>
auto run_stage(Stage stage, double& clock, F&& body) {
  StageTimer timer(clock);
  try {
    return body();
  } catch (const std::exception& e) {
    throw StageFailure{stage, e.what()};
  }
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kRecording: return "recording";
    case Stage::kTransformation: return "transformation";
    case Stage::kGeneralization: return "generalization";
    case Stage::kComparison: return "comparison";
  }
  return "unknown";
}

std::string_view to_string(StatusKind kind) {
  switch (kind) {
    case StatusKind::kOk: return "ok";
    case StatusKind::kEmpty: return "empty";
    case StatusKind::kError: return "error";
  }
  return "error";
}

BenchmarkResult run_benchmark(const Recorder& recorder, const BenchmarkSpec& spec,
                              const RunOptions& options) {
  BenchmarkResult result;
  result.spec = spec.name;
  result.recorder = recorder.profile().name;
  auto& clock = result.durations;

  RunOptions effective = options;
  effective.generalize.match.trace = options.verbose;
  effective.subtract.match.trace = options.verbose;

  try {
    std::vector<RawDocument> fg_docs, bg_docs;
    run_stage(Stage::kRecording, clock.recording, [&] {
      validate(spec);
      fg_docs = recorder.record_trials(spec, Role::kForeground);
      bg_docs = recorder.record_trials(spec, Role::kBackground);
      return 0;
    });

    std::vector<PropertyGraph> fg_graphs, bg_graphs;
    run_stage(Stage::kTransformation, clock.transformation, [&] {
      FormatProfile format = recorder.profile().format;
      auto ingest_all = [&](const std::vector<RawDocument>& docs,
                            std::vector<PropertyGraph>& out) {
        for (const auto& doc : docs) {
          format.format = doc.format;
          try {
            out.push_back(ingest_document(doc.text, format));
          } catch (const Error& e) {
            throw Error(e.code(), doc.origin + ": " + e.what());
          }
        }
      };
      ingest_all(fg_docs, fg_graphs);
      ingest_all(bg_docs, bg_graphs);
      return 0;
    });

    run_stage(Stage::kGeneralization, clock.generalization, [&] {
      if (options.verbose) *options.verbose << spec.name << ": generalizing fg\n";
      result.foreground = generalize_trials(fg_graphs, effective.generalize);
      if (options.verbose) *options.verbose << spec.name << ": generalizing bg\n";
      result.background = generalize_trials(bg_graphs, effective.generalize);
      return 0;
    });

    run_stage(Stage::kComparison, clock.comparison, [&] {
      result.benchmark =
          subtract(*result.foreground, *result.background, effective.subtract);
      if (options.verbose) {
        const auto& d = result.benchmark->diagnostics;
        *options.verbose << spec.name << ": embedding cost " << d.embedding_cost
                         << ", optimal embeddings " << d.optimal_embeddings
                         << (d.optimal_embeddings >= d.optimal_embedding_limit
                                 ? "+"
                                 : "")
                         << '\n';
      }
      return 0;
    });

    result.status.kind = is_empty_result(*result.benchmark) ? StatusKind::kEmpty
                                                            : StatusKind::kOk;
  } catch (const StageFailure& failure) {
    result.status.kind = StatusKind::kError;
    result.status.stage = failure.stage;
    result.status.reason = failure.reason;
    result.benchmark.reset();
  }
  return result;
}

}  // namespace provbench::pipeline
