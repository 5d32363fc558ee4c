// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/pipeline/timing.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>

#include "provbench/error.hpp"

namespace provbench::pipeline {

namespace {

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

// Commas or newlines in a name would break the field count.
std::string field(std::string s) {
  std::replace_if(
      s.begin(), s.end(), [](char c) { return c == ',' || c == '\n' || c == '\r'; },
      '_');
  return s;
}

}  // namespace

std::string format_timing_line(const BenchmarkResult& result) {
  const auto& d = result.durations;
  char times[128];
  std::snprintf(times, sizeof times, "%.3f,%.3f,%.3f,%.3f",
                std::max(0.0, d.recording), std::max(0.0, d.transformation),
                std::max(0.0, d.generalization), std::max(0.0, d.comparison));
  return field(result.recorder) + "," + field(result.spec) + "," + times;
}

void append_timing(const std::filesystem::path& log_path,
                   const BenchmarkResult& result) {
  const std::string line = format_timing_line(result) + "\n";
  std::lock_guard<std::mutex> lock(log_mutex());
  std::ofstream out(log_path, std::ios::app | std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + log_path.string());
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "cannot append to " + log_path.string());
}

}  // namespace provbench::pipeline
