// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>

#include "provbench/pipeline/run.hpp"

namespace provbench::pipeline {

/// `<recorder>,<spec>,<record>,<transform>,<generalize>,<compare>` with
/// seconds to 3 decimal places, no trailing newline.
std::string format_timing_line(const BenchmarkResult& result);

/// Appends one line. Safe to call from several threads; each line is written
/// with a single append. Throws IoError.
void append_timing(const std::filesystem::path& log_path,
                   const BenchmarkResult& result);

}  // namespace provbench::pipeline
