// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace provbench {

enum class ErrorCode {
  kSyntaxError,
  kMixedGid,
  kDanglingReference,
  kConflictingProperty,
  kIdClash,
  kUnsupportedConstruct,
  kUnresolvedEndpoint,
  kBudgetExceeded,
  kOracleTooLarge,
  kInvalidMatching,
  kInsufficientConsistentTrials,
  kBackgroundNotEmbeddable,
  kMissingTrialFiles,
  kRecorderFailure,
  kCorruptBaseline,
  kIoError,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// stable, testable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A failure tied to a position in some input text (1-based line/column).
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace provbench
