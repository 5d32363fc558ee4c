// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/error.hpp"

namespace provbench {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kMixedGid: return "MixedGid";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kConflictingProperty: return "ConflictingProperty";
    case ErrorCode::kIdClash: return "IdClash";
    case ErrorCode::kUnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::kUnresolvedEndpoint: return "UnresolvedEndpoint";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kOracleTooLarge: return "OracleTooLarge";
    case ErrorCode::kInvalidMatching: return "InvalidMatching";
    case ErrorCode::kInsufficientConsistentTrials:
      return "InsufficientConsistentTrials";
    case ErrorCode::kBackgroundNotEmbeddable: return "BackgroundNotEmbeddable";
    case ErrorCode::kMissingTrialFiles: return "MissingTrialFiles";
    case ErrorCode::kRecorderFailure: return "RecorderFailure";
    case ErrorCode::kCorruptBaseline: return "CorruptBaseline";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

}  // namespace provbench
