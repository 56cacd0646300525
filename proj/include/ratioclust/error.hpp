// Copyright 2026 The ratioclust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RATIOCLUST_ERROR_HPP_
#define RATIOCLUST_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ratioclust {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kEmptyCluster,
  kIsolatedVertex,
  kEmptyGraph,
  kInvalidClustering,
  kInvalidWeights,
  kInvalidTrials,
  kInvalidInstance,
  kInstanceTooLarge,
  kTooLarge,
  kLambdaOutOfRange,
  kParseError,
  kMissingVertexWeight,
  kNonPositiveWeight,
  kInvalidArgument,
};

/// Stable, machine-readable name for an error code (used in CLI error JSON).
constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kEmptyCluster: return "EmptyCluster";
    case ErrorCode::kIsolatedVertex: return "IsolatedVertex";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kInvalidClustering: return "InvalidClustering";
    case ErrorCode::kInvalidWeights: return "InvalidWeights";
    case ErrorCode::kInvalidTrials: return "InvalidTrials";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kLambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingVertexWeight: return "MissingVertexWeight";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Exception thrown by every library operation. Carries an ErrorCode and,
/// for text-format errors, the 1-based input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace ratioclust

#endif  // RATIOCLUST_ERROR_HPP_
