// Copyright 2026 The Choreo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHOREO_ERROR_HPP
#define CHOREO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace choreo {

enum class ErrorCode {
  // Document / graph validation.
  kMalformedDocument,
  kCycleDetected,
  kDuplicateVertexId,
  kNegativeCost,
  kNoPathExists,
  // Analysis preconditions.
  kNoAffordablePath,
  kNoStableImputation,
  kMissingAnnouncedPrices,
  kUnavoidableVertex,
  kInvalidParameters,
  kInvalidArgument,
  // Enumeration caps.
  kTooManyPlayers,
};

/// Stable identifier used in machine-readable output ("CycleDetected", ...).
std::string_view error_code_name(ErrorCode code);

struct Diagnostic {
  ErrorCode code;
  std::string message;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), diagnostics_{{code, message}} {}

  /// Several problems found in one pass; code() reports the first.
  explicit Error(std::vector<Diagnostic> diagnostics);

  ErrorCode code() const { return diagnostics_.front().code; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace choreo

#endif  // CHOREO_ERROR_HPP
