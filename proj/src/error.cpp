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

#include "choreo/error.hpp"

namespace choreo {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kDuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::kNegativeCost: return "NegativeCost";
    case ErrorCode::kNoPathExists: return "NoPathExists";
    case ErrorCode::kNoAffordablePath: return "NoAffordablePath";
    case ErrorCode::kNoStableImputation: return "NoStableImputation";
    case ErrorCode::kMissingAnnouncedPrices: return "MissingAnnouncedPrices";
    case ErrorCode::kUnavoidableVertex: return "UnavoidableVertex";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTooManyPlayers: return "TooManyPlayers";
  }
  return "Unknown";
}

Error::Error(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? std::string("unknown error")
                                             : diagnostics.front().message),
      diagnostics_(std::move(diagnostics)) {
  if (diagnostics_.empty()) {
    diagnostics_.push_back({ErrorCode::kInvalidArgument, what()});
  }
}

}  // namespace choreo
