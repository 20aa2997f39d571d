// Copyright 2026 The longspoof Authors
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

#include "longspoof/errors.hpp"

namespace longspoof {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotWav: return "NotWav";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kNoActivity: return "NoActivity";
    case ErrorCode::kEmptyCategory: return "EmptyCategory";
    case ErrorCode::kSilentNoise: return "SilentNoise";
    case ErrorCode::kInsufficientSources: return "InsufficientSources";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kDuplicateTrial: return "DuplicateTrial";
    case ErrorCode::kMissingTrial: return "MissingTrial";
    case ErrorCode::kUnknownTrial: return "UnknownTrial";
    case ErrorCode::kOneClassOnly: return "OneClassOnly";
    case ErrorCode::kConfigHashMismatch: return "ConfigHashMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace longspoof
