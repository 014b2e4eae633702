// Copyright 2026 The Authors.
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

#include "matroidforge/error.h"

namespace matroidforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kDuplicateElements: return "DuplicateElements";
    case ErrorCode::kLabelCollision: return "LabelCollision";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSeriesPairPresent: return "SeriesPairPresent";
    case ErrorCode::kTooManyEdges: return "TooManyEdges";
    case ErrorCode::kTranscriptionInvalid: return "TranscriptionInvalid";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace matroidforge
