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

#ifndef MATROIDFORGE_ERROR_H_
#define MATROIDFORGE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace matroidforge {

enum class ErrorCode {
  kGroundSetTooLarge,
  kUnknownLabel,
  kDuplicateElements,
  kLabelCollision,
  kInvalidArgument,
  kSeriesPairPresent,
  kTooManyEdges,
  kTranscriptionInvalid,
  kCapExceeded,
  kParseError,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status.
class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matroidforge

#endif  // MATROIDFORGE_ERROR_H_
