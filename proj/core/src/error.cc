// Copyright 2026 The MSR Ranking Authors.
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

#include "msr/error.h"

namespace msr {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput:
      return "malformed-input";
    case ErrorCode::kMalformedSequence:
      return "malformed-sequence";
    case ErrorCode::kMalformedInstance:
      return "malformed-instance";
    case ErrorCode::kConstraintViolation:
      return "constraint-violation";
    case ErrorCode::kContractViolation:
      return "contract-violation";
    case ErrorCode::kTooLarge:
      return "too-large";
    case ErrorCode::kConfig:
      return "config";
    case ErrorCode::kParse:
      return "parse";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace msr
