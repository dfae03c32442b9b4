// Copyright 2026 The cayrep Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace cayrep {

enum class ErrorCode {
  kMalformedInput,
  kPreconditionViolation,
  kNotInImage,
  kUnsupportedShape,
  kDivisibility,
  kFeasibilityViolation,
  kMalformedSection,
  kNotQuasinormal,
  kBudgetExceeded,
};

const char* error_code_name(ErrorCode code);

// All recoverable failures in the library are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "malformed input";
    case ErrorCode::kPreconditionViolation: return "precondition violation";
    case ErrorCode::kNotInImage: return "not in image";
    case ErrorCode::kUnsupportedShape: return "unsupported shape";
    case ErrorCode::kDivisibility: return "divisibility";
    case ErrorCode::kFeasibilityViolation: return "feasibility violation";
    case ErrorCode::kMalformedSection: return "malformed section";
    case ErrorCode::kNotQuasinormal: return "not quasinormal";
    case ErrorCode::kBudgetExceeded: return "budget exceeded";
  }
  return "error";
}

}  // namespace cayrep
