// Copyright 2026 The SANATE Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sanate {

enum class ErrorCode {
  kIoFailure,
  kMalformedLine,
  kMalformedRow,
  kUnknownPolarityLabel,
  kMalformedRecord,
  kDuplicateId,
  kMissingGoldLabel,
  kDegenerateLength,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kUnknownPolarityLabel: return "UnknownPolarityLabel";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kMissingGoldLabel: return "MissingGoldLabel";
    case ErrorCode::kDegenerateLength: return "DegenerateLength";
  }
  return "Unknown";
}

// Every failure raised by the library. `line()` is the 1-based line (or row)
// number for file-format errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace sanate
