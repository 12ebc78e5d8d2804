// Copyright 2026 The c4learn Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace c4learn {

enum class ErrorCode {
  kColumnFull,
  kInvalidBoard,
  kOutOfRange,
  kIllegalInsertion,
  kNoSuchAction,
  kIllegalReplay,
  kInvalidBranch,
  kUnsupportedSkeleton,
  kEmptyDemonstration,
  kBudgetExhausted,
  kStaleQuestion,
  kNoLegalMove,
  kWrongState,
  kUnknownRule,
  kUnknownSession,
  kIllegalColumn,
  kNotYourTurn,
  kParseError,
  kIoError,
};

// Stable identifier used in API error bodies, e.g. "ColumnFull".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace c4learn
