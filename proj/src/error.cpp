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

#include "c4learn/error.hpp"

namespace c4learn {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kColumnFull: return "ColumnFull";
    case ErrorCode::kInvalidBoard: return "InvalidBoard";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kIllegalInsertion: return "IllegalInsertion";
    case ErrorCode::kNoSuchAction: return "NoSuchAction";
    case ErrorCode::kIllegalReplay: return "IllegalReplay";
    case ErrorCode::kInvalidBranch: return "InvalidBranch";
    case ErrorCode::kUnsupportedSkeleton: return "UnsupportedSkeleton";
    case ErrorCode::kEmptyDemonstration: return "EmptyDemonstration";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kStaleQuestion: return "StaleQuestion";
    case ErrorCode::kNoLegalMove: return "NoLegalMove";
    case ErrorCode::kWrongState: return "WrongState";
    case ErrorCode::kUnknownRule: return "UnknownRule";
    case ErrorCode::kUnknownSession: return "UnknownSession";
    case ErrorCode::kIllegalColumn: return "IllegalColumn";
    case ErrorCode::kNotYourTurn: return "NotYourTurn";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace c4learn
