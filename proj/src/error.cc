// Copyright 2026 The czdg Authors.
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

#include "czdg/error.h"

namespace czdg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNonOrientableRelation: return "NonOrientableRelation";
    case ErrorCode::kNonTerminating: return "NonTerminating";
    case ErrorCode::kInconsistentPresentation: return "InconsistentPresentation";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kNonPrimePowerGF: return "NonPrimePowerGF";
    case ErrorCode::kEmptyGraphUndefined: return "EmptyGraphUndefined";
    case ErrorCode::kUndefinedForEmptyGraph: return "UndefinedForEmptyGraph";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kResourceCap: return "ResourceCap";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace czdg
