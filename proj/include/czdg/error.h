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

#ifndef CZDG_ERROR_H_
#define CZDG_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace czdg {

enum class ErrorCode {
  kOrderOutOfRange,
  kNotPrime,
  kNonOrientableRelation,
  kNonTerminating,
  kInconsistentPresentation,
  kSyntaxError,
  kUnknownVariable,
  kNonPrimePowerGF,
  kEmptyGraphUndefined,
  kUndefinedForEmptyGraph,
  kDisconnected,
  kTooLarge,
  kInfeasible,
  kResourceCap,
  kInvalidArgument,
  kMalformedInput,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// Every failure the library reports is an Error carrying a code, so callers
// (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the ring-spec parser; `offset` is the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& message)
      : Error(code, message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace czdg

#endif  // CZDG_ERROR_H_
