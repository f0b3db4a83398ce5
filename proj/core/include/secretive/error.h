// Copyright 2026 The Secretive Authors.
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

#ifndef SECRETIVE_ERROR_H_
#define SECRETIVE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace secretive {

enum class ErrorCode {
  kInvalidInstance,
  kInvalidSubset,
  kInvalidBackupMap,
  kDimensionMismatch,
  kInfeasible,
  kUnbounded,
  kInternalInfeasibility,
  kNoDespisedRoom,
  kNoDespisedBundle,
  kNonEf1Matching,
  kOutOfRange,
  kInvalidLambda,
  kInvalidEpsilon,
  kTooLarge,
  kSubroutineBudgetExceeded,
  kInvalidOracleKind,
  kPreconditionViolated,
  kInternal,
};

// Stable CamelCase name, e.g. "TooLarge". The CLI prints these.
std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace secretive

#endif  // SECRETIVE_ERROR_H_
