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

#include "secretive/error.h"

namespace secretive {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance:
      return "InvalidInstance";
    case ErrorCode::kInvalidSubset:
      return "InvalidSubset";
    case ErrorCode::kInvalidBackupMap:
      return "InvalidBackupMap";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kInfeasible:
      return "Infeasible";
    case ErrorCode::kUnbounded:
      return "Unbounded";
    case ErrorCode::kInternalInfeasibility:
      return "InternalInfeasibility";
    case ErrorCode::kNoDespisedRoom:
      return "NoDespisedRoom";
    case ErrorCode::kNoDespisedBundle:
      return "NoDespisedBundle";
    case ErrorCode::kNonEf1Matching:
      return "NonEf1Matching";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kInvalidLambda:
      return "InvalidLambda";
    case ErrorCode::kInvalidEpsilon:
      return "InvalidEpsilon";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kSubroutineBudgetExceeded:
      return "SubroutineBudgetExceeded";
    case ErrorCode::kInvalidOracleKind:
      return "InvalidOracleKind";
    case ErrorCode::kPreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

}  // namespace secretive
