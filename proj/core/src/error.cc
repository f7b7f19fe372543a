// Copyright 2026 The foldtree Authors.
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

#include "foldtree/error.h"

namespace foldtree {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadInput:
      return "BadInput";
    case ErrorCode::kBadParameter:
      return "BadParameter";
    case ErrorCode::kNonSimple:
      return "NonSimple";
    case ErrorCode::kDegenerateEdge:
      return "DegenerateEdge";
    case ErrorCode::kClockwiseInput:
      return "ClockwiseInput";
    case ErrorCode::kAngleClosureViolation:
      return "AngleClosureViolation";
    case ErrorCode::kInexactPolygon:
      return "InexactPolygon";
    case ErrorCode::kIncompleteGluing:
      return "IncompleteGluing";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kNotATree:
      return "NotATree";
    case ErrorCode::kNonSimpleUnfolding:
      return "NonSimpleUnfolding";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace foldtree
