// Copyright 2026 The Weightscape Authors
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

namespace weightscape {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  WeightOutOfRange,
  DegreeNotPositive,
  BoundarySumMismatch,
  OnWall,
  LimitExceeded,
  NotAStable,
  WeightsNotDominated,
  ResidualDegreeNotPositive,
  UnequalWeightsInBlock,
  DomainViolation,
  AtypicalLinearization,
  ParseError,
  Overflow,
  NonterminatingContraction,
  Internal,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::DegreeNotPositive: return "DegreeNotPositive";
    case ErrorKind::BoundarySumMismatch: return "BoundarySumMismatch";
    case ErrorKind::OnWall: return "OnWall";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NotAStable: return "NotAStable";
    case ErrorKind::WeightsNotDominated: return "WeightsNotDominated";
    case ErrorKind::ResidualDegreeNotPositive: return "ResidualDegreeNotPositive";
    case ErrorKind::UnequalWeightsInBlock: return "UnequalWeightsInBlock";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::AtypicalLinearization: return "AtypicalLinearization";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NonterminatingContraction: return "NonterminatingContraction";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure in the library surfaces as this exception. The kind is
/// stable and machine-readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace weightscape
