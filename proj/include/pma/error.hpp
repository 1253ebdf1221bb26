// Copyright 2026 The pmasched Authors
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
#include <string_view>

namespace pma {

enum class ErrorCode {
  invalid_instance,
  infeasible_job,
  invalid_permutation,
  invalid_schedule,
  arithmetic_overflow,
  too_large,
  not_canonical,
  odd_sum,
  invalid_partition,
  invalid_argument,
  certificate_violated,
  not_within_threshold,
  infeasible_schedule,
  parse_error,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_instance: return "InvalidInstance";
    case ErrorCode::infeasible_job: return "InfeasibleJob";
    case ErrorCode::invalid_permutation: return "InvalidPermutation";
    case ErrorCode::invalid_schedule: return "InvalidSchedule";
    case ErrorCode::arithmetic_overflow: return "ArithmeticOverflow";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::not_canonical: return "NotCanonical";
    case ErrorCode::odd_sum: return "OddSum";
    case ErrorCode::invalid_partition: return "InvalidPartition";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::certificate_violated: return "CertificateViolated";
    case ErrorCode::not_within_threshold: return "NotWithinThreshold";
    case ErrorCode::infeasible_schedule: return "InfeasibleSchedule";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pma
