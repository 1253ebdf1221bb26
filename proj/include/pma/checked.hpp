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

#include <concepts>
#include <cstdint>
#include <limits>

#include "pma/error.hpp"

// Exact integer arithmetic. Overflow raises ErrorCode::arithmetic_overflow.
namespace pma::checked {

template <std::integral T>
T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::arithmetic_overflow, "addition overflow");
  }
  return r;
}

template <std::integral T>
T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::arithmetic_overflow, "subtraction overflow");
  }
  return r;
}

template <std::integral T>
T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::arithmetic_overflow, "multiplication overflow");
  }
  return r;
}

inline std::int64_t to_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw Error(ErrorCode::arithmetic_overflow, "value exceeds signed 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace pma::checked
