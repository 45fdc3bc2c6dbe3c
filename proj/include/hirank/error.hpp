// Copyright 2026 The hirank Authors.
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

#ifndef HIRANK_ERROR_HPP_
#define HIRANK_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hirank {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kNonDivisor,
  kNotAdmissible,
  kSyntaxError,
  kDegreeExceeded,
  kBudgetExceeded,
  kDegenerateCount,
  kNotInL,
  kEmptyCatalog,
  kFlatNotInX,
  kNotWeaklyPolynomial,
  kNonAdmissibleComponentNonzero,
  kNoPlusGamma,
  kVanishingCheckFailed,
  kSliceBudgetExceeded,
  kResidualNotLowerDegree,
  kTooManySlices,
  kEmptyFiber,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for codes that signal a falsified mathematical property rather than
// bad input or resource limits.
bool IsPropertyFailure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kSyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) Fail(code, what);
}

// Work limits. Every exhaustive loop checks its size against one of these
// before starting.
struct Budget {
  std::uint64_t max_enumeration = std::uint64_t{1} << 31;
  std::uint64_t max_gowers = std::uint64_t{1} << 28;
  std::uint64_t max_search = std::uint64_t{1} << 30;
  std::uint64_t max_matrix_entries = std::uint64_t{1} << 28;

  void Check(std::uint64_t size, std::uint64_t limit,
             const std::string& what) const {
    if (size > limit) {
      Fail(ErrorCode::kBudgetExceeded,
           what + ": size " + std::to_string(size) + " exceeds budget " +
               std::to_string(limit));
    }
  }
};

// Saturating integer power, used for budget arithmetic.
inline std::uint64_t SatPow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

enum class Exec { kParallel, kSerial };

}  // namespace hirank

#endif  // HIRANK_ERROR_HPP_
