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

// Exact exponential sums. A sum of p-th roots of unity is accumulated as a
// histogram over trace values (CycloSum) and manipulated as an element of
// Z[zeta_p] (CycloInt).

#ifndef HIRANK_CYCLO_HPP_
#define HIRANK_CYCLO_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hirank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string RationalToString(const Rational& r);
double RationalToDouble(const Rational& r);

class CycloSum {
 public:
  explicit CycloSum(std::uint32_t p = 2) : counts_(p, 0) {}

  void Add(std::uint32_t trace_value, std::uint64_t times = 1) {
    counts_[trace_value] += times;
    total_ += times;
  }
  void Merge(const CycloSum& other);

  std::uint32_t p() const { return static_cast<std::uint32_t>(counts_.size()); }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  std::complex<double> Approx() const;

  friend bool operator==(const CycloSum&, const CycloSum&) = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Element of Z[zeta_p] in canonical form: coefficients of 1..zeta^(p-1)
// reduced modulo 1 + zeta + ... + zeta^(p-1) so that the last one is zero.
class CycloInt {
 public:
  explicit CycloInt(std::uint32_t p = 2) : c_(p) {}
  static CycloInt FromSum(const CycloSum& s);
  static CycloInt FromInteger(std::uint32_t p, const BigInt& n);

  std::uint32_t p() const { return static_cast<std::uint32_t>(c_.size()); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  CycloInt operator+(const CycloInt& o) const;
  CycloInt operator-(const CycloInt& o) const;
  CycloInt operator*(const CycloInt& o) const;
  CycloInt Scaled(const BigInt& k) const;
  CycloInt Conj() const;

  bool IsZero() const;
  bool IsReal() const { return Conj() == *this; }
  // The integer value, when the element lies in Z.
  std::optional<BigInt> AsInteger() const;

  // Real part to about 90 significant digits; exact zero for IsZero().
  long double RealApprox() const;
  std::complex<double> Approx() const;
  // Sign of a real element, decided exactly when the element is zero and
  // from a high-precision evaluation otherwise.
  int Sign() const;

  std::string ToString() const;
  friend bool operator==(const CycloInt&, const CycloInt&) = default;

 private:
  void Canonicalize();
  std::vector<BigInt> c_;
};

// |sum|^2 as an exact element of Z[zeta_p + zeta_p^-1].
CycloInt CycloAbs2(const CycloSum& s);

}  // namespace hirank

#endif  // HIRANK_CYCLO_HPP_
