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

#include "hirank/cyclo.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>

#include "hirank/error.hpp"

namespace hirank {

namespace {
using Float = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<90>>;
}

std::string RationalToString(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double RationalToDouble(const Rational& r) { return r.convert_to<double>(); }

void CycloSum::Merge(const CycloSum& other) {
  Require(other.p() == p(), ErrorCode::kDimensionMismatch,
          "merging CycloSums of different characteristic");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

std::complex<double> CycloSum::Approx() const {
  return CycloInt::FromSum(*this).Approx();
}

CycloInt CycloInt::FromSum(const CycloSum& s) {
  CycloInt r(s.p());
  for (std::uint32_t i = 0; i < s.p(); ++i) r.c_[i] = s.counts()[i];
  r.Canonicalize();
  return r;
}

CycloInt CycloInt::FromInteger(std::uint32_t p, const BigInt& n) {
  CycloInt r(p);
  r.c_[0] = n;
  return r;
}

void CycloInt::Canonicalize() {
  const BigInt last = c_.back();
  if (last == 0) return;
  for (auto& x : c_) x -= last;
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
  CycloInt r(p());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  r.Canonicalize();
  return r;
}

CycloInt CycloInt::operator-(const CycloInt& o) const {
  CycloInt r(p());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  r.Canonicalize();
  return r;
}

CycloInt CycloInt::operator*(const CycloInt& o) const {
  const std::size_t n = c_.size();
  CycloInt r(p());
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[(i + j) % n] += c_[i] * o.c_[j];
    }
  }
  r.Canonicalize();
  return r;
}

CycloInt CycloInt::Scaled(const BigInt& k) const {
  CycloInt r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

CycloInt CycloInt::Conj() const {
  const std::size_t n = c_.size();
  CycloInt r(p());
  for (std::size_t i = 0; i < n; ++i) r.c_[(n - i) % n] = c_[i];
  r.Canonicalize();
  return r;
}

bool CycloInt::IsZero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

std::optional<BigInt> CycloInt::AsInteger() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  return c_[0];
}

long double CycloInt::RealApprox() const {
  if (IsZero()) return 0;
  const Float two_pi = 2 * boost::math::constants::pi<Float>();
  Float acc = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    acc += Float(c_[k]) * cos(two_pi * k / c_.size());
  }
  return acc.convert_to<long double>();
}

std::complex<double> CycloInt::Approx() const {
  const Float two_pi = 2 * boost::math::constants::pi<Float>();
  Float re = 0, im = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    re += Float(c_[k]) * cos(two_pi * k / c_.size());
    im += Float(c_[k]) * sin(two_pi * k / c_.size());
  }
  return {re.convert_to<double>(), im.convert_to<double>()};
}

int CycloInt::Sign() const {
  if (IsZero()) return 0;
  Require(IsReal(), ErrorCode::kInvalidArgument, "sign of a non-real element");
  const Float two_pi = 2 * boost::math::constants::pi<Float>();
  Float acc = 0, scale = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Float ck(c_[k]);
    acc += ck * cos(two_pi * k / c_.size());
    scale += abs(ck);
  }
  // A nonzero algebraic integer cannot be this close to zero at our sizes.
  Require(abs(acc) > scale * Float("1e-70"), ErrorCode::kInvalidArgument,
          "sign undecidable at working precision");
  return acc > 0 ? 1 : -1;
}

std::string CycloInt::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].str();
  }
  return out + "]";
}

CycloInt CycloAbs2(const CycloSum& s) {
  CycloInt z = CycloInt::FromSum(s);
  return z * z.Conj();
}

}  // namespace hirank
