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

// Finite fields F_{p^l} with table-driven arithmetic.
//
// An element is stored as its index: the base-p number whose digits are the
// coefficients of the element as a polynomial in the generator t, lowest
// degree first. So for l = 1 the index is the residue itself, and the prime
// subfield is exactly the indices 0..p-1.

#ifndef HIRANK_FIELD_HPP_
#define HIRANK_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hirank/error.hpp"

namespace hirank {

struct Elem {
  std::uint32_t v = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t value) : v(value) {}
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t l = 1;
  // Monic modulus, coefficients lowest degree first, length l + 1. For
  // l = 1 this is t (so the generator is 0 and the field is F_p).
  std::vector<std::uint32_t> modulus;

  std::uint32_t q() const;
  std::string ToString() const;  // "p" or "p^l"
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Parses "p" or "p^l". The modulus is the least irreducible one.
FieldSpec ParseFieldSpec(const std::string& text);
FieldSpec MakeFieldSpec(std::uint32_t p, std::uint32_t l);

bool IsPrime(std::uint64_t n);

// Lexicographically least monic irreducible of degree l over F_p, comparing
// coefficient vectors from the highest non-leading coefficient down.
std::vector<std::uint32_t> LeastIrreducible(std::uint32_t p, std::uint32_t l);
bool IsIrreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 2048;

  static std::shared_ptr<const Field> Make(const FieldSpec& spec);
  static std::shared_ptr<const Field> Make(std::uint32_t p,
                                           std::uint32_t l = 1);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t l() const { return spec_.l; }
  std::uint32_t q() const { return q_; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem FromInt(long long n) const;

  Elem add(Elem a, Elem b) const { return Elem(add_[a.v * q_ + b.v]); }
  Elem mul(Elem a, Elem b) const { return Elem(mul_[a.v * q_ + b.v]); }
  Elem neg(Elem a) const { return Elem(neg_[a.v]); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  std::uint32_t trace(Elem a) const { return trace_[a.v]; }

  bool InPrimeField(Elem a) const { return a.v < spec_.p; }
  std::vector<std::uint32_t> Coeffs(Elem a) const;
  Elem FromCoeffs(std::span<const std::uint32_t> coeffs) const;

  // Least index g with multiplicative order q - 1.
  Elem primitive_root() const { return primitive_root_; }
  // Discrete log base primitive_root(); a must be nonzero.
  std::uint32_t log(Elem a) const { return log_[a.v]; }
  Elem exp(std::uint64_t k) const { return Elem(exp_[k % (q_ - 1)]); }

  std::string ToString(Elem a) const;

  // Raw tables, row-major q x q. Hot loops index these directly.
  const std::uint16_t* add_table() const { return add_.data(); }
  const std::uint16_t* mul_table() const { return mul_.data(); }
  const std::uint16_t* neg_table() const { return neg_.data(); }
  const std::uint8_t* trace_table() const { return trace_.data(); }

  explicit Field(const FieldSpec& spec);

 private:
  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_, exp_, log_;
  std::vector<std::uint8_t> trace_;
  Elem primitive_root_;
};

using FieldPtr = std::shared_ptr<const Field>;

// The unique subgroup of k* of order m.
struct SubgroupDelta {
  std::uint32_t m = 1;
  Elem generator;
  std::vector<Elem> elements;  // generator^0 .. generator^(m-1)
  // For each field index, the exponent k with generator^k = x, or -1.
  std::vector<int> log;

  bool Contains(Elem x) const { return log[x.v] >= 0; }
};

SubgroupDelta FindDelta(const Field& field, std::uint32_t m);

}  // namespace hirank

#endif  // HIRANK_FIELD_HPP_
