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

// The model hypersurface X_n = {sum_i prod_j x_i^j = 0} in (A^d)^n together
// with its torus T, the block permutation group Gamma = (S_d)^n, the maps
// kappa: L -> X_n and nu: V -> k^n, and torus characters.
//
// Coordinate x_i^j (block i, slot j, both 0-based here) is variable i*d + j.

#ifndef HIRANK_XN_HPP_
#define HIRANK_XN_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hirank/field.hpp"
#include "hirank/poly.hpp"
#include "hirank/variety.hpp"

namespace hirank {

struct XnSpec {
  std::size_t n = 1;
  std::size_t d = 2;
  std::size_t var(std::size_t i, std::size_t j) const { return i * d + j; }
  std::size_t dim() const { return n * d; }
};

Poly MakePn(FieldPtr field, const XnSpec& spec);

// Throws kNotAdmissible unless q > a*d, m | q-1, m > 2a and p > d.
void RequireAdmissible(const FieldSpec& spec, int a, int d, std::uint32_t m);

// One permutation of {0..d-1} per block. (gamma v)_i^j = v_i^{perm_i^{-1}(j)},
// i.e. slot j of v moves to slot perm_i(j).
struct GammaElement {
  std::vector<std::vector<std::uint8_t>> perms;

  GammaElement Inverse() const;
  // (this o other)(v) = this(other(v)).
  GammaElement After(const GammaElement& other) const;
  bool IsIdentity() const;
  std::string ToString() const;
  friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

// theta(t) = prod_{i,j} (t_i^j)^{beta_i^j}; beta is taken modulo the diagonal
// and normalized so that beta_i^0 = 0.
struct Character {
  std::size_t n = 0, d = 0;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> beta;  // n*d entries in [0, m)

  // Exponent of theta on the one-parameter subgroup (u^-1 at slot j, u at
  // slot j') of block i, taken in (-m/2, m/2].
  int Alpha(std::size_t i, std::size_t j, std::size_t j2) const;
  bool IsTrivial() const;
  bool Admissible(int a) const;
  // Admissible with Alpha(i, j, j') >= 0 for all j < j'.
  bool Plus(int a) const;
  // (theta o gamma)(t) = theta(gamma t).
  Character ComposeGamma(const GammaElement& g) const;
  Elem Eval(const Field& f, const SubgroupDelta& delta, std::span<const Elem> t) const;
  std::string ToString() const;
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character& a, const Character& b) {
    return a.beta <=> b.beta;
  }
};

class XnModel {
 public:
  XnModel(FieldPtr field, XnSpec spec, std::uint32_t m, const Budget& budget = {},
          Exec exec = Exec::kParallel);

  const XnSpec& spec() const { return spec_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const SubgroupDelta& delta() const { return delta_; }
  const Poly& pn() const { return pn_; }
  const VarietyPtr& table() const { return table_; }

  // Block (c, 1, ..., 1) for each c; requires sum c = 0.
  Vec Kappa(std::span<const Elem> c) const;
  Vec Nu(std::span<const Elem> v) const;
  // Points of L = {sum c = 0}: c_1..c_{n-1} free in index order.
  std::vector<Vec> LPoints() const;
  Vec LPoint(std::span<const Elem> free) const;

  // Torus elements are vectors in Delta^{nd} with product 1 on each block.
  bool IsTorusElement(std::span<const Elem> t) const;
  std::uint64_t TorusSize() const;
  // Exponent layout: k[i*(d-1) + (j-1)] for slots j >= 1 of block i.
  Vec TorusFromExponents(std::span<const std::uint32_t> k) const;
  std::vector<Vec> TorusElements() const;
  Vec TorusAct(std::span<const Elem> t, std::span<const Elem> v) const;

  std::vector<GammaElement> GammaElements() const;
  GammaElement GammaIdentity() const;
  Vec GammaAct(const GammaElement& g, std::span<const Elem> v) const;
  // The polynomial v -> P(g v).
  Poly ComposeGamma(const Poly& p, const GammaElement& g) const;

  // x in X^0: slots 1..d-1 of every block lie in Delta.
  bool InX0(std::span<const Elem> v) const;
  // The torus element t with x = t kappa(nu(x)), for x in X^0.
  std::optional<Vec> TorusPart(std::span<const Elem> v) const;

  // All characters of T (m^{(d-1)n} of them) in exponent order.
  std::vector<Character> Characters() const;
  Character CharacterFromIndex(std::uint64_t idx) const;
  std::uint64_t CharacterIndex(const Character& c) const;
  // Some gamma with theta o gamma in the plus class, searched over Gamma.
  std::optional<GammaElement> FindPlusGamma(const Character& theta, int a) const;

 private:
  FieldPtr field_;
  XnSpec spec_;
  SubgroupDelta delta_;
  Poly pn_;
  VarietyPtr table_;
};

}  // namespace hirank

#endif  // HIRANK_XN_HPP_
