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

// Sparse multivariate polynomials over F_q.

#ifndef HIRANK_POLY_HPP_
#define HIRANK_POLY_HPP_

#include <climits>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hirank/field.hpp"
#include "hirank/linalg.hpp"

namespace hirank {

using Monomial = std::vector<std::uint16_t>;

int TotalDegree(const Monomial& m);

// Graded order: higher total degree first, then lexicographic with
// x1 > x2 > ... . Terms are stored and rendered in this order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials in n variables of total degree <= deg (and, if cap > 0,
// every exponent < cap), in GrlexGreater order.
std::vector<Monomial> MonomialsUpTo(std::size_t n, int deg, int cap = 0);

class Poly {
 public:
  static constexpr int kUnbounded = INT_MAX;
  using Terms = std::map<Monomial, Elem, GrlexGreater>;

  Poly(FieldPtr field, std::size_t nvars, int bound = kUnbounded);

  static Poly Constant(FieldPtr field, std::size_t nvars, Elem c);
  static Poly Variable(FieldPtr field, std::size_t nvars, std::size_t i);
  static Poly Monom(FieldPtr field, Monomial m, Elem c = Elem(1));

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  std::size_t nvars() const { return nvars_; }
  int bound() const { return bound_; }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool IsZero() const { return terms_.empty(); }
  bool IsHomogeneous() const;
  const Terms& terms() const { return terms_; }
  Elem Coeff(const Monomial& m) const;

  // Adds c * m to the polynomial.
  void AddTerm(const Monomial& m, Elem c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly Scaled(Elem c) const;
  Poly Pow(unsigned k) const;

  Elem Eval(std::span<const Elem> v) const;

  // Nonzero homogeneous parts in increasing degree.
  std::vector<Poly> HomogeneousComponents() const;
  Poly HomogeneousPart(int deg) const;
  Poly Partial(std::size_t var) const;

  // Substitutes subs[i] for x_i. All subs share one ring.
  Poly Compose(const std::vector<Poly>& subs) const;
  // Same function on F_q^n with every exponent below q.
  Poly ReducedAsFunction() const;
  Poly WithBound(int bound) const;
  Poly WithNvars(std::size_t nvars) const;
  // Re-reads the coefficients in another field of the same characteristic.
  // Every coefficient must lie in the prime field.
  Poly ChangeField(FieldPtr target) const;

  bool operator==(const Poly& o) const;

 private:
  void CheckCompatible(const Poly& o) const;

  FieldPtr field_;
  std::size_t nvars_;
  int bound_;
  Terms terms_;
};

// Flattened polynomial for tight evaluation loops.
class PolyEvaluator {
 public:
  explicit PolyEvaluator(const Poly& p);
  Elem operator()(const Elem* x) const;
  std::size_t nvars() const { return nvars_; }

 private:
  struct Factor {
    std::uint32_t var;
    std::uint32_t exp;
  };
  FieldPtr field_;
  std::size_t nvars_;
  std::vector<Elem> coeffs_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Factor> factors_;
};

std::string RenderPoly(const Poly& p);
// nvars = 0 infers the count from the largest variable index.
Poly ParsePoly(const std::string& text, FieldPtr field, std::size_t nvars = 0,
               int bound = Poly::kUnbounded);

struct PolyCollection {
  std::vector<Poly> polys;

  std::size_t size() const { return polys.size(); }
  std::size_t nvars() const;
  const FieldPtr& field_ptr() const { return polys.front().field_ptr(); }
  std::vector<int> degrees() const;
  void Validate() const;
  std::string CanonicalText() const;  // "P1; P2; ..."
};

PolyCollection ParseCollection(const std::string& text, FieldPtr field,
                               std::size_t nvars = 0);

// (h_1, ..., h_d)_P at x: sum over w in {0,1}^d of (-1)^|w| P(x + w.h).
Elem DerivativeForm(const Poly& p, const std::vector<Vec>& hs,
                    std::span<const Elem> x);

// Row e holds the weights taking the values of a univariate function at
// 0..q-1 (by index) to its coefficient of t^e.
Matrix InverseVandermonde(const Field& f);

// Interpolates a function on F_q^n (values indexed by mixed-radix point index,
// first coordinate most significant) as a reduced polynomial.
Poly Interpolate(FieldPtr field, std::size_t nvars, std::span<const Elem> values);

}  // namespace hirank

#endif  // HIRANK_POLY_HPP_
