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

// Weakly polynomial functions: degree on flats, the spaces P_a^w(X) and
// P_a(X), and the torus decomposition on X_n.

#ifndef HIRANK_WEAKPOLY_HPP_
#define HIRANK_WEAKPOLY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "hirank/flats.hpp"
#include "hirank/variety.hpp"
#include "hirank/xn.hpp"

namespace hirank {

// Total degree of the reduced interpolant of f on the flat; -1 when f is
// zero there.
int DegreeOnFlat(const FnOnX& f, const AffineFlat& flat);

enum class WeakMode { kLines, kPlanes, kKrSubspaces };

// Flat dimension for the subspace criterion: ceil((a+1)/(q - q/p)).
std::size_t KaufmanRonDim(const Field& f, int a);

struct WeakTestResult {
  bool ok = true;
  std::size_t flats_checked = 0;
  std::optional<AffineFlat> violation;
  int violation_degree = -1;
};

WeakTestResult IsWeaklyPolynomial(const FnOnX& f, int a, const FlatCatalog& cat);
WeakTestResult IsWeaklyPolynomial(const FnOnX& f, int a, WeakMode mode,
                                  const Budget& budget = {}, Exec exec = Exec::kParallel);

// Echelonized basis of a subspace of k[X], vectors indexed by point ordinal.
struct FnSpace {
  std::vector<Vec> basis;
  std::size_t dim() const { return basis.size(); }
};

// Null space of the constraints "degree <= a on each flat", using lines and
// planes.
FnSpace WeakpolySpace(const VarietyTable& x, int a, const Budget& budget = {},
                      Exec exec = Exec::kParallel);
FnSpace WeakpolySpace(const VarietyTable& x, int a, const std::vector<const FlatCatalog*>& cats,
                      const Budget& budget = {});
// Column space of the evaluation map on monomials of degree <= a.
FnSpace PolyRestrictionSpace(const VarietyTable& x, int a, const Budget& budget = {});

bool SpaceContains(const FieldPtr& f, const FnSpace& s, const Vec& v);

struct QuotientReport {
  std::size_t dim_weak = 0;
  std::size_t dim_poly = 0;
  std::size_t quotient = 0;
};
QuotientReport QuotientDim(const VarietyTable& x, int a, const Budget& budget = {},
                           Exec exec = Exec::kParallel);

// Whether P_a^w(X)/P_a(X) -> P_a^w(X cap W)/P_a(X cap W) is injective, W cut
// out by the given affine equations.
bool RestrictionInjectivity(const VarietyTable& x, const std::vector<Poly>& w, int a,
                            const Budget& budget = {}, Exec exec = Exec::kParallel);

// f = sum_theta f^theta with f^theta(t x) = theta(t) f^theta(x). Only nonzero
// components are returned, in character index order.
std::vector<std::pair<Character, FnOnX>> ThetaDecompose(const XnModel& model, const FnOnX& f,
                                                        Exec exec = Exec::kParallel);

}  // namespace hirank

#endif  // HIRANK_WEAKPOLY_HPP_
