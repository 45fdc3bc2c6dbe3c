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

// The pullback map w -> P(w(x)) from affine maps A^m -> A^n to polynomials on
// A^m: coefficient maps, fibers, surjectivity scans and fiber growth over
// extensions.

#ifndef HIRANK_FIBERS_HPP_
#define HIRANK_FIBERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hirank/affine.hpp"
#include "hirank/cyclo.hpp"
#include "hirank/poly.hpp"

namespace hirank {

// An affine map w: A^m -> A^n, x -> A x + s, is the vector of n(m+1)
// entries with A_ij at i*(m+1) + j and s_i at i*(m+1) + m.
struct CoefficientMap {
  std::size_t m = 0, n = 0;
  PolyCollection source;
  // Per polynomial: monomials of degree <= d_s in m variables, graded
  // descending, and the coefficient c_lambda(w) of each.
  std::vector<std::vector<Monomial>> lambdas;
  std::vector<std::vector<Poly>> coeffs;

  std::size_t nentries() const { return n * (m + 1); }
  std::size_t total() const;  // sum |Lambda_s|
  std::size_t WVar(std::size_t i, std::size_t j) const { return i * (m + 1) + j; }
  const Field& field() const { return *source.field_ptr(); }
  AffineMap ToAffineMap(std::span<const Elem> w) const;
  // Concatenated coefficients of the pulled-back tuple.
  Vec Evaluate(std::span<const Elem> w) const;
  // The same map over another field of the same characteristic.
  CoefficientMap ChangeField(FieldPtr target) const;
};

CoefficientMap MakeCoefficientMap(const PolyCollection& p, std::size_t m,
                                  const Budget& budget = {});

// Concatenated coefficient vector of a target tuple; each target must have
// degree <= the matching d_s.
Vec TargetVector(const CoefficientMap& cm, const PolyCollection& target);
PolyCollection TargetFromVector(const CoefficientMap& cm, std::span<const Elem> v);

enum class CountRoute { kAuto, kDirect, kSeparable };

// Number of maps w per target vector, bins indexed by PointIndex of the
// target vector. The separable route splits P into variable-disjoint parts
// and convolves their histograms.
std::vector<std::uint64_t> FiberHistogram(const CoefficientMap& cm, CountRoute route,
                                          const Budget& budget = {},
                                          Exec exec = Exec::kParallel);

enum class FiberStrategy { kExhaustive, kRandom };

struct FiberOptions {
  FiberStrategy strategy = FiberStrategy::kExhaustive;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t max_witnesses = 8;
  CountRoute route = CountRoute::kAuto;
  Budget budget;
  Exec exec = Exec::kParallel;
};

struct FiberReport {
  std::string target;
  FiberStrategy strategy = FiberStrategy::kExhaustive;
  std::uint64_t count_k = 0;  // exhaustive: exact count
  std::vector<AffineMap> witnesses;
  // Random strategy.
  std::uint64_t samples = 0, hits = 0, seed = 0;
  double rate = 0, heuristic = 0;
  int expected_dim = 0;
};

FiberReport SolveFiber(const PolyCollection& p, const PolyCollection& target, std::size_t m,
                       const FiberOptions& opts = {});

struct ScanReport {
  std::uint64_t targets = 0;
  std::vector<std::uint64_t> missing;  // target indices, ascending
};

ScanReport SurjectivityScan(const PolyCollection& p, std::size_t m, CountRoute route,
                            const Budget& budget = {}, Exec exec = Exec::kParallel);

struct FiberDimensionReport {
  std::vector<std::uint64_t> counts;  // over k_1 .. k_lmax
  std::vector<double> log_counts;     // log_|k| of counts
  double slope = 0;
  int expected = 0;  // n(m+1) - sum |Lambda_s|
  bool flag = false;
};

FiberDimensionReport FiberDimension(const PolyCollection& p, const PolyCollection& target,
                                    std::size_t m, std::size_t l_max,
                                    const Budget& budget = {}, Exec exec = Exec::kParallel);

// q^|Lambda| times the fiber size, as the exact exponential sum
// sum_alpha sum_w e_q(sum alpha_l (c_l(w) - b_l)).
CycloInt FiberCharacterSum(const CoefficientMap& cm, std::span<const Elem> target,
                           const Budget& budget = {});

}  // namespace hirank

#endif  // HIRANK_FIBERS_HPP_
