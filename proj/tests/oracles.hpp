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

// Brute-force reference computations that share no code with the library.
// Prime fields use plain ints mod p; the small extension fields carry their
// own multiplication tables.

#ifndef HIRANK_TESTS_ORACLES_HPP_
#define HIRANK_TESTS_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Point = std::vector<int>;
using Eval = std::function<int(const Point&)>;  // value mod p

inline int Mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

std::vector<Point> AllPoints(int p, int n);
std::vector<Point> Zeros(int p, int n, const Eval& f);
int RankModP(std::vector<std::vector<int>> rows, int p);

// Lines {x + t y} fully inside the point set, one entry per line. Lines are
// returned as their q points ordered by t.
std::vector<std::vector<Point>> LinesIn(int p, int n, const std::vector<Point>& pts);

// Dimension of the functions on pts whose restriction to every line inside
// pts has degree <= a, and of the restrictions of polynomials of degree <= a.
struct SpaceDims {
  int points = 0;
  int dim_weak_lines = 0;
  int dim_poly = 0;
};
SpaceDims WeakDims(int p, int n, const std::vector<Point>& pts, int a);

// Quadratics are maps from a sorted list of 1-based variables ({i, j}, {i} or
// {}) to a coefficient. Whether one is a product of two affine forms:
bool QuadraticIsProduct(int p, int n, const std::map<std::vector<int>, int>& coeffs);

// Histogram over all affine maps w: F_p -> F_p^n, x -> a x + b, of the
// coefficient vector (c2, c1, c0) of P(w(x)) for a quadratic P given by its
// coefficients as in QuadraticIsProduct. Bin index c2*p^2 + c1*p + c0.
std::vector<std::uint64_t> QuadraticFiberHistogram(int p, int n,
                                                   const std::map<std::vector<int>, int>& coeffs);

// Number of affine maps F_q -> F_q^(2k) pulling x1x2+...+x_{2k-1}x_{2k} back to
// c2 x^2 + c1 x + c0 with c's in the prime field, over q = p^l, l <= 2.
std::uint64_t SplitQuadraticFiberCount(int p, int l, int k, int c2, int c1, int c0);

// Lines inside the bucket {x : x[0] = b} of pts whose direction has y[0] = 0,
// and how many of them lie in no plane inside pts that meets {x[0] = 0}.
struct DeficiencyCount {
  std::uint64_t lines = 0;
  std::uint64_t deficient = 0;
};
DeficiencyCount LineDeficiency(int p, int n, const std::vector<Point>& pts, int b);

}  // namespace oracle

#endif  // HIRANK_TESTS_ORACLES_HPP_
