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

// Bias, Gowers norms, analytic rank, Schmidt rank and the singular-locus
// rank bound.

#ifndef HIRANK_RANK_HPP_
#define HIRANK_RANK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hirank/cyclo.hpp"
#include "hirank/error.hpp"
#include "hirank/poly.hpp"

namespace hirank {

// |E_v e_q(P(v))|^2 = abs2 / denominator.
struct BiasResult {
  CycloInt abs2;
  BigInt denominator;
  double value = 0;  // |E_v e_q(P(v))|

  std::optional<Rational> SquaredRational() const;
};

BiasResult Bias(const Poly& p, const Budget& budget = {},
                Exec exec = Exec::kParallel);

// Raw sum over V of e_q(P(v)).
CycloSum CharacterSum(const Poly& p, const Budget& budget = {},
                      Exec exec = Exec::kParallel);

enum class GowersMode { kExact, kSampled };

struct GowersOptions {
  GowersMode mode = GowersMode::kExact;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

struct GowersResult {
  int d = 0;
  GowersMode mode = GowersMode::kExact;
  // Exact mode: value_pow = numerator / denominator.
  CycloInt numerator;
  BigInt denominator;
  std::optional<Rational> exact;  // set when the value is rational
  double value_pow = 0;
  // Sampled mode.
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

GowersResult GowersNorm(const Poly& p, int d, const GowersOptions& opts = {},
                        const Budget& budget = {}, Exec exec = Exec::kParallel);

// -log_q(value_pow) / 2^d; +inf when value_pow is zero.
double AnalyticRank(const GowersResult& g, std::uint32_t q);

struct RankValue {
  enum class Kind { kExact, kAbove, kInfinite };
  Kind kind = Kind::kExact;
  int value = 0;  // exact value, or the cutoff for kAbove

  static RankValue Exact(int v) { return {Kind::kExact, v}; }
  static RankValue Above(int cutoff) { return {Kind::kAbove, cutoff}; }
  static RankValue Infinite() { return {Kind::kInfinite, 0}; }
  std::string ToString() const;
  friend bool operator==(const RankValue&, const RankValue&) = default;
};

struct SchmidtOptions {
  int cutoff = 4;
  // Degree D that the factors must stay below; -1 means deg P.
  int target_degree = -1;
  Budget budget;
  Exec exec = Exec::kParallel;
};

RankValue SchmidtRankExact(const Poly& p, const SchmidtOptions& opts = {});

// A witness decomposition P = sum Q_i R_i of minimal length, when one exists
// within the cutoff.
struct SchmidtWitness {
  std::vector<Poly> q, r;
};
std::optional<SchmidtWitness> SchmidtDecompose(const Poly& p, int r,
                                               const SchmidtOptions& opts = {});

RankValue CollectionRank(const PolyCollection& c, const SchmidtOptions& opts = {});

struct SingularBoundReport {
  std::uint64_t count_x_k = 0, count_x_k2 = 0;
  std::uint64_t count_sing_k = 0, count_sing_k2 = 0;
  double slope_x = 0, slope_sing = 0;
  int dim_x = 0, dim_sing = 0;
  bool slope_flag = false;  // a slope was more than 0.2 from its rounding
  bool degenerate = false;  // X_sing empty over both fields
  int codim = 0;            // nvars - dim X_sing
  Rational bound;           // codim / (2 deg P)
};

SingularBoundReport SingularRankBound(const Poly& p, const Budget& budget = {},
                                      Exec exec = Exec::kParallel);

// Number of points of {P_1 = ... = P_c = 0} over the field of the
// polynomials, by exhaustive enumeration.
std::uint64_t CountPoints(const PolyCollection& c, const Budget& budget = {},
                          Exec exec = Exec::kParallel);

}  // namespace hirank

#endif  // HIRANK_RANK_HPP_
