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

// Extension engines: given f on X, find a polynomial of degree <= a on V
// restricting to f.

#ifndef HIRANK_EXTEND_HPP_
#define HIRANK_EXTEND_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hirank/variety.hpp"
#include "hirank/weakpoly.hpp"
#include "hirank/xn.hpp"

namespace hirank {

enum class ExtensionStatus { kExtended, kNoExtension, kInconclusive };
std::string_view StatusName(ExtensionStatus s);

// One torus component in the constructive engine.
struct ThetaStep {
  Character theta;
  GammaElement gamma;
  Poly h;  // on L, in the free coordinates c_1..c_{n-1}
  Poly p;  // the component's extension on V
};

// One slice in the inductive engine.
struct SliceStep {
  std::size_t level = 0;
  Elem b;
  std::size_t matched = 0;  // |S| before this slice
  int q_degree = -1;        // degree of the correction, -1 if none
};

struct ExtensionResult {
  ExtensionStatus status = ExtensionStatus::kInconclusive;
  std::string engine;
  std::optional<Poly> poly;
  // NoExtension: lambda on the points of X with sum_x lambda(x) M(x) = 0 for
  // every monomial M of degree <= a and sum_x lambda(x) f(x) = 1.
  Vec certificate;
  std::string reason;
  std::vector<ThetaStep> theta_steps;
  std::vector<int> stripped_degrees;
  std::vector<SliceStep> slice_steps;
};

ExtensionResult ExtendBySolver(const FnOnX& f, int a, const Budget& budget = {});
bool VerifyCertificate(const FnOnX& f, int a, const Vec& lambda);

struct ConstructiveOptions {
  bool check_weak = true;
  Budget budget;
  Exec exec = Exec::kParallel;
};

ExtensionResult ExtendOnXn(const XnModel& model, const FnOnX& f, int a,
                           const ConstructiveOptions& opts = {});

struct InductiveOptions {
  // Extension of f on X cap W_0, in the coordinates of V. Solved for when
  // absent.
  std::optional<Poly> base_extension;
  Budget budget;
};

// Walks the flag W_0 subset W_1 subset ... subset V, W_0 the given flat and
// each step adding the next standard basis vector outside the current span.
ExtensionResult ExtendInductive(const FnOnX& f, int a, const AffineFlat& w0,
                                const InductiveOptions& opts = {});

}  // namespace hirank

#endif  // HIRANK_EXTEND_HPP_
