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

// Affine flats contained in an enumerated variety, and the line/plane
// extension statistic.

#ifndef HIRANK_FLATS_HPP_
#define HIRANK_FLATS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "hirank/affine.hpp"
#include "hirank/cyclo.hpp"
#include "hirank/variety.hpp"

namespace hirank {

struct FlatCatalog {
  std::size_t dim = 1;
  // Slice value the flats lie in; unset means all of X.
  std::optional<Elem> bucket;
  // Canonical forms, sorted.
  std::vector<AffineFlat> flats;
};

// All dim-flats inside X (or inside the bucket X_b of the attached slice).
// Each flat is found from its canonical base point, the unique point that
// vanishes at the pivot columns of the echelonized directions.
FlatCatalog FlatsInBucket(const VarietyTable& x, std::optional<Elem> bucket,
                          std::size_t dim, const Budget& budget = {},
                          Exec exec = Exec::kParallel);

// Canonical projective directions y (first nonzero entry 1) with lin(y) = 0
// when lin is given.
std::vector<Vec> ProjectiveDirections(const Field& f, std::size_t n,
                                      const Vec* lin = nullptr);

struct DeficiencyReport {
  std::uint64_t deficient = 0;
  std::uint64_t total = 0;
  Rational fraction;
  double value = 0;
};

// Fraction of flats in the catalog with no (dim+1)-flat inside X that
// contains them and meets X_0 = {ell = 0}. Needs the slice attached.
DeficiencyReport FlatExtensionDeficiency(const VarietyTable& x, const FlatCatalog& cat,
                                         const Budget& budget = {},
                                         Exec exec = Exec::kParallel);

}  // namespace hirank

#endif  // HIRANK_FLATS_HPP_
