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

// Enumerated point sets X(k) and functions on them.

#ifndef HIRANK_VARIETY_HPP_
#define HIRANK_VARIETY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hirank/affine.hpp"
#include "hirank/error.hpp"
#include "hirank/poly.hpp"

namespace hirank {

class VarietyTable {
 public:
  static VarietyTable Enumerate(const PolyCollection& spec, const Budget& budget = {},
                                Exec exec = Exec::kParallel);
  // Rebuilds a table from ambient indices (sorted ascending), re-verifying
  // every point against the spec.
  static VarietyTable FromIndices(const PolyCollection& spec,
                                  std::vector<std::uint64_t> indices);

  const PolyCollection& spec() const { return spec_; }
  const Field& field() const { return *spec_.field_ptr(); }
  const FieldPtr& field_ptr() const { return spec_.field_ptr(); }
  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return indices_.size(); }

  std::span<const Elem> point(std::size_t i) const {
    return {&coords_[i * nvars_], nvars_};
  }
  std::uint64_t ambient_index(std::size_t i) const { return indices_[i]; }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  // Ordinal of the point with the given ambient index, or -1.
  std::int64_t FindIndex(std::uint64_t ambient) const;
  std::int64_t Find(std::span<const Elem> x) const {
    return FindIndex(PointIndex(x, field().q()));
  }
  bool Contains(std::span<const Elem> x) const { return Find(x) >= 0; }

  // Points also satisfying the extra equations, as a new table.
  VarietyTable Restrict(const std::vector<Poly>& extra) const;

  // Attaches an affine slice function; buckets()[b] lists the ordinals with
  // ell = b.
  void AttachSlice(const Poly& ell);
  const std::optional<Poly>& slice() const { return slice_; }
  const std::vector<std::vector<std::uint32_t>>& buckets() const { return buckets_; }
  // Linear part of the slice as a coefficient vector.
  Vec SliceLinear() const;

 private:
  VarietyTable(PolyCollection spec, std::vector<std::uint64_t> indices);
  void BuildLookup();

  PolyCollection spec_;
  std::size_t nvars_ = 0;
  std::vector<std::uint64_t> indices_;
  std::vector<Elem> coords_;
  std::vector<std::int32_t> dense_;  // ambient index -> ordinal, when small
  std::optional<Poly> slice_;
  std::vector<std::vector<std::uint32_t>> buckets_;
};

using VarietyPtr = std::shared_ptr<const VarietyTable>;

// A k-valued function on a VarietyTable, indexed by point ordinal.
struct FnOnX {
  VarietyPtr host;
  Vec values;

  FnOnX() = default;
  FnOnX(VarietyPtr h, Vec v);
  static FnOnX Zero(VarietyPtr h) { return FnOnX(h, Vec(h->size())); }
  static FnOnX FromPoly(VarietyPtr h, const Poly& p);

  Elem at(std::span<const Elem> x) const;
  bool IsZero() const;
  FnOnX operator+(const FnOnX& o) const;
  FnOnX operator-(const FnOnX& o) const;
  FnOnX Scaled(Elem c) const;
  friend bool operator==(const FnOnX& a, const FnOnX& b) { return a.values == b.values; }
};

bool AgreesOn(const Poly& p, const FnOnX& f);

}  // namespace hirank

#endif  // HIRANK_VARIETY_HPP_
