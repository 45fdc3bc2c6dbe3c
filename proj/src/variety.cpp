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

#include "hirank/variety.hpp"

#include <algorithm>

#include "hirank/kernels.hpp"

namespace hirank {

namespace {
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;
}

VarietyTable::VarietyTable(PolyCollection spec, std::vector<std::uint64_t> indices)
    : spec_(std::move(spec)), nvars_(spec_.nvars()), indices_(std::move(indices)) {
  const std::uint32_t q = field().q();
  coords_.resize(indices_.size() * nvars_);
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    PointFromIndex(indices_[i], q, std::span<Elem>(&coords_[i * nvars_], nvars_));
  }
  BuildLookup();
}

void VarietyTable::BuildLookup() {
  const std::uint64_t total = SatPow(field().q(), nvars_);
  if (total <= kDenseLimit) {
    dense_.assign(total, -1);
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      dense_[indices_[i]] = static_cast<std::int32_t>(i);
    }
  }
}

VarietyTable VarietyTable::Enumerate(const PolyCollection& spec, const Budget& budget,
                                     Exec exec) {
  spec.Validate();
  const std::uint32_t q = spec.field_ptr()->q();
  const std::size_t n = spec.nvars();
  const std::uint64_t count = SatPow(q, n);
  budget.Check(count, budget.max_enumeration, "variety enumeration");
  std::vector<std::uint64_t> idx;
  if (exec == Exec::kSerial) {
    for (std::uint64_t i = 0; i < count; ++i) {
      Vec x = PointFromIndex(i, q, n);
      if (std::all_of(spec.polys.begin(), spec.polys.end(),
                      [&](const Poly& p) { return p.Eval(x).v == 0; })) {
        idx.push_back(i);
      }
    }
  } else {
    std::vector<PolyEvaluator> evs;
    for (const auto& p : spec.polys) evs.emplace_back(p);
    idx = ParallelFilter(count, [&] {
      return [&, x = Vec(n)](std::uint64_t i) mutable {
        PointFromIndex(i, q, x);
        for (const auto& ev : evs) {
          if (ev(x.data()).v != 0) return false;
        }
        return true;
      };
    });
  }
  return VarietyTable(spec, std::move(idx));
}

VarietyTable VarietyTable::FromIndices(const PolyCollection& spec,
                                       std::vector<std::uint64_t> indices) {
  spec.Validate();
  Require(std::is_sorted(indices.begin(), indices.end()) &&
              std::adjacent_find(indices.begin(), indices.end()) == indices.end(),
          ErrorCode::kInvalidArgument, "point indices must be strictly increasing");
  VarietyTable t(spec, std::move(indices));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (const auto& p : spec.polys) {
      Require(p.Eval(t.point(i)).v == 0, ErrorCode::kInvalidArgument,
              "cached point does not satisfy the equations");
    }
  }
  return t;
}

std::int64_t VarietyTable::FindIndex(std::uint64_t ambient) const {
  if (!dense_.empty()) {
    return ambient < dense_.size() ? dense_[ambient] : -1;
  }
  auto it = std::lower_bound(indices_.begin(), indices_.end(), ambient);
  if (it == indices_.end() || *it != ambient) return -1;
  return it - indices_.begin();
}

VarietyTable VarietyTable::Restrict(const std::vector<Poly>& extra) const {
  PolyCollection spec = spec_;
  for (const auto& p : extra) spec.polys.push_back(p);
  spec.Validate();
  std::vector<std::uint64_t> idx;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::all_of(extra.begin(), extra.end(),
                    [&](const Poly& p) { return p.Eval(point(i)).v == 0; })) {
      idx.push_back(indices_[i]);
    }
  }
  return VarietyTable(std::move(spec), std::move(idx));
}

void VarietyTable::AttachSlice(const Poly& ell) {
  Require(ell.nvars() == nvars_, ErrorCode::kDimensionMismatch, "slice variables");
  Require(ell.degree() <= 1, ErrorCode::kInvalidArgument,
          "slice function must be affine");
  slice_ = ell;
  buckets_.assign(field().q(), {});
  for (std::size_t i = 0; i < size(); ++i) {
    buckets_[ell.Eval(point(i)).v].push_back(static_cast<std::uint32_t>(i));
  }
}

Vec VarietyTable::SliceLinear() const {
  Require(slice_.has_value(), ErrorCode::kInvalidArgument, "no slice attached");
  Vec c(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    Monomial m(nvars_, 0);
    m[i] = 1;
    c[i] = slice_->Coeff(m);
  }
  return c;
}

FnOnX::FnOnX(VarietyPtr h, Vec v) : host(std::move(h)), values(std::move(v)) {
  Require(values.size() == host->size(), ErrorCode::kDimensionMismatch,
          "function table length must equal |X|");
}

FnOnX FnOnX::FromPoly(VarietyPtr h, const Poly& p) {
  Vec v(h->size());
  PolyEvaluator ev(p);
  for (std::size_t i = 0; i < h->size(); ++i) v[i] = ev(h->point(i).data());
  return FnOnX(std::move(h), std::move(v));
}

Elem FnOnX::at(std::span<const Elem> x) const {
  std::int64_t i = host->Find(x);
  Require(i >= 0, ErrorCode::kInvalidArgument, "point not on X");
  return values[i];
}

bool FnOnX::IsZero() const {
  return std::all_of(values.begin(), values.end(), [](Elem e) { return e.v == 0; });
}

FnOnX FnOnX::operator+(const FnOnX& o) const {
  const Field& f = host->field();
  Vec v(values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(values[i], o.values[i]);
  return FnOnX(host, std::move(v));
}

FnOnX FnOnX::operator-(const FnOnX& o) const {
  const Field& f = host->field();
  Vec v(values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(values[i], o.values[i]);
  return FnOnX(host, std::move(v));
}

FnOnX FnOnX::Scaled(Elem c) const {
  const Field& f = host->field();
  Vec v(values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.mul(c, values[i]);
  return FnOnX(host, std::move(v));
}

bool AgreesOn(const Poly& p, const FnOnX& f) {
  PolyEvaluator ev(p);
  for (std::size_t i = 0; i < f.host->size(); ++i) {
    if (ev(f.host->point(i).data()) != f.values[i]) return false;
  }
  return true;
}

}  // namespace hirank
