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

#include "hirank/affine.hpp"

#include <algorithm>

namespace hirank {

AffineMap::AffineMap(Matrix linear, Vec translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  Require(translation_.size() == linear_.rows(), ErrorCode::kDimensionMismatch,
          "translation length must equal target dimension");
}

AffineMap AffineMap::Identity(const Field& f, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return AffineMap(std::move(m), Vec(n));
}

Vec AffineMap::Apply(const Field& f, std::span<const Elem> w) const {
  Vec y = MatVec(f, linear_, w);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], translation_[i]);
  return y;
}

AffineMap AffineMap::After(const Field& f, const AffineMap& inner) const {
  Require(source_dim() == inner.target_dim(), ErrorCode::kDimensionMismatch,
          "affine maps do not compose");
  Matrix m(target_dim(), inner.source_dim());
  for (std::size_t i = 0; i < target_dim(); ++i) {
    for (std::size_t j = 0; j < inner.source_dim(); ++j) {
      Elem s;
      for (std::size_t k = 0; k < source_dim(); ++k) {
        s = f.add(s, f.mul(linear_(i, k), inner.linear()(k, j)));
      }
      m(i, j) = s;
    }
  }
  return AffineMap(std::move(m), Apply(f, inner.translation()));
}

std::vector<Poly> AffineMap::CoordinatePolys(const FieldPtr& field) const {
  std::vector<Poly> out;
  const std::size_t n = source_dim();
  for (std::size_t i = 0; i < target_dim(); ++i) {
    Poly p(field, n);
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m(n, 0);
      m[j] = 1;
      p.AddTerm(m, linear_(i, j));
    }
    p.AddTerm(Monomial(n, 0), translation_[i]);
    out.push_back(std::move(p));
  }
  return out;
}

Poly ComposeAffine(const Poly& p, const AffineMap& phi) {
  Require(phi.target_dim() == p.nvars(), ErrorCode::kDimensionMismatch,
          "affine map target dimension " + std::to_string(phi.target_dim()) +
              " does not match " + std::to_string(p.nvars()) + " variables");
  Poly r = p.Compose(phi.CoordinatePolys(p.field_ptr()));
  return p.bound() == Poly::kUnbounded ? r : r.WithBound(p.bound());
}

AffineFlat::AffineFlat(const Field& f, Vec base, std::vector<Vec> directions)
    : base_(std::move(base)), directions_(std::move(directions)) {
  Matrix m(0, base_.size());
  for (const auto& d : directions_) {
    Require(d.size() == base_.size(), ErrorCode::kDimensionMismatch,
            "direction length");
    m.AppendRow(d);
  }
  if (!directions_.empty()) {
    Require(Rank(f, m) == directions_.size(), ErrorCode::kInvalidArgument,
            "flat directions are linearly dependent");
  }
}

AffineMap AffineFlat::Parametrization() const {
  Matrix m(base_.size(), directions_.size());
  for (std::size_t j = 0; j < directions_.size(); ++j) {
    for (std::size_t i = 0; i < base_.size(); ++i) m(i, j) = directions_[j][i];
  }
  return AffineMap(std::move(m), base_);
}

std::vector<Vec> AffineFlat::Points(const Field& f) const {
  const std::uint32_t q = f.q();
  const std::uint64_t count = SatPow(q, dim());
  std::vector<Vec> pts;
  pts.reserve(count);
  Vec t(dim());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PointFromIndex(idx, q, t);
    Vec x = base_;
    for (std::size_t j = 0; j < dim(); ++j) {
      AxpyRow(f, t[j], directions_[j], x);
    }
    pts.push_back(std::move(x));
  }
  return pts;
}

AffineFlat AffineFlat::Canonical(const Field& f) const {
  AffineFlat out;
  out.base_ = base_;
  if (directions_.empty()) return out;
  Matrix m(0, base_.size());
  for (const auto& d : directions_) m.AppendRow(d);
  Rref r = RowReduce(f, m);
  for (std::size_t i = 0; i < r.rank(); ++i) {
    Vec row(r.m.row(i).begin(), r.m.row(i).end());
    AxpyRow(f, f.neg(out.base_[r.pivots[i]]), row, out.base_);
    out.directions_.push_back(std::move(row));
  }
  return out;
}

bool operator<(const AffineFlat& a, const AffineFlat& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  return a.directions_ < b.directions_;
}

Poly RestrictToFlat(const Poly& p, const AffineFlat& flat) {
  return ComposeAffine(p, flat.Parametrization());
}

}  // namespace hirank
