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

// Affine maps, affine flats and the point indexing of F_q^n.

#ifndef HIRANK_AFFINE_HPP_
#define HIRANK_AFFINE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hirank/linalg.hpp"
#include "hirank/poly.hpp"

namespace hirank {

// Points of F_q^n are numbered in mixed radix with the first coordinate most
// significant, so index order is lexicographic order.
inline std::uint64_t PointIndex(std::span<const Elem> x, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (Elem e : x) idx = idx * q + e.v;
  return idx;
}

inline void PointFromIndex(std::uint64_t idx, std::uint32_t q, std::span<Elem> out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = Elem(static_cast<std::uint32_t>(idx % q));
    idx /= q;
  }
}

inline Vec PointFromIndex(std::uint64_t idx, std::uint32_t q, std::size_t n) {
  Vec v(n);
  PointFromIndex(idx, q, v);
  return v;
}

class AffineMap {
 public:
  AffineMap(Matrix linear, Vec translation);
  static AffineMap Identity(const Field& f, std::size_t n);

  std::size_t source_dim() const { return linear_.cols(); }
  std::size_t target_dim() const { return linear_.rows(); }
  const Matrix& linear() const { return linear_; }
  const Vec& translation() const { return translation_; }

  Vec Apply(const Field& f, std::span<const Elem> w) const;
  // (*this) o inner.
  AffineMap After(const Field& f, const AffineMap& inner) const;
  // The coordinate polynomials of the map, in source_dim variables.
  std::vector<Poly> CoordinatePolys(const FieldPtr& field) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  Matrix linear_;
  Vec translation_;
};

// phi^*(P) = P o phi.
Poly ComposeAffine(const Poly& p, const AffineMap& phi);

class AffineFlat {
 public:
  AffineFlat(const Field& f, Vec base, std::vector<Vec> directions);

  std::size_t dim() const { return directions_.size(); }
  std::size_t ambient_dim() const { return base_.size(); }
  const Vec& base() const { return base_; }
  const std::vector<Vec>& directions() const { return directions_; }

  // t -> base + sum t_i d_i.
  AffineMap Parametrization() const;
  // All q^dim points, parameter tuples in index order.
  std::vector<Vec> Points(const Field& f) const;
  // Directions in reduced row echelon form, base reduced modulo their span.
  AffineFlat Canonical(const Field& f) const;

  friend bool operator==(const AffineFlat&, const AffineFlat&) = default;
  friend bool operator<(const AffineFlat& a, const AffineFlat& b);

 private:
  AffineFlat() = default;
  Vec base_;
  std::vector<Vec> directions_;
};

Poly RestrictToFlat(const Poly& p, const AffineFlat& flat);

}  // namespace hirank

#endif  // HIRANK_AFFINE_HPP_
