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

#include "hirank/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hirank {

void Matrix::AppendRow(std::span<const Elem> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  Require(r.size() == cols_, ErrorCode::kDimensionMismatch, "row length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

void AxpyRow(const Field& f, Elem c, std::span<const Elem> src,
             std::span<Elem> dst, std::size_t from) {
  if (c.v == 0) return;
  const std::uint32_t q = f.q();
  const std::uint16_t* add = f.add_table();
  const std::uint16_t* mrow = f.mul_table() + std::size_t{c.v} * q;
  for (std::size_t k = from; k < dst.size(); ++k) {
    if (src[k].v == 0) continue;
    dst[k].v = add[dst[k].v * q + mrow[src[k].v]];
  }
}

namespace {

void ScaleRow(const Field& f, Elem c, std::span<Elem> row) {
  for (auto& x : row) x = f.mul(c, x);
}

}  // namespace

bool EchelonBasis::Reduce(Vec& v) const {
  Require(v.size() == cols_, ErrorCode::kDimensionMismatch, "vector length");
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem c = v[pivots_[i]];
    if (c.v != 0) AxpyRow(f, f.neg(c), rows_[i], v, pivots_[i]);
  }
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e.v == 0; });
}

bool EchelonBasis::Insert(Vec v) {
  if (Reduce(v)) return false;
  const Field& f = *field_;
  std::size_t piv = 0;
  while (v[piv].v == 0) ++piv;
  ScaleRow(f, f.inv(v[piv]), v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem c = rows_[i][piv];
    if (c.v != 0) AxpyRow(f, f.neg(c), v, rows_[i]);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

Matrix EchelonBasis::ToMatrix() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Matrix m(0, cols_);
  for (std::size_t i : order) m.AppendRow(rows_[i]);
  return m;
}

std::vector<Vec> EchelonBasis::NullSpace() const {
  const Field& f = *field_;
  std::vector<int> row_of(cols_, -1);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    row_of[pivots_[i]] = static_cast<int>(i);
  }
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (row_of[j] >= 0) continue;
    Vec x(cols_);
    x[j] = f.one();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      x[pivots_[i]] = f.neg(rows_[i][j]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rref RowReduce(const Field& f, Matrix m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c).v == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(r, k));
    }
    ScaleRow(f, f.inv(m(r, c)), m.row(r));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Elem x = m(i, c);
      if (x.v != 0) AxpyRow(f, f.neg(x), m.row(r), m.row(i), c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

std::size_t Rank(const Field& f, const Matrix& m) { return RowReduce(f, m).rank(); }

std::vector<Vec> NullSpace(const Field& f, const Matrix& m) {
  Rref r = RowReduce(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec x(m.cols());
    x[j] = f.one();
    for (std::size_t i = 0; i < r.rank(); ++i) x[r.pivots[i]] = f.neg(r.m(i, j));
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> Solve(const Field& f, const Matrix& m, const Vec& b) {
  Require(b.size() == m.rows(), ErrorCode::kDimensionMismatch, "rhs length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref r = RowReduce(f, std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < r.rank(); ++i) x[r.pivots[i]] = r.m(i, m.cols());
  return x;
}

Vec MatVec(const Field& f, const Matrix& m, std::span<const Elem> x) {
  Require(x.size() == m.cols(), ErrorCode::kDimensionMismatch, "vector length");
  Vec y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = Dot(f, m.row(i), x);
  return y;
}

Elem Dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "dot length");
  Elem s;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

}  // namespace hirank
