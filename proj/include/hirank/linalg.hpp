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

// Dense linear algebra over F_q.

#ifndef HIRANK_LINALG_HPP_
#define HIRANK_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hirank/field.hpp"

namespace hirank {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<Elem> row(std::size_t r) { return {&data_[r * cols_], cols_}; }
  std::span<const Elem> row(std::size_t r) const {
    return {&data_[r * cols_], cols_};
  }
  void AppendRow(std::span<const Elem> r);
  Matrix Transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

// dst += c * src, over the given column range.
void AxpyRow(const Field& f, Elem c, std::span<const Elem> src,
             std::span<Elem> dst, std::size_t from = 0);

// Reduced row echelon form kept up to date as rows are inserted.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t cols)
      : field_(std::move(field)), cols_(cols) {}

  // Reduces v against the basis in place; returns true if v became zero.
  bool Reduce(Vec& v) const;
  // Inserts v; returns true if it was independent of the current rows.
  bool Insert(Vec v);
  bool Contains(Vec v) const { return Reduce(v); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Rows sorted by pivot column.
  Matrix ToMatrix() const;
  // Basis of {x : <row, x> = 0 for every row}.
  std::vector<Vec> NullSpace() const;

 private:
  FieldPtr field_;
  std::size_t cols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

struct Rref {
  Matrix m;
  std::vector<std::size_t> pivots;  // pivot column of row i
  std::size_t rank() const { return pivots.size(); }
};

Rref RowReduce(const Field& f, Matrix m);
std::size_t Rank(const Field& f, const Matrix& m);
// Basis of the right kernel {x : m x = 0}.
std::vector<Vec> NullSpace(const Field& f, const Matrix& m);
// Some x with m x = b, free variables zero.
std::optional<Vec> Solve(const Field& f, const Matrix& m, const Vec& b);
Vec MatVec(const Field& f, const Matrix& m, std::span<const Elem> x);
Elem Dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace hirank

#endif  // HIRANK_LINALG_HPP_
