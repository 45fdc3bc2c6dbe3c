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

#include "hirank/flats.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

namespace hirank {

namespace {

// All q^k combinations sum c_i rows_i, coefficient tuples in index order.
std::vector<Vec> SpanPoints(const Field& f, const std::vector<Vec>& rows, std::size_t n) {
  const std::uint32_t q = f.q();
  const std::uint64_t count = SatPow(q, rows.size());
  std::vector<Vec> out;
  out.reserve(count);
  Vec c(rows.size());
  for (std::uint64_t i = 0; i < count; ++i) {
    PointFromIndex(i, q, c);
    Vec v(n);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (c[k].v) AxpyRow(f, c[k], rows[k], v);
    }
    out.push_back(std::move(v));
  }
  return out;
}

void Normalize(const Field& f, Vec& v) {
  for (Elem e : v) {
    if (e.v) {
      Elem s = f.inv(e);
      for (Elem& x : v) x = f.mul(s, x);
      return;
    }
  }
}

// Is x + t*y in X for every t != 0?
bool LineInX(const VarietyTable& x, std::span<const Elem> base, const Vec& y, Vec& scratch) {
  const Field& f = x.field();
  for (std::uint32_t t = 1; t < f.q(); ++t) {
    for (std::size_t c = 0; c < base.size(); ++c) {
      scratch[c] = f.add(base[c], f.mul(Elem(t), y[c]));
    }
    if (!x.Contains(scratch)) return false;
  }
  return true;
}

std::vector<AffineFlat> FlatsThrough(const VarietyTable& x, std::size_t ord,
                                     const std::vector<Vec>& dirs,
                                     const std::vector<std::uint64_t>& dir_index,
                                     std::size_t dim) {
  const Field& f = x.field();
  const std::uint32_t q = f.q();
  const std::size_t n = x.nvars();
  std::span<const Elem> base = x.point(ord);
  Vec bvec(base.begin(), base.end());
  if (dim == 0) return {AffineFlat(f, bvec, {})};

  Vec scratch(n);
  std::vector<std::size_t> dx;  // indices into dirs
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (LineInX(x, base, dirs[k], scratch)) dx.push_back(k);
  }
  auto in_dx = [&](const Vec& y) {
    std::uint64_t idx = PointIndex(y, q);
    auto it = std::lower_bound(dx.begin(), dx.end(), idx, [&](std::size_t k, std::uint64_t v) {
      return dir_index[k] < v;
    });
    return it != dx.end() && dir_index[*it] == idx;
  };
  auto vanishes_at_pivots = [&](const std::vector<Vec>& rows) {
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < n; ++c) {
        if (r[c].v) {
          if (bvec[c].v) return false;
          break;
        }
      }
    }
    return true;
  };

  std::vector<AffineFlat> out;
  if (dim == 1) {
    for (std::size_t k : dx) {
      if (vanishes_at_pivots({dirs[k]})) out.emplace_back(f, bvec, std::vector<Vec>{dirs[k]});
    }
    return out;
  }
  // Grow subspaces one direction at a time, deduplicating by RREF.
  std::set<std::vector<Vec>> level;
  for (std::size_t k : dx) level.insert({dirs[k]});
  for (std::size_t j = 1; j < dim; ++j) {
    std::set<std::vector<Vec>> next;
    for (const auto& rows : level) {
      std::vector<Vec> pts = SpanPoints(f, rows, n);
      for (std::size_t k : dx) {
        const Vec& y = dirs[k];
        bool ok = true;
        bool inside = false;
        for (std::size_t u = 0; u < pts.size() && ok; ++u) {
          Vec v = pts[u];
          AxpyRow(f, f.one(), y, v);
          if (std::all_of(v.begin(), v.end(), [](Elem e) { return e.v == 0; })) {
            inside = true;
            break;
          }
          Normalize(f, v);
          ok = in_dx(v);
        }
        if (inside || !ok) continue;
        Matrix m(0, n);
        for (const auto& r : rows) m.AppendRow(r);
        m.AppendRow(y);
        Rref r = RowReduce(f, m);
        if (r.rank() != j + 1) continue;
        std::vector<Vec> red;
        for (std::size_t i = 0; i < r.rank(); ++i) red.emplace_back(r.m.row(i).begin(), r.m.row(i).end());
        next.insert(std::move(red));
      }
    }
    level = std::move(next);
  }
  for (const auto& rows : level) {
    if (vanishes_at_pivots(rows)) out.emplace_back(f, bvec, rows);
  }
  return out;
}

}  // namespace

std::vector<Vec> ProjectiveDirections(const Field& f, std::size_t n, const Vec* lin) {
  const std::uint32_t q = f.q();
  const std::uint64_t count = SatPow(q, n);
  std::vector<Vec> out;
  Vec y(n);
  for (std::uint64_t i = 1; i < count; ++i) {
    PointFromIndex(i, q, y);
    auto first = std::find_if(y.begin(), y.end(), [](Elem e) { return e.v != 0; });
    if (first->v != 1) continue;
    if (lin && Dot(f, *lin, y).v != 0) continue;
    out.push_back(y);
  }
  return out;
}

FlatCatalog FlatsInBucket(const VarietyTable& x, std::optional<Elem> bucket,
                          std::size_t dim, const Budget& budget, Exec exec) {
  const Field& f = x.field();
  const std::size_t n = x.nvars();
  Require(dim <= n, ErrorCode::kInvalidArgument, "flat dimension exceeds ambient dimension");
  FlatCatalog cat;
  cat.dim = dim;
  cat.bucket = bucket;

  std::vector<std::uint32_t> bases;
  Vec lin;
  if (bucket) {
    Require(x.slice().has_value(), ErrorCode::kInvalidArgument, "bucket needs a slice");
    bases = x.buckets().at(bucket->v);
    lin = x.SliceLinear();
  } else {
    bases.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) bases[i] = static_cast<std::uint32_t>(i);
  }
  if (dim == 0) {
    for (auto b : bases) {
      std::span<const Elem> p = x.point(b);
      cat.flats.emplace_back(f, Vec(p.begin(), p.end()), std::vector<Vec>{});
    }
    return cat;
  }
  std::vector<Vec> dirs = ProjectiveDirections(f, n, bucket ? &lin : nullptr);
  budget.Check(SatPow(f.q(), 1) * dirs.size() * bases.size(), budget.max_search,
               "flat scan");
  std::vector<std::uint64_t> dir_index(dirs.size());
  for (std::size_t k = 0; k < dirs.size(); ++k) dir_index[k] = PointIndex(dirs[k], f.q());

  std::vector<std::vector<AffineFlat>> found(bases.size());
  if (exec == Exec::kSerial) {
    for (std::size_t i = 0; i < bases.size(); ++i) {
      found[i] = FlatsThrough(x, bases[i], dirs, dir_index, dim);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(bases.size()); ++i) {
      found[i] = FlatsThrough(x, bases[i], dirs, dir_index, dim);
    }
  }
  for (auto& v : found) {
    for (auto& fl : v) cat.flats.push_back(std::move(fl));
  }
  std::sort(cat.flats.begin(), cat.flats.end());
  return cat;
}

namespace {

bool Extends(const VarietyTable& x, const Vec& base, const std::vector<Vec>& span_pts,
             const Vec& z, Vec& scratch) {
  const Field& f = x.field();
  for (std::uint32_t s = 1; s < f.q(); ++s) {
    for (const auto& u : span_pts) {
      for (std::size_t c = 0; c < base.size(); ++c) {
        scratch[c] = f.add(f.add(base[c], u[c]), f.mul(Elem(s), z[c]));
      }
      if (!x.Contains(scratch)) return false;
    }
  }
  return true;
}

bool IsDeficient(const VarietyTable& x, const AffineFlat& flat, const Vec& lin, bool zero_bucket) {
  const Field& f = x.field();
  const std::uint32_t q = f.q();
  const std::size_t n = x.nvars();
  std::vector<bool> pivot(n, false);
  for (const auto& r : flat.directions()) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r[c].v) {
        pivot[c] = true;
        break;
      }
    }
  }
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c) {
    if (!pivot[c]) free.push_back(c);
  }
  std::vector<Vec> span_pts = SpanPoints(f, flat.directions(), n);
  Vec z(n), scratch(n), digits(free.size());
  const std::uint64_t count = SatPow(q, free.size());
  for (std::uint64_t i = 1; i < count; ++i) {
    PointFromIndex(i, q, digits);
    std::fill(z.begin(), z.end(), Elem());
    for (std::size_t k = 0; k < free.size(); ++k) z[free[k]] = digits[k];
    if (zero_bucket) {
      auto first = std::find_if(z.begin(), z.end(), [](Elem e) { return e.v != 0; });
      if (first->v != 1) continue;
    } else if (Dot(f, lin, z) != f.one()) {
      continue;
    }
    if (Extends(x, flat.base(), span_pts, z, scratch)) return false;
  }
  return true;
}

}  // namespace

DeficiencyReport FlatExtensionDeficiency(const VarietyTable& x, const FlatCatalog& cat,
                                         const Budget& budget, Exec exec) {
  Require(!cat.flats.empty(), ErrorCode::kEmptyCatalog, "no flats in the catalog");
  Require(cat.bucket.has_value() && x.slice().has_value(), ErrorCode::kInvalidArgument,
          "deficiency needs a slice and a bucket");
  const Field& f = x.field();
  const std::size_t n = x.nvars();
  budget.Check(cat.flats.size() * SatPow(f.q(), n), budget.max_search * 16,
               "deficiency search");
  const Vec lin = x.SliceLinear();
  const bool zero_bucket = cat.bucket->v == 0;
  std::vector<std::uint8_t> bad(cat.flats.size());
  if (exec == Exec::kSerial) {
    for (std::size_t i = 0; i < cat.flats.size(); ++i) {
      bad[i] = IsDeficient(x, cat.flats[i], lin, zero_bucket);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cat.flats.size()); ++i) {
      bad[i] = IsDeficient(x, cat.flats[i], lin, zero_bucket);
    }
  }
  DeficiencyReport r;
  r.total = cat.flats.size();
  r.deficient = static_cast<std::uint64_t>(std::count(bad.begin(), bad.end(), 1));
  r.fraction = Rational(r.deficient, r.total);
  r.value = static_cast<double>(r.deficient) / static_cast<double>(r.total);
  return r;
}

}  // namespace hirank
