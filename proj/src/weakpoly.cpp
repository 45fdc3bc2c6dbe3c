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

#include "hirank/weakpoly.hpp"

#include <algorithm>

namespace hirank {

namespace {

Vec ValuesOnFlat(const FnOnX& f, const AffineFlat& flat, std::vector<std::int64_t>* ords) {
  const VarietyTable& x = *f.host;
  std::vector<Vec> pts = flat.Points(x.field());
  Vec vals(pts.size());
  if (ords) ords->resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::int64_t o = x.Find(pts[i]);
    Require(o >= 0, ErrorCode::kFlatNotInX, "flat point not on X");
    vals[i] = f.values[o];
    if (ords) (*ords)[i] = o;
  }
  return vals;
}

std::vector<const FlatCatalog*> Ptrs(const std::vector<FlatCatalog>& v) {
  std::vector<const FlatCatalog*> out;
  for (const auto& c : v) out.push_back(&c);
  return out;
}

FnSpace FromEchelon(const EchelonBasis& e) {
  FnSpace s;
  Matrix m = e.ToMatrix();
  for (std::size_t i = 0; i < m.rows(); ++i) s.basis.emplace_back(m.row(i).begin(), m.row(i).end());
  return s;
}

}  // namespace

int DegreeOnFlat(const FnOnX& f, const AffineFlat& flat) {
  Vec vals = ValuesOnFlat(f, flat, nullptr);
  return Interpolate(f.host->field_ptr(), flat.dim(), vals).degree();
}

std::size_t KaufmanRonDim(const Field& f, int a) {
  const std::uint32_t den = f.q() - f.q() / f.p();
  std::size_t l = (static_cast<std::uint32_t>(a) + 1 + den - 1) / den;
  return std::max<std::size_t>(l, 1);
}

WeakTestResult IsWeaklyPolynomial(const FnOnX& f, int a, const FlatCatalog& cat) {
  Require(!cat.flats.empty(), ErrorCode::kEmptyCatalog, "no flats to test on");
  WeakTestResult r;
  for (const auto& flat : cat.flats) {
    ++r.flats_checked;
    int deg = DegreeOnFlat(f, flat);
    if (deg > a) {
      r.ok = false;
      r.violation = flat;
      r.violation_degree = deg;
      return r;
    }
  }
  return r;
}

WeakTestResult IsWeaklyPolynomial(const FnOnX& f, int a, WeakMode mode, const Budget& budget,
                                  Exec exec) {
  std::size_t dim = mode == WeakMode::kLines    ? 1
                    : mode == WeakMode::kPlanes ? 2
                                                : KaufmanRonDim(f.host->field(), a);
  FlatCatalog cat = FlatsInBucket(*f.host, std::nullopt, dim, budget, exec);
  return IsWeaklyPolynomial(f, a, cat);
}

FnSpace WeakpolySpace(const VarietyTable& x, int a, const std::vector<const FlatCatalog*>& cats,
                      const Budget& budget) {
  const Field& f = x.field();
  const std::uint32_t q = f.q();
  Require(a >= 0 && static_cast<std::uint32_t>(a) < q, ErrorCode::kInvalidArgument,
          "need 0 <= a < q");
  budget.Check(SatPow(x.size(), 2), budget.max_matrix_entries, "weak constraint matrix");
  const Matrix inv_v = InverseVandermonde(f);
  EchelonBasis rows(x.field_ptr(), x.size());
  FnOnX ident = FnOnX::Zero(std::make_shared<const VarietyTable>(x));
  for (const FlatCatalog* cat : cats) {
    const std::size_t k = cat->dim;
    // Exponent tuples of total degree > a, every exponent below q.
    std::vector<Vec> high;
    const std::uint64_t count = SatPow(q, k);
    for (std::uint64_t i = 0; i < count; ++i) {
      Vec e = PointFromIndex(i, q, k);
      std::uint32_t deg = 0;
      for (Elem c : e) deg += c.v;
      if (deg > static_cast<std::uint32_t>(a)) high.push_back(std::move(e));
    }
    std::vector<std::int64_t> ords;
    Vec t(k);
    for (const auto& flat : cat->flats) {
      ValuesOnFlat(ident, flat, &ords);
      for (const auto& e : high) {
        if (rows.rank() == x.size()) break;
        Vec row(x.size());
        for (std::uint64_t pi = 0; pi < count; ++pi) {
          PointFromIndex(pi, q, t);
          Elem w = f.one();
          for (std::size_t c = 0; c < k && w.v; ++c) w = f.mul(w, inv_v(e[c].v, t[c].v));
          row[ords[pi]] = f.add(row[ords[pi]], w);
        }
        rows.Insert(std::move(row));
      }
    }
  }
  EchelonBasis ker(x.field_ptr(), x.size());
  for (auto& v : rows.NullSpace()) ker.Insert(std::move(v));
  return FromEchelon(ker);
}

FnSpace WeakpolySpace(const VarietyTable& x, int a, const Budget& budget, Exec exec) {
  std::vector<FlatCatalog> cats;
  cats.push_back(FlatsInBucket(x, std::nullopt, 1, budget, exec));
  if (x.nvars() >= 2) cats.push_back(FlatsInBucket(x, std::nullopt, 2, budget, exec));
  return WeakpolySpace(x, a, Ptrs(cats), budget);
}

FnSpace PolyRestrictionSpace(const VarietyTable& x, int a, const Budget& budget) {
  const Field& f = x.field();
  std::vector<Monomial> mons = MonomialsUpTo(x.nvars(), a, static_cast<int>(f.q()));
  budget.Check(mons.size() * x.size(), budget.max_matrix_entries, "evaluation matrix");
  EchelonBasis e(x.field_ptr(), x.size());
  VarietyPtr host = std::make_shared<const VarietyTable>(x);
  for (const auto& m : mons) {
    e.Insert(FnOnX::FromPoly(host, Poly::Monom(x.field_ptr(), m)).values);
  }
  return FromEchelon(e);
}

bool SpaceContains(const FieldPtr& f, const FnSpace& s, const Vec& v) {
  EchelonBasis e(f, v.size());
  for (const auto& b : s.basis) e.Insert(b);
  return e.Contains(v);
}

QuotientReport QuotientDim(const VarietyTable& x, int a, const Budget& budget, Exec exec) {
  FnSpace weak = WeakpolySpace(x, a, budget, exec);
  FnSpace poly = PolyRestrictionSpace(x, a, budget);
  EchelonBasis e(x.field_ptr(), x.size());
  for (const auto& b : weak.basis) e.Insert(b);
  for (const auto& b : poly.basis) {
    Require(e.Contains(b), ErrorCode::kNotWeaklyPolynomial,
            "a restricted polynomial is not weakly polynomial");
  }
  return {weak.dim(), poly.dim(), weak.dim() - poly.dim()};
}

bool RestrictionInjectivity(const VarietyTable& x, const std::vector<Poly>& w, int a,
                            const Budget& budget, Exec exec) {
  VarietyTable xw = x.Restrict(w);
  FnSpace weak = WeakpolySpace(x, a, budget, exec);
  FnSpace poly = PolyRestrictionSpace(x, a, budget);
  FnSpace poly_w = PolyRestrictionSpace(xw, a, budget);
  // Ordinals of X cap W inside X.
  std::vector<std::size_t> sub(xw.size());
  for (std::size_t i = 0; i < xw.size(); ++i) sub[i] = x.FindIndex(xw.ambient_index(i));
  EchelonBasis target(x.field_ptr(), xw.size());
  for (const auto& b : poly_w.basis) target.Insert(b);
  EchelonBasis image(x.field_ptr(), xw.size());
  for (const auto& b : weak.basis) {
    Vec r(xw.size());
    for (std::size_t i = 0; i < xw.size(); ++i) r[i] = b[sub[i]];
    target.Reduce(r);
    image.Insert(std::move(r));
  }
  // Kernel of the quotient map has dimension dim weak - rank(image); it
  // always contains P_a(X).
  return weak.dim() - image.rank() == poly.dim();
}

std::vector<std::pair<Character, FnOnX>> ThetaDecompose(const XnModel& model, const FnOnX& f,
                                                        Exec exec) {
  const Field& fld = model.field();
  const VarietyTable& x = *model.table();
  Require(f.host->size() == x.size(), ErrorCode::kDimensionMismatch,
          "function is not on the X_n table");
  const SubgroupDelta& delta = model.delta();
  const std::uint32_t m = delta.m;
  const std::size_t axes = (model.spec().d - 1) * model.spec().n;
  const std::vector<Vec> torus = model.TorusElements();
  const std::uint64_t tsize = torus.size();
  const Elem inv_t = fld.inv(fld.FromInt(static_cast<long long>(tsize % fld.p())));
  std::vector<Vec> comp(tsize, Vec(x.size()));

  auto point_transform = [&](std::size_t ord, Vec& g, Vec& line, Vec& tx) {
    std::span<const Elem> pt = x.point(ord);
    for (std::uint64_t k = 0; k < tsize; ++k) {
      for (std::size_t c = 0; c < pt.size(); ++c) tx[c] = fld.mul(torus[k][c], pt[c]);
      std::int64_t o = x.Find(tx);
      Require(o >= 0, ErrorCode::kInvalidArgument, "torus orbit leaves X");
      g[k] = f.values[o];
    }
    // out[b] = sum_k delta^(-b k) in[k] along every axis.
    for (std::size_t ax = 0; ax < axes; ++ax) {
      std::uint64_t stride = SatPow(m, axes - 1 - ax);
      for (std::uint64_t base = 0; base < tsize; base += stride * m) {
        for (std::uint64_t off = 0; off < stride; ++off) {
          for (std::uint32_t b = 0; b < m; ++b) {
            Elem s;
            for (std::uint32_t k = 0; k < m; ++k) {
              Elem v = g[base + off + k * stride];
              if (v.v) s = fld.add(s, fld.mul(delta.elements[(m - (b * k) % m) % m], v));
            }
            line[b] = s;
          }
          for (std::uint32_t b = 0; b < m; ++b) g[base + off + b * stride] = line[b];
        }
      }
    }
    for (std::uint64_t b = 0; b < tsize; ++b) comp[b][ord] = fld.mul(inv_t, g[b]);
  };

  if (exec == Exec::kSerial) {
    Vec g(tsize), line(m), tx(x.nvars());
    for (std::size_t i = 0; i < x.size(); ++i) point_transform(i, g, line, tx);
  } else {
#pragma omp parallel
    {
      Vec g(tsize), line(m), tx(x.nvars());
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(x.size()); ++i) {
        point_transform(static_cast<std::size_t>(i), g, line, tx);
      }
    }
  }
  std::vector<std::pair<Character, FnOnX>> out;
  for (std::uint64_t b = 0; b < tsize; ++b) {
    FnOnX c(f.host, std::move(comp[b]));
    if (!c.IsZero()) out.emplace_back(model.CharacterFromIndex(b), std::move(c));
  }
  return out;
}

}  // namespace hirank
