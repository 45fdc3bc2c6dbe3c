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

#include "hirank/extend.hpp"

#include <algorithm>

namespace hirank {

std::string_view StatusName(ExtensionStatus s) {
  switch (s) {
    case ExtensionStatus::kExtended:
      return "Extended";
    case ExtensionStatus::kNoExtension:
      return "NoExtension";
    case ExtensionStatus::kInconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

// Monomials of degree <= a in the first k of n variables, exponents below q.
std::vector<Monomial> Basis(std::size_t n, std::size_t k, int a, std::uint32_t q) {
  std::vector<Monomial> out;
  for (auto& m : MonomialsUpTo(k, a, static_cast<int>(q))) {
    m.resize(n, 0);
    out.push_back(std::move(m));
  }
  return out;
}

Matrix EvalMatrix(const Field& f, const std::vector<Monomial>& mons,
                  const std::vector<Vec>& pts) {
  Matrix e(pts.size(), mons.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < mons.size(); ++j) {
      Elem v = f.one();
      for (std::size_t c = 0; c < mons[j].size() && v.v; ++c) {
        if (mons[j][c]) v = f.mul(v, f.pow(pts[i][c], mons[j][c]));
      }
      e(i, j) = v;
    }
  }
  return e;
}

Poly FromCoeffs(const FieldPtr& field, std::size_t n, const std::vector<Monomial>& mons,
                const Vec& c) {
  Poly p(field, n);
  for (std::size_t j = 0; j < mons.size(); ++j) p.AddTerm(mons[j], c[j]);
  return p;
}

// A polynomial of degree <= a in the first k variables taking the given
// values at the given points.
std::optional<Poly> SolveOnPoints(const FieldPtr& field, std::size_t n, std::size_t k, int a,
                                  const std::vector<Vec>& pts, const Vec& vals,
                                  const Budget& budget) {
  if (a < 0) {
    if (std::all_of(vals.begin(), vals.end(), [](Elem e) { return e.v == 0; })) {
      return Poly(field, n);
    }
    return std::nullopt;
  }
  auto mons = Basis(n, k, a, field->q());
  budget.Check(mons.size() * pts.size(), budget.max_matrix_entries, "extension system");
  auto c = Solve(*field, EvalMatrix(*field, mons, pts), vals);
  if (!c) return std::nullopt;
  return FromCoeffs(field, n, mons, *c);
}

std::vector<Vec> HostPoints(const VarietyTable& x) {
  std::vector<Vec> pts;
  pts.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) pts.emplace_back(x.point(i).begin(), x.point(i).end());
  return pts;
}

}  // namespace

ExtensionResult ExtendBySolver(const FnOnX& f, int a, const Budget& budget) {
  const VarietyTable& x = *f.host;
  const Field& fld = x.field();
  ExtensionResult r;
  r.engine = "solver";
  auto mons = Basis(x.nvars(), x.nvars(), a, fld.q());
  budget.Check(mons.size() * x.size(), budget.max_matrix_entries, "extension system");
  Matrix e = EvalMatrix(fld, mons, HostPoints(x));
  if (auto c = Solve(fld, e, f.values)) {
    r.status = ExtensionStatus::kExtended;
    r.poly = FromCoeffs(x.field_ptr(), x.nvars(), mons, *c);
    return r;
  }
  // Left kernel of e from the echelon form of its transpose: for a free
  // column j, lambda_j = 1 and lambda_pivot(i) = -R(i, j).
  Rref t = RowReduce(fld, e.Transposed());
  std::vector<bool> is_pivot(x.size(), false);
  for (auto p : t.pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (is_pivot[j]) continue;
    Elem dot = f.values[j];
    for (std::size_t i = 0; i < t.rank(); ++i) {
      dot = fld.sub(dot, fld.mul(t.m(i, j), f.values[t.pivots[i]]));
    }
    if (dot.v == 0) continue;
    Elem s = fld.inv(dot);
    Vec lambda(x.size());
    lambda[j] = s;
    for (std::size_t i = 0; i < t.rank(); ++i) {
      lambda[t.pivots[i]] = fld.neg(fld.mul(s, t.m(i, j)));
    }
    r.status = ExtensionStatus::kNoExtension;
    r.certificate = std::move(lambda);
    r.reason = "the evaluation system is inconsistent";
    return r;
  }
  r.status = ExtensionStatus::kInconclusive;
  r.reason = "no certificate found for an inconsistent system";
  return r;
}

bool VerifyCertificate(const FnOnX& f, int a, const Vec& lambda) {
  const VarietyTable& x = *f.host;
  const Field& fld = x.field();
  if (lambda.size() != x.size()) return false;
  for (const auto& m : MonomialsUpTo(x.nvars(), a, static_cast<int>(fld.q()))) {
    PolyEvaluator ev(Poly::Monom(x.field_ptr(), m));
    Elem s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (lambda[i].v) s = fld.add(s, fld.mul(lambda[i], ev(x.point(i).data())));
    }
    if (s.v) return false;
  }
  return Dot(fld, lambda, f.values) == fld.one();
}

ExtensionResult ExtendOnXn(const XnModel& model, const FnOnX& f, int a,
                           const ConstructiveOptions& opts) {
  const Field& fld = model.field();
  const FieldPtr& fp = model.field_ptr();
  const XnSpec& spec = model.spec();
  const VarietyTable& x = *model.table();
  const std::size_t nd = spec.dim();
  RequireAdmissible(fld.spec(), a, static_cast<int>(spec.d), model.delta().m);
  Require(f.host->size() == x.size(), ErrorCode::kDimensionMismatch,
          "function is not on the X_n table");
  ExtensionResult r;
  r.engine = "constructive";

  if (opts.check_weak) {
    for (std::size_t dim : {1, 2}) {
      FlatCatalog cat = FlatsInBucket(x, std::nullopt, dim, opts.budget, opts.exec);
      if (cat.flats.empty()) continue;
      WeakTestResult w = IsWeaklyPolynomial(f, a, cat);
      if (!w.ok) {
        Fail(ErrorCode::kNotWeaklyPolynomial,
             "f has degree " + std::to_string(w.violation_degree) + " on a " +
                 std::to_string(dim) + "-flat inside X");
      }
    }
  }

  // Block products mu_i as polynomials on V.
  std::vector<Poly> mu;
  for (std::size_t i = 0; i + 1 < spec.n; ++i) {
    Monomial m(nd, 0);
    for (std::size_t j = 0; j < spec.d; ++j) m[spec.var(i, j)] = 1;
    mu.push_back(Poly::Monom(fp, m));
  }
  const std::vector<Vec> lpts = model.LPoints();

  Poly total(fp, nd);
  for (auto& [theta, comp] : ThetaDecompose(model, f, opts.exec)) {
    if (!theta.Admissible(a)) {
      Fail(ErrorCode::kNonAdmissibleComponentNonzero,
           "component at non-admissible character " + theta.ToString() + " is nonzero");
    }
    auto gamma = model.FindPlusGamma(theta, a);
    if (!gamma) {
      Fail(ErrorCode::kNoPlusGamma,
           "no gamma moves character " + theta.ToString() + " into the plus class");
    }
    const Character tg = theta.ComposeGamma(*gamma);
    // g(y) = f^theta(gamma y); h = g o kappa on L.
    Vec hv(lpts.size());
    for (std::size_t i = 0; i < lpts.size(); ++i) {
      hv[i] = comp.at(model.GammaAct(*gamma, model.Kappa(lpts[i])));
    }
    Poly h = Interpolate(fp, spec.n - 1, hv);
    if (h.degree() > a) {
      Fail(ErrorCode::kNotWeaklyPolynomial,
           "h has degree " + std::to_string(h.degree()) + " on L at character " +
               theta.ToString());
    }
    Poly fh = spec.n == 1 ? Poly::Constant(fp, nd, h.Coeff(Monomial{})) : h.Compose(mu);
    Monomial lead(nd, 0);
    for (std::size_t i = 0; i < spec.n; ++i) {
      for (std::size_t j = 1; j < spec.d; ++j) {
        lead[spec.var(i, j)] = static_cast<std::uint16_t>(tg.Alpha(i, 0, j));
      }
    }
    Poly p = Poly::Monom(fp, lead) * fh;
    if (p.degree() > a * static_cast<int>(spec.d)) {
      Fail(ErrorCode::kVanishingCheckFailed,
           "component polynomial has degree " + std::to_string(p.degree()) + " > ad");
    }
    // P agrees with g on X, so P o gamma^-1 agrees with f^theta.
    Poly ptheta = model.ComposeGamma(p, gamma->Inverse());
    if (!AgreesOn(ptheta, comp)) {
      Fail(ErrorCode::kVanishingCheckFailed,
           "f^theta - P does not vanish on X at character " + theta.ToString());
    }
    total += ptheta;
    r.theta_steps.push_back({theta, *gamma, h, ptheta});
  }

  // Homogeneous parts of degree in (a, ad] vanish on the cone X.
  for (int deg = total.degree(); deg > a; --deg) {
    Poly top = total.HomogeneousPart(deg);
    if (top.IsZero()) continue;
    if (!AgreesOn(top, FnOnX::Zero(f.host))) {
      Fail(ErrorCode::kVanishingCheckFailed,
           "degree " + std::to_string(deg) + " part does not vanish on X");
    }
    total -= top;
    r.stripped_degrees.push_back(deg);
  }
  if (!AgreesOn(total, f)) {
    Fail(ErrorCode::kVanishingCheckFailed, "final polynomial does not restrict to f");
  }
  r.status = ExtensionStatus::kExtended;
  r.poly = total.WithBound(Poly::kUnbounded);
  return r;
}

ExtensionResult ExtendInductive(const FnOnX& f, int a, const AffineFlat& w0,
                                const InductiveOptions& opts) {
  const VarietyTable& x = *f.host;
  const Field& fld = x.field();
  const FieldPtr& fp = x.field_ptr();
  const std::size_t n = x.nvars();
  const std::uint32_t q = fld.q();
  Require(w0.ambient_dim() == n, ErrorCode::kDimensionMismatch, "W_0 lives in another space");
  Require(a >= 0 && static_cast<std::uint32_t>(a) < q, ErrorCode::kInvalidArgument,
          "need 0 <= a < q");
  ExtensionResult r;
  r.engine = "inductive";

  // Adapted basis: directions of W_0, then standard vectors.
  EchelonBasis span(fp, n);
  std::vector<Vec> basis;
  for (const auto& d : w0.directions()) {
    span.Insert(d);
    basis.push_back(d);
  }
  for (std::size_t c = 0; c < n && basis.size() < n; ++c) {
    Vec e(n);
    e[c] = fld.one();
    if (span.Insert(e)) basis.push_back(e);
  }
  const std::size_t w = w0.dim();
  Matrix bm(n, n);  // columns are the basis vectors
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t c = 0; c < n; ++c) bm(c, k) = basis[k][c];
  }
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = bm(i, j);
    aug(i, n + i) = fld.one();
  }
  Rref rr = RowReduce(fld, aug);
  Matrix binv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) binv(i, j) = rr.m(i, n + j);
  }
  // y = binv (x - base), x = base + bm y.
  Vec shift = MatVec(fld, binv, w0.base());
  for (auto& e : shift) e = fld.neg(e);
  const AffineMap to_y(binv, shift);
  const AffineMap to_x(bm, w0.base());

  std::vector<Vec> ys(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) ys[i] = to_y.Apply(fld, x.point(i));
  auto level_of = [&](const Vec& y) {
    std::size_t top = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (y[c].v) top = c + 1;
    }
    return top <= w ? 0 : top - w;
  };
  std::vector<std::size_t> lvl(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) lvl[i] = level_of(ys[i]);

  // Base level.
  Poly g(fp, n);
  {
    std::vector<Vec> pts;
    Vec vals;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (lvl[i] == 0) {
        pts.push_back(ys[i]);
        vals.push_back(f.values[i]);
      }
    }
    if (opts.base_extension) {
      g = ComposeAffine(*opts.base_extension, to_x);
      PolyEvaluator ev(g);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        Require(ev(pts[i].data()) == vals[i], ErrorCode::kInvalidArgument,
                "base extension does not restrict to f on X cap W_0");
      }
    } else {
      auto s = SolveOnPoints(fp, n, w, a, pts, vals, opts.budget);
      if (!s) {
        Fail(ErrorCode::kResidualNotLowerDegree, "f has no degree-a extension on X cap W_0");
      }
      g = *s;
    }
  }

  for (std::size_t level = 1; level + w <= n; ++level) {
    const std::size_t c = w + level - 1;  // the slice coordinate
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (lvl[i] <= level) members.push_back(i);
    }
    Vec resid(x.size());
    {
      PolyEvaluator ev(g);
      for (std::size_t i : members) resid[i] = fld.sub(f.values[i], ev(ys[i].data()));
    }
    std::vector<Elem> matched{fld.zero()};
    for (std::size_t i : members) {
      if (ys[i][c].v == 0 && resid[i].v) {
        Fail(ErrorCode::kResidualNotLowerDegree, "residual does not vanish on the previous level");
      }
    }
    for (std::uint32_t bv = 1; bv < q; ++bv) {
      const Elem b(bv);
      std::vector<std::size_t> slice;
      for (std::size_t i : members) {
        if (ys[i][c] == b) slice.push_back(i);
      }
      if (slice.empty()) continue;
      SliceStep step{level, b, matched.size(), -1};
      const bool zero = std::all_of(slice.begin(), slice.end(),
                                    [&](std::size_t i) { return resid[i].v == 0; });
      if (static_cast<int>(matched.size()) > a) {
        if (!zero) {
          Fail(ErrorCode::kTooManySlices,
               "residual is nonzero on slice " + fld.ToString(b) + " after " +
                   std::to_string(matched.size()) + " matched slices at level " +
                   std::to_string(level));
        }
        r.slice_steps.push_back(step);
        continue;
      }
      if (!zero) {
        Elem denom = fld.one();
        for (Elem s : matched) denom = fld.mul(denom, fld.sub(b, s));
        const Elem scale = fld.inv(denom);
        std::vector<Vec> pts;
        Vec vals;
        for (std::size_t i : slice) {
          pts.push_back(ys[i]);
          vals.push_back(fld.mul(scale, resid[i]));
        }
        const int deg = a - static_cast<int>(matched.size());
        auto qp = SolveOnPoints(fp, n, c, deg, pts, vals, opts.budget);
        if (!qp) {
          Fail(ErrorCode::kResidualNotLowerDegree,
               "residual on slice " + fld.ToString(b) + " at level " + std::to_string(level) +
                   " is not of degree <= " + std::to_string(deg));
        }
        // On the slice, Q' * prod (y_c - s) = Q' * prod (b - s) = resid.
        Poly corr = *qp;
        for (Elem s : matched) {
          corr = corr * (Poly::Variable(fp, n, c) - Poly::Constant(fp, n, s));
        }
        step.q_degree = corr.degree();
        g += corr;
        PolyEvaluator ev(corr);
        for (std::size_t i : members) resid[i] = fld.sub(resid[i], ev(ys[i].data()));
      }
      matched.push_back(b);
      for (std::size_t i : members) {
        if (std::find(matched.begin(), matched.end(), ys[i][c]) != matched.end() &&
            resid[i].v) {
          Fail(ErrorCode::kResidualNotLowerDegree,
               "residual does not vanish on the matched slices at level " +
                   std::to_string(level));
        }
      }
      r.slice_steps.push_back(step);
    }
    for (std::size_t i : members) {
      if (resid[i].v) {
        Fail(ErrorCode::kResidualNotLowerDegree,
             "residual left at level " + std::to_string(level));
      }
    }
  }

  Poly out = ComposeAffine(g, to_y);
  if (!AgreesOn(out, f)) {
    Fail(ErrorCode::kVanishingCheckFailed, "final polynomial does not restrict to f");
  }
  r.status = ExtensionStatus::kExtended;
  r.poly = out;
  return r;
}

}  // namespace hirank
