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

#include "hirank/fibers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "hirank/kernels.hpp"

namespace hirank {

namespace {

CoefficientMap BuildMap(const PolyCollection& p, std::size_t m, const std::vector<int>& degrees) {
  const FieldPtr& fp = p.field_ptr();
  CoefficientMap cm;
  cm.m = m;
  cm.n = p.nvars();
  cm.source = p;
  const std::size_t ne = cm.nentries();
  const std::size_t ring = ne + m;
  // x_i -> sum_j A_ij X_j + s_i, X_j at index ne + j.
  std::vector<Poly> subs;
  for (std::size_t i = 0; i < cm.n; ++i) {
    Poly s = Poly::Variable(fp, ring, cm.WVar(i, m));
    for (std::size_t j = 0; j < m; ++j) {
      Monomial mon(ring, 0);
      mon[cm.WVar(i, j)] = 1;
      mon[ne + j] = 1;
      s.AddTerm(mon, fp->one());
    }
    subs.push_back(std::move(s));
  }
  for (std::size_t s = 0; s < p.size(); ++s) {
    std::vector<Monomial> lam = MonomialsUpTo(m, degrees[s]);
    std::map<Monomial, std::size_t> where;
    for (std::size_t k = 0; k < lam.size(); ++k) where[lam[k]] = k;
    std::vector<Poly> cs(lam.size(), Poly(fp, ne));
    Poly q = cm.n == 0 ? Poly::Constant(fp, ring, p.polys[s].Coeff(Monomial{}))
                       : p.polys[s].Compose(subs);
    for (const auto& [mon, c] : q.terms()) {
      Monomial wpart(mon.begin(), mon.begin() + ne);
      Monomial xpart(mon.begin() + ne, mon.end());
      auto it = where.find(xpart);
      Require(it != where.end(), ErrorCode::kDegreeExceeded, "pullback exceeds degree bound");
      cs[it->second].AddTerm(wpart, c);
    }
    cm.lambdas.push_back(std::move(lam));
    cm.coeffs.push_back(std::move(cs));
  }
  return cm;
}

std::vector<PolyEvaluator> Evaluators(const CoefficientMap& cm) {
  std::vector<PolyEvaluator> evs;
  for (const auto& cs : cm.coeffs) {
    for (const auto& c : cs) evs.emplace_back(c);
  }
  return evs;
}

std::vector<std::uint64_t> DirectHistogram(const CoefficientMap& cm, const Budget& budget,
                                           Exec exec) {
  const Field& f = cm.field();
  const std::uint32_t q = f.q();
  const std::size_t ne = cm.nentries();
  const std::size_t nt = cm.total();
  const std::uint64_t count = SatPow(q, ne);
  const std::uint64_t bins = SatPow(q, nt);
  budget.Check(count, budget.max_enumeration, "affine map enumeration");
  budget.Check(bins, budget.max_enumeration, "target histogram");
  if (exec == Exec::kSerial) {
    std::vector<std::uint64_t> hist(bins, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      Vec w = PointFromIndex(i, q, ne);
      ++hist[PointIndex(cm.Evaluate(w), q)];
    }
    return hist;
  }
  const std::vector<PolyEvaluator> evs = Evaluators(cm);
  return ParallelHistogram(bins, count, [&] {
    return [&, w = Vec(ne)](std::uint64_t i) mutable {
      PointFromIndex(i, q, w);
      std::uint64_t idx = 0;
      for (const auto& ev : evs) idx = idx * q + ev(w.data()).v;
      return idx;
    };
  });
}

// h[u + v] += a[u] b[v] over the additive group k^nt.
std::vector<std::uint64_t> Convolve(const Field& f, std::size_t nt,
                                    const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
  const std::uint32_t q = f.q();
  const std::uint64_t bins = a.size();
  std::vector<std::uint32_t> digits(bins * nt);
  for (std::uint64_t i = 0; i < bins; ++i) {
    std::uint64_t r = i;
    for (std::size_t k = nt; k-- > 0;) {
      digits[i * nt + k] = static_cast<std::uint32_t>(r % q);
      r /= q;
    }
  }
  std::vector<std::uint64_t> nzb;
  for (std::uint64_t v = 0; v < bins; ++v) {
    if (b[v]) nzb.push_back(v);
  }
  const std::uint16_t* add = f.add_table();
  std::vector<std::uint64_t> out(bins, 0);
  for (std::uint64_t u = 0; u < bins; ++u) {
    if (!a[u]) continue;
    const std::uint32_t* du = &digits[u * nt];
    for (std::uint64_t v : nzb) {
      const std::uint32_t* dv = &digits[v * nt];
      std::uint64_t idx = 0;
      for (std::size_t k = 0; k < nt; ++k) idx = idx * q + add[du[k] * q + dv[k]];
      out[idx] += a[u] * b[v];
    }
  }
  return out;
}

struct Split {
  std::vector<std::vector<std::size_t>> components;  // variables per part
  std::size_t unused = 0;                            // variables in no term
};

Split SplitVariables(const PolyCollection& p) {
  const std::size_t n = p.nvars();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> used(n, false);
  for (const auto& poly : p.polys) {
    for (const auto& [mon, c] : poly.terms()) {
      std::optional<std::size_t> first;
      for (std::size_t v = 0; v < n; ++v) {
        if (!mon[v]) continue;
        used[v] = true;
        if (first) parent[find(v)] = find(*first);
        else first = v;
      }
    }
  }
  Split s;
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) groups[find(v)].push_back(v);
    else ++s.unused;
  }
  for (auto& [root, vars] : groups) s.components.push_back(std::move(vars));
  return s;
}

std::vector<std::uint64_t> SeparableHistogram(const CoefficientMap& cm, const Budget& budget,
                                              Exec exec) {
  const Field& f = cm.field();
  const FieldPtr& fp = cm.source.field_ptr();
  const std::uint32_t q = f.q();
  const std::size_t nt = cm.total();
  const std::uint64_t bins = SatPow(q, nt);
  budget.Check(bins, budget.max_enumeration, "target histogram");
  std::vector<int> degrees;
  for (const auto& lam : cm.lambdas) degrees.push_back(TotalDegree(lam.front()));
  Split split = SplitVariables(cm.source);

  // Start from the point mass at the constant terms.
  Vec consts;
  for (std::size_t s = 0; s < cm.source.size(); ++s) {
    for (const auto& lam : cm.lambdas[s]) {
      consts.push_back(TotalDegree(lam) == 0 ? cm.source.polys[s].Coeff(Monomial(cm.n, 0))
                                             : Elem());
    }
  }
  std::vector<std::uint64_t> hist(bins, 0);
  hist[PointIndex(consts, q)] = SatPow(q, split.unused * (cm.m + 1));
  for (const auto& vars : split.components) {
    PolyCollection part;
    for (const auto& poly : cm.source.polys) {
      Poly r(fp, vars.size());
      for (const auto& [mon, c] : poly.terms()) {
        // Terms of a part touch only its variables; constants were placed
        // in the starting point mass.
        if (std::none_of(vars.begin(), vars.end(), [&](std::size_t v) { return mon[v] > 0; })) {
          continue;
        }
        Monomial sub(vars.size());
        for (std::size_t k = 0; k < vars.size(); ++k) sub[k] = mon[vars[k]];
        r.AddTerm(sub, c);
      }
      part.polys.push_back(std::move(r));
    }
    CoefficientMap pcm = BuildMap(part, cm.m, degrees);
    hist = Convolve(f, nt, hist, DirectHistogram(pcm, budget, exec));
  }
  return hist;
}

}  // namespace

std::size_t CoefficientMap::total() const {
  std::size_t t = 0;
  for (const auto& l : lambdas) t += l.size();
  return t;
}

AffineMap CoefficientMap::ToAffineMap(std::span<const Elem> w) const {
  Require(w.size() == nentries(), ErrorCode::kDimensionMismatch, "affine map entries");
  Matrix a(n, m);
  Vec s(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a(i, j) = w[WVar(i, j)];
    s[i] = w[WVar(i, m)];
  }
  return AffineMap(a, s);
}

Vec CoefficientMap::Evaluate(std::span<const Elem> w) const {
  Vec out;
  out.reserve(total());
  for (const auto& cs : coeffs) {
    for (const auto& c : cs) out.push_back(c.Eval(w));
  }
  return out;
}

CoefficientMap CoefficientMap::ChangeField(FieldPtr target) const {
  CoefficientMap out = *this;
  for (auto& p : out.source.polys) p = p.ChangeField(target);
  for (auto& cs : out.coeffs) {
    for (auto& c : cs) c = c.ChangeField(target);
  }
  return out;
}

CoefficientMap MakeCoefficientMap(const PolyCollection& p, std::size_t m, const Budget& budget) {
  p.Validate();
  budget.Check(p.nvars() * (m + 1), 64, "affine map entries");
  std::vector<int> degrees = p.degrees();
  for (int& d : degrees) d = std::max(d, 0);
  return BuildMap(p, m, degrees);
}

Vec TargetVector(const CoefficientMap& cm, const PolyCollection& target) {
  Require(target.size() == cm.lambdas.size(), ErrorCode::kDimensionMismatch,
          "one target per source polynomial");
  Vec out;
  for (std::size_t s = 0; s < target.size(); ++s) {
    Poly t = target.polys[s];
    Require(t.nvars() <= cm.m, ErrorCode::kDimensionMismatch, "target has too many variables");
    t = t.WithNvars(cm.m);
    const int d = TotalDegree(cm.lambdas[s].front());
    Require(t.degree() <= d, ErrorCode::kDegreeExceeded, "target degree exceeds source degree");
    for (const auto& lam : cm.lambdas[s]) out.push_back(t.Coeff(lam));
  }
  return out;
}

PolyCollection TargetFromVector(const CoefficientMap& cm, std::span<const Elem> v) {
  PolyCollection out;
  std::size_t k = 0;
  for (const auto& lams : cm.lambdas) {
    Poly t(cm.source.field_ptr(), cm.m);
    for (const auto& lam : lams) t.AddTerm(lam, v[k++]);
    out.polys.push_back(std::move(t));
  }
  return out;
}

std::vector<std::uint64_t> FiberHistogram(const CoefficientMap& cm, CountRoute route,
                                          const Budget& budget, Exec exec) {
  if (route == CountRoute::kAuto) {
    Split s = SplitVariables(cm.source);
    route = (s.components.size() > 1 || s.unused > 0) ? CountRoute::kSeparable
                                                      : CountRoute::kDirect;
  }
  return route == CountRoute::kDirect ? DirectHistogram(cm, budget, exec)
                                      : SeparableHistogram(cm, budget, exec);
}

FiberReport SolveFiber(const PolyCollection& p, const PolyCollection& target, std::size_t m,
                       const FiberOptions& opts) {
  CoefficientMap cm = MakeCoefficientMap(p, m, opts.budget);
  const Field& f = cm.field();
  const std::uint32_t q = f.q();
  const Vec b = TargetVector(cm, target);
  const std::size_t ne = cm.nentries();
  FiberReport r;
  r.target = target.CanonicalText();
  r.strategy = opts.strategy;
  r.expected_dim = static_cast<int>(ne) - static_cast<int>(cm.total());
  r.heuristic = std::pow(static_cast<double>(q), -static_cast<double>(cm.total()));
  const std::vector<PolyEvaluator> evs = Evaluators(cm);
  auto hit = [&](const Vec& w) {
    for (std::size_t k = 0; k < evs.size(); ++k) {
      if (evs[k](w.data()) != b[k]) return false;
    }
    return true;
  };
  if (opts.strategy == FiberStrategy::kExhaustive) {
    r.count_k = FiberHistogram(cm, opts.route, opts.budget, opts.exec)[PointIndex(b, q)];
    const std::uint64_t count = SatPow(q, ne);
    Vec w(ne);
    for (std::uint64_t i = 0; i < count && r.witnesses.size() < opts.max_witnesses &&
                              r.witnesses.size() < r.count_k;
         ++i) {
      PointFromIndex(i, q, w);
      if (hit(w)) r.witnesses.push_back(cm.ToAffineMap(w));
    }
    return r;
  }
  std::mt19937_64 gen(opts.seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, q - 1);
  Vec w(ne);
  r.samples = opts.samples;
  r.seed = opts.seed;
  for (std::uint64_t k = 0; k < opts.samples; ++k) {
    for (auto& e : w) e = Elem(coord(gen));
    if (hit(w)) {
      ++r.hits;
      if (r.witnesses.size() < opts.max_witnesses) r.witnesses.push_back(cm.ToAffineMap(w));
    }
  }
  r.rate = opts.samples ? static_cast<double>(r.hits) / static_cast<double>(opts.samples) : 0;
  return r;
}

ScanReport SurjectivityScan(const PolyCollection& p, std::size_t m, CountRoute route,
                            const Budget& budget, Exec exec) {
  CoefficientMap cm = MakeCoefficientMap(p, m, budget);
  std::vector<std::uint64_t> hist = FiberHistogram(cm, route, budget, exec);
  ScanReport r;
  r.targets = hist.size();
  for (std::uint64_t i = 0; i < hist.size(); ++i) {
    if (!hist[i]) r.missing.push_back(i);
  }
  return r;
}

FiberDimensionReport FiberDimension(const PolyCollection& p, const PolyCollection& target,
                                    std::size_t m, std::size_t l_max, const Budget& budget,
                                    Exec exec) {
  Require(l_max >= 2, ErrorCode::kInvalidArgument, "need at least two levels for a slope");
  CoefficientMap cm = MakeCoefficientMap(p, m, budget);
  const Field& base = cm.field();
  const Vec b = TargetVector(cm, target);
  for (Elem e : b) {
    Require(base.InPrimeField(e), ErrorCode::kInvalidArgument,
            "target coefficients must lie in the prime field");
  }
  FiberDimensionReport r;
  r.expected = static_cast<int>(cm.nentries()) - static_cast<int>(cm.total());
  for (std::size_t l = 1; l <= l_max; ++l) {
    FieldPtr fl = Field::Make(base.p(), base.l() * static_cast<std::uint32_t>(l));
    CoefficientMap cml = l == 1 ? cm : cm.ChangeField(fl);
    // Prime field elements keep their index in every extension.
    std::uint64_t n = FiberHistogram(cml, CountRoute::kAuto, budget, exec)[PointIndex(b, fl->q())];
    if (n == 0) {
      Fail(ErrorCode::kEmptyFiber, "fiber is empty over the degree " + std::to_string(l) +
                                       " extension");
    }
    r.counts.push_back(n);
    r.log_counts.push_back(std::log(static_cast<double>(n)) / std::log(static_cast<double>(base.q())));
  }
  r.slope = r.log_counts[l_max - 1] - r.log_counts[l_max - 2];
  r.flag = std::abs(r.slope - r.expected) > 0.2;
  return r;
}

CycloInt FiberCharacterSum(const CoefficientMap& cm, std::span<const Elem> target,
                           const Budget& budget) {
  const Field& f = cm.field();
  const std::uint32_t q = f.q();
  const std::size_t ne = cm.nentries();
  const std::size_t nt = cm.total();
  const std::uint64_t nw = SatPow(q, ne), na = SatPow(q, nt);
  budget.Check(SatPow(q, ne + nt), budget.max_enumeration, "fiber character sum");
  CycloSum s(f.p());
  Vec w(ne), alpha(nt);
  for (std::uint64_t i = 0; i < nw; ++i) {
    PointFromIndex(i, q, w);
    Vec u = cm.Evaluate(w);
    for (std::size_t k = 0; k < nt; ++k) u[k] = f.sub(u[k], target[k]);
    for (std::uint64_t j = 0; j < na; ++j) {
      PointFromIndex(j, q, alpha);
      s.Add(f.trace(Dot(f, alpha, u)));
    }
  }
  return CycloInt::FromSum(s);
}

}  // namespace hirank
