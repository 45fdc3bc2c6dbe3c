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

#include "hirank/suite.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hirank/extend.hpp"
#include "hirank/fibers.hpp"
#include "hirank/flats.hpp"
#include "hirank/rank.hpp"
#include "hirank/variety.hpp"
#include "hirank/weakpoly.hpp"
#include "hirank/xn.hpp"

namespace hirank {

namespace {

const char* const kNames[kCriterionCount] = {
    "example xy(x-y): weakly linear, not linear",
    "Schmidt rank of P_n and the singular bound",
    "weak = polynomial on X_2, engines agree",
    "exact Gowers, bias and multilinear suite",
    "surjectivity scan of P_3 over F_5",
    "fiber dimension slope for P_3 over F_5, F_25",
    "line-to-plane deficiency on X_3 vs rank-1 control",
    "size of X_3 and the character-sum expansion",
    "property suites",
};

CriterionResult Named(int id) {
  CriterionResult r;
  r.id = id;
  r.name = kNames[id - 1];
  return r;
}

// Collects failed checks; the criterion passes when none failed.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void Note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_ == 0; }
  std::string Detail() const {
    std::ostringstream o;
    o << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& n : notes_) o << "; " << n;
    if (failed_) {
      o << "; failed:";
      for (const auto& f : failures_) o << " [" << f << "]";
    }
    return o.str();
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

Json LoadGolden(const SuiteOptions& opts, const std::string& name) {
  auto path = std::filesystem::path(opts.golden_dir) / name;
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorCode::kIoError, "missing golden file " + path.string());
  return Json::parse(in);
}

std::string Str(const Rational& r) { return RationalToString(r); }

Poly RandomPoly(const FieldPtr& f, std::size_t n, int deg, std::mt19937_64& rng) {
  Poly p(f, n);
  const std::uint32_t q = f->q();
  auto mons = MonomialsUpTo(n, deg, static_cast<int>(f->p()));
  for (const auto& m : mons) p.AddTerm(m, Elem(static_cast<std::uint32_t>(rng() % q)));
  if (deg > 0) {
    std::vector<Monomial> top;
    for (const auto& m : mons) {
      if (TotalDegree(m) == deg) top.push_back(m);
    }
    if (!top.empty() && p.HomogeneousPart(deg).IsZero()) {
      p.AddTerm(top[rng() % top.size()], Elem(1 + static_cast<std::uint32_t>(rng() % (q - 1))));
    }
  }
  return p;
}

// The example function on xy(x-y) = 0: zero on both axes, x on the diagonal.
FnOnX ExampleFunction(const VarietyPtr& x) {
  Vec v(x->size());
  for (std::size_t i = 0; i < x->size(); ++i) {
    auto pt = x->point(i);
    if (pt[0].v != 0 && pt[1].v != 0) v[i] = pt[0];
  }
  return FnOnX(x, std::move(v));
}

// Sum over h in V^d of e_q((h_1..h_d)_P + R(h)), with R in d*n variables.
CycloSum MultilinearSum(const Poly& p, int d, const Poly* r) {
  const Field& f = p.field();
  const std::size_t n = p.nvars();
  const std::uint32_t q = f.q();
  const std::uint64_t size = SatPow(q, n);
  std::vector<Elem> table(size);
  std::vector<Elem> coords(size * n);
  PolyEvaluator ev(p);
  for (std::uint64_t i = 0; i < size; ++i) {
    PointFromIndex(i, q, std::span<Elem>(&coords[i * n], n));
    table[i] = ev(&coords[i * n]);
  }
  std::vector<std::uint32_t> add(size * size);
  for (std::uint64_t i = 0; i < size; ++i) {
    for (std::uint64_t j = 0; j < size; ++j) {
      Vec s(n);
      for (std::size_t k = 0; k < n; ++k) s[k] = f.add(coords[i * n + k], coords[j * n + k]);
      add[i * size + j] = static_cast<std::uint32_t>(PointIndex(s, q));
    }
  }
  std::optional<PolyEvaluator> rev;
  if (r) rev.emplace(*r);
  const std::uint64_t tuples = SatPow(size, d);
  CycloSum sum(f.p());
  std::vector<std::uint32_t> h(d), part(std::size_t{1} << d);
  Vec hc(n * d);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t rest = t;
    for (int i = d - 1; i >= 0; --i) {
      h[i] = static_cast<std::uint32_t>(rest % size);
      rest /= size;
    }
    Elem v;
    part[0] = 0;
    for (std::size_t mask = 0; mask < part.size(); ++mask) {
      if (mask) {
        int low = __builtin_ctzll(mask);
        part[mask] = add[std::size_t{part[mask & (mask - 1)]} * size + h[low]];
      }
      Elem term = table[part[mask]];
      v = (__builtin_popcountll(mask) & 1) ? f.sub(v, term) : f.add(v, term);
    }
    if (rev) {
      for (int i = 0; i < d; ++i) {
        std::copy_n(&coords[std::size_t{h[i]} * n], n, &hc[i * n]);
      }
      v = f.add(v, (*rev)(hc.data()));
    }
    sum.Add(f.trace(v));
  }
  return sum;
}

CriterionResult Example(const SuiteOptions& opts) {
  CriterionResult res = Named(1);
  Checks c;
  Json golden = LoadGolden(opts, "example1.json");
  for (std::uint32_t p : {5u, 7u, 11u}) {
    auto f = Field::Make(p);
    auto x = std::make_shared<const VarietyTable>(
        VarietyTable::Enumerate(ParseCollection("x1*x2*(x1-x2)", f), opts.budget, opts.exec));
    const std::string tag = "F_" + std::to_string(p);
    const Json& g = golden[std::to_string(p)];
    c.Expect(x->size() == g["points"].get<std::size_t>(), tag + " point count");
    FnOnX fn = ExampleFunction(x);
    auto weak = IsWeaklyPolynomial(fn, 1, WeakMode::kLines, opts.budget, opts.exec);
    c.Expect(weak.ok, tag + " weakly linear");
    auto ext = ExtendBySolver(fn, 1, opts.budget);
    c.Expect(ext.status == ExtensionStatus::kNoExtension, tag + " solver finds no extension");
    c.Expect(VerifyCertificate(fn, 1, ext.certificate), tag + " certificate verifies");
    auto qd = QuotientDim(*x, 1, opts.budget, opts.exec);
    c.Expect(qd.quotient >= 1, tag + " quotient >= 1");
    c.Expect(qd.dim_weak == g["dim_weak_lines"].get<std::size_t>() &&
                 qd.dim_poly == g["dim_poly"].get<std::size_t>(),
             tag + " dimensions match oracle");
    if (p == 7) {
      c.Note("F_7 dims weak " + std::to_string(qd.dim_weak) + ", poly " +
             std::to_string(qd.dim_poly));
    }
  }
  res.pass = c.ok();
  res.detail = c.Detail();
  return res;
}

CriterionResult SchmidtInstance(const SuiteOptions& opts) {
  CriterionResult res = Named(2);
  Checks c;
  Json golden = LoadGolden(opts, "schmidt.json");
  auto f = Field::Make(7);
  for (std::size_t n : {1u, 2u}) {
    Poly p = MakePn(f, XnSpec{n, 2});
    const std::string text = n == 1 ? "x1*x2" : "x1*x2+x3*x4";
    SchmidtOptions so;
    so.budget = opts.budget;
    so.exec = opts.exec;
    RankValue r = SchmidtRankExact(p, so);
    const int want = golden[text].get<int>();
    c.Expect(r == RankValue::Exact(want), "schmidt(P_" + std::to_string(n) + ") = " + r.ToString());
    c.Expect(r.kind == RankValue::Kind::kExact && 2 * r.value >= static_cast<int>(n),
             "schmidt >= n/d");
    auto sb = SingularRankBound(p, opts.budget, opts.exec);
    c.Expect(sb.codim == static_cast<int>(2 * n), "codim = 2n");
    c.Expect(sb.bound == Rational(n, 2), "bound = n/d, got " + Str(sb.bound));
    c.Note("P_" + std::to_string(n) + ": rank " + r.ToString() + ", bound " + Str(sb.bound));
  }
  res.pass = c.ok();
  res.detail = c.Detail();
  return res;
}

CriterionResult EqualityInstance(const SuiteOptions& opts) {
  CriterionResult res = Named(3);
  Checks c;
  Json golden = LoadGolden(opts, "x2_spaces.json");
  auto f = Field::Make(7);
  XnModel model(f, XnSpec{2, 2}, 6, opts.budget, opts.exec);
  const auto& x = model.table();
  c.Expect(x->size() == golden["points"].get<std::size_t>(), "|X_2| matches oracle");
  FnSpace weak = WeakpolySpace(*x, 2, opts.budget, opts.exec);
  FnSpace poly = PolyRestrictionSpace(*x, 2, opts.budget);
  c.Expect(weak.dim() == poly.dim(), "dim weak = dim poly");
  c.Expect(weak.dim() == golden["dim_weak_lines"].get<std::size_t>() &&
               poly.dim() == golden["dim_poly"].get<std::size_t>(),
           "dimensions match oracle");
  for (const auto& v : poly.basis) {
    c.Expect(SpaceContains(f, weak, v), "poly space inside weak space");
  }
  std::size_t agree = 0;
  for (const auto& b : weak.basis) {
    FnOnX fn(x, b);
    ConstructiveOptions co;
    co.budget = opts.budget;
    co.exec = opts.exec;
    auto r = ExtendOnXn(model, fn, 2, co);
    auto s = ExtendBySolver(fn, 2, opts.budget);
    bool ok = r.status == ExtensionStatus::kExtended && s.status == ExtensionStatus::kExtended &&
              r.poly->degree() <= 2 && AgreesOn(*r.poly, fn) && AgreesOn(*s.poly, fn);
    agree += ok;
  }
  c.Expect(agree == weak.dim(), "constructive and solver agree on the basis");
  c.Note("dim " + std::to_string(weak.dim()) + ", agreement " + std::to_string(agree) + "/" +
         std::to_string(weak.dim()));
  res.pass = c.ok();
  res.detail = c.Detail();
  return res;
}

CriterionResult GowersSuite(const SuiteOptions& opts) {
  CriterionResult res = Named(4);
  Checks c;
  std::mt19937_64 rng(opts.seed);
  // 200 random P: degree below d gives norm 1; degree d gives less when p > d.
  std::size_t instances = 0;
  for (auto [p, d] : {std::pair{3u, 2}, {5u, 2}, {5u, 3}, {3u, 3}}) {
    auto f = Field::Make(p);
    for (int i = 0; i < 50; ++i, ++instances) {
      int deg = static_cast<int>(rng() % (d + 1));
      Poly poly = RandomPoly(f, 3, deg, rng);
      auto g = GowersNorm(poly, d, {}, opts.budget, opts.exec);
      bool one = g.exact && *g.exact == 1;
      c.Expect(g.exact && *g.exact <= 1, "value_pow <= 1");
      if (poly.degree() < d) {
        c.Expect(one, "deg < d gives 1: " + RenderPoly(poly));
      } else if (p > static_cast<std::uint32_t>(d)) {
        c.Expect(!one, "deg = d gives < 1: " + RenderPoly(poly));
      }
    }
  }
  for (std::uint32_t p : {3u, 5u}) {
    auto f = Field::Make(p);
    auto b = Bias(ParsePoly("x1*x2", f, 3), opts.budget, opts.exec);
    c.Expect(b.SquaredRational() == Rational(1, p * p), "bias(x1x2) = 1/q over F_" +
                                                            std::to_string(p));
  }
  // |E e((h)_P + R(h))| <= |E e((h)_P)| for R of degree < d.
  std::size_t lemma = 0;
  for (auto [p, d, count] : {std::tuple{3u, 2, 15}, {5u, 2, 15}, {3u, 3, 15}, {5u, 3, 5}}) {
    auto f = Field::Make(p);
    for (int i = 0; i < count; ++i, ++lemma) {
      Poly poly = RandomPoly(f, 3, d, rng);
      Poly r = RandomPoly(f, 3 * d, d - 1, rng);
      CycloInt base = CycloAbs2(MultilinearSum(poly, d, nullptr));
      CycloInt shifted = CycloAbs2(MultilinearSum(poly, d, &r));
      c.Expect((base - shifted).Sign() >= 0, "multilinear inequality on " + RenderPoly(poly));
    }
  }
  // Sampled estimates against exact values.
  std::size_t sampled = 0;
  for (auto [p, d, count] : {std::tuple{3u, 2, 7}, {5u, 2, 7}, {5u, 3, 6}}) {
    auto f = Field::Make(p);
    for (int i = 0; i < count; ++i, ++sampled) {
      Poly poly = RandomPoly(f, 3, d, rng);
      auto exact = GowersNorm(poly, d, {}, opts.budget, opts.exec);
      GowersOptions go{GowersMode::kSampled, opts.samples, opts.seed + sampled};
      auto est = GowersNorm(poly, d, go, opts.budget, opts.exec);
      double diff = std::abs(est.value_pow - exact.value_pow);
      c.Expect(diff <= 3 * est.std_error + 1e-12,
               "sampled within 3 stderr on " + RenderPoly(poly));
    }
  }
  c.Note(std::to_string(instances) + " norm instances, " + std::to_string(lemma) +
         " multilinear pairs, " + std::to_string(sampled) + " sampled");
  res.pass = c.ok();
  res.detail = c.Detail();
  return res;
}

CriterionResult SurjectivityInstance(const SuiteOptions& opts) {
  CriterionResult res = Named(5);
  Checks c;
  Json golden = LoadGolden(opts, "fiber_scan.json");
  auto f = Field::Make(5);
  auto p3 = ParseCollection("x1*x2+x3*x4+x5*x6", f);
  auto scan = SurjectivityScan(p3, 1, CountRoute::kDirect, opts.budget, opts.exec);
  c.Expect(scan.missing.empty(), "P_3 is onto");
  auto ctl = SurjectivityScan(ParseCollection("x1*x2", f), 1, CountRoute::kDirect, opts.budget,
                              opts.exec);
  c.Expect(!ctl.missing.empty(), "x1x2 misses targets");
  c.Expect(ctl.missing == golden["x1*x2"]["missing"].get<std::vector<std::uint64_t>>(),
           "x1x2 missing list matches oracle");
  c.Note("P_3 missing " + std::to_string(scan.missing.size()) + "/" +
         std::to_string(scan.targets) + ", x1x2 missing " + std::to_string(ctl.missing.size()));
  res.pass = c.ok();
  res.detail = c.Detail();
  return res;
}

CriterionResult FiberDimensionInstance(const SuiteOptions& opts) {
  CriterionResult res = Named(6);
  Checks c;
  Json golden = LoadGolden(opts, "fiber_counts.json")["counts"];
  auto f = Field::Make(5);
  auto p3 = ParseCollection("x1*x2+x3*x4+x5*x6", f);
  std::ostringstream slopes;
  for (const char* q : {"0", "x1", "x1^2"}) {
    auto target = ParseCollection(q, f, 1);
    auto r = FiberDimension(p3, target, 1, 2, opts.budget, opts.exec);
    auto want = golden[q].get<std::vector<std::uint64_t>>();
    c.Expect(r.counts == want, std::string("counts for Q = ") + q + " match oracle");
    c.Expect(r.expected == 9, "expected dimension 9");
    c.Expect(std::abs(r.slope - 9) <= 0.2, std::string("slope near 9 for Q = ") + q);
    slopes << (slopes.tellp() ? ", " : "") << q << ": " << r.slope;
  }
  c.Note("slopes " + slopes.str());
  res.pass = c.ok();
  res.detail = c.Detail();
  return res;
}

CriterionResult DeficiencyInstance(const SuiteOptions& opts) {
  CriterionResult res = Named(7);
  Checks c;
  Json golden = LoadGolden(opts, "deficiency.json");
  auto f = Field::Make(7);
  auto measure = [&](const std::string& eq) {
    auto x = VarietyTable::Enumerate(ParseCollection(eq, f, 6), opts.budget, opts.exec);
    x.AttachSlice(ParsePoly("x1", f, 6));
    auto cat = FlatsInBucket(x, Elem(1), 1, opts.budget, opts.exec);
    return FlatExtensionDeficiency(x, cat, opts.budget, opts.exec);
  };
  auto x3 = measure("x1*x2+x3*x4+x5*x6");
  auto ctl = measure("x1*x2");
  const Json& gx = golden["x3"];
  const Json& gc = golden["control_x1x2"];
  c.Expect(x3.total == gx["lines"].get<std::uint64_t>() &&
               ctl.total == gc["lines"].get<std::uint64_t>(),
           "line counts match oracle");
  c.Expect(x3.fraction <= Rational(gx["deficient"].get<std::uint64_t>(),
                                   gx["lines"].get<std::uint64_t>()),
           "X_3 deficiency within oracle value");
  c.Expect(ctl.deficient == gc["deficient"].get<std::uint64_t>(), "control matches oracle");
  c.Expect(x3.fraction < ctl.fraction, "X_3 strictly below control");
  c.Note("X_3 " + std::to_string(x3.deficient) + "/" + std::to_string(x3.total) + ", control " +
         std::to_string(ctl.deficient) + "/" + std::to_string(ctl.total));
  res.data = Json{{"x3", ToJson(x3)}, {"control", ToJson(ctl)}};
  res.pass = c.ok();
  res.detail = c.Detail();
  return res;
}

CriterionResult SizeInstance(const SuiteOptions& opts) {
  CriterionResult res = Named(8);
  Checks c;
  Json golden = LoadGolden(opts, "xn_counts.json");
  auto f = Field::Make(7);
  Poly p3 = MakePn(f, XnSpec{3, 2});
  const std::uint64_t count = CountPoints(PolyCollection{{p3}}, opts.budget, opts.exec);
  c.Expect(count == golden["counts"]["3"].get<std::uint64_t>(), "|X_3| matches oracle");
  const long long q = 7, q4 = q * q * q * q, q5 = q4 * q;
  c.Expect(std::llabs(static_cast<long long>(count) - q5) <= q4, "||X| - q^5| <= q^4");
  // q |X| = sum over a in k of sum over v of e_q(a P(v)).
  CycloInt total(f->p());
  for (std::uint32_t a = 0; a < f->q(); ++a) {
    total = total + CycloInt::FromSum(CharacterSum(p3.Scaled(Elem(a)), opts.budget, opts.exec));
  }
  auto as_int = total.AsInteger();
  c.Expect(as_int && *as_int == BigInt(count) * q, "character-sum expansion equals q|X|");
  c.Note("|X_3| = " + std::to_string(count));
  res.pass = c.ok();
  res.detail = c.Detail();
  return res;
}

CriterionResult PropertySuites(const SuiteOptions& opts) {
  CriterionResult res = Named(9);
  Checks c;
  std::mt19937_64 rng(opts.seed);
  auto f = Field::Make(7);
  XnModel model(f, XnSpec{2, 2}, 6, opts.budget, opts.exec);
  const auto& x = model.table();
  const auto torus = model.TorusElements();
  const auto gammas = model.GammaElements();

  // Group laws and invariance of X_2.
  bool laws = true, invariant = true;
  for (int i = 0; i < 50; ++i) {
    const Vec& t1 = torus[rng() % torus.size()];
    const Vec& t2 = torus[rng() % torus.size()];
    const auto& g1 = gammas[rng() % gammas.size()];
    const auto& g2 = gammas[rng() % gammas.size()];
    auto v = x->point(rng() % x->size());
    Vec t12(t1.size());
    for (std::size_t k = 0; k < t1.size(); ++k) t12[k] = f->mul(t1[k], t2[k]);
    laws = laws && model.TorusAct(t12, v) == model.TorusAct(t1, model.TorusAct(t2, v));
    laws = laws && model.GammaAct(g1.After(g2), v) == model.GammaAct(g1, model.GammaAct(g2, v));
    laws = laws && model.GammaAct(model.GammaIdentity(), v) == Vec(v.begin(), v.end());
    laws = laws && model.GammaAct(g1.Inverse(), model.GammaAct(g1, v)) == Vec(v.begin(), v.end());
  }
  for (std::size_t i = 0; i < x->size(); ++i) {
    for (const auto& t : torus) invariant = invariant && x->Contains(model.TorusAct(t, x->point(i)));
    for (const auto& g : gammas) invariant = invariant && x->Contains(model.GammaAct(g, x->point(i)));
  }
  c.Expect(laws, "torus and gamma action laws");
  c.Expect(invariant, "X_2 invariant under T and Gamma");

  // Theta decomposition re-sums and each component is equivariant.
  for (int trial = 0; trial < 3; ++trial) {
    Vec vals(x->size());
    for (auto& e : vals) e = Elem(static_cast<std::uint32_t>(rng() % 7));
    FnOnX fn(x, vals);
    auto comps = ThetaDecompose(model, fn, opts.exec);
    FnOnX sum = FnOnX::Zero(x);
    bool equivariant = true;
    for (const auto& [theta, part] : comps) {
      sum = sum + part;
      for (std::size_t i = 0; i < x->size() && equivariant; i += 7) {
        const Vec& t = torus[rng() % torus.size()];
        Elem lhs = part.at(model.TorusAct(t, x->point(i)));
        Elem rhs = f->mul(theta.Eval(*f, model.delta(), t), part.values[i]);
        equivariant = lhs == rhs;
      }
    }
    c.Expect(sum == fn, "theta components re-sum");
    c.Expect(equivariant, "theta components are equivariant");
  }

  // Weakly polynomial functions pull back to degree <= a on L along every gamma.
  FnSpace weak = WeakpolySpace(*x, 2, opts.budget, opts.exec);
  bool pol = true;
  for (const auto& b : weak.basis) {
    FnOnX fn(x, b);
    for (const auto& g : gammas) {
      Vec values(f->q());
      for (std::uint32_t i = 0; i < f->q(); ++i) {
        Vec free{Elem(i)};
        values[i] = fn.at(model.GammaAct(g, model.Kappa(model.LPoint(free))));
      }
      pol = pol && Interpolate(f, 1, values).degree() <= 2;
    }
  }
  c.Expect(pol, "pullbacks along kappa_gamma have degree <= a");

  // A polynomial of degree <= 4 vanishing on Delta^N is zero.
  const auto& delta = model.delta();
  for (std::size_t nv = 1; nv <= 3; ++nv) {
    auto mons = MonomialsUpTo(nv, 4);
    const std::uint64_t pts = SatPow(delta.m, nv);
    Matrix e(mons.size(), pts);
    for (std::uint64_t k = 0; k < pts; ++k) {
      Vec pt(nv);
      std::uint64_t rest = k;
      for (std::size_t i = 0; i < nv; ++i, rest /= delta.m) pt[i] = delta.elements[rest % delta.m];
      for (std::size_t r = 0; r < mons.size(); ++r) e(r, k) = Poly::Monom(f, mons[r]).Eval(pt);
    }
    c.Expect(Rank(*f, e) == mons.size(), "evaluation on Delta^" + std::to_string(nv) +
                                             " is injective");
  }

  // Planted fibers are found, and counts match the character-sum identity.
  for (const auto& [p, text] : {std::pair{5u, "x1*x2"}, {3u, "x1*x2+x3*x4"}}) {
    auto fp = Field::Make(p);
    auto pc = ParseCollection(text, fp);
    auto cm = MakeCoefficientMap(pc, 1, opts.budget);
    for (int trial = 0; trial < 4; ++trial) {
      Vec w(cm.nentries());
      for (auto& e : w) e = Elem(static_cast<std::uint32_t>(rng() % p));
      AffineMap phi = cm.ToAffineMap(w);
      PolyCollection target{{ComposeAffine(pc.polys[0], phi)}};
      FiberOptions fo;
      fo.max_witnesses = SatPow(p, cm.nentries());
      fo.budget = opts.budget;
      fo.exec = opts.exec;
      auto rep = SolveFiber(pc, target, 1, fo);
      bool found = std::find(rep.witnesses.begin(), rep.witnesses.end(), phi) != rep.witnesses.end();
      c.Expect(found && rep.witnesses.size() == rep.count_k, std::string("planted map found for ") + text);
      CycloInt cs = FiberCharacterSum(cm, TargetVector(cm, target), opts.budget);
      auto as_int = cs.AsInteger();
      c.Expect(as_int && *as_int == BigInt(rep.count_k) * BigInt(SatPow(p, cm.total())),
               std::string("counting identity for ") + text);
    }
  }

  // Engine agreement: constructive vs solver on random weak functions of X_2,
  // inductive vs solver on random quadratics on X_3.
  for (int trial = 0; trial < 3; ++trial) {
    Vec vals(x->size());
    for (const auto& b : weak.basis) {
      Elem k(static_cast<std::uint32_t>(rng() % 7));
      for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = f->add(vals[i], f->mul(k, b[i]));
    }
    FnOnX fn(x, vals);
    ConstructiveOptions co;
    co.budget = opts.budget;
    co.exec = opts.exec;
    auto r = ExtendOnXn(model, fn, 2, co);
    auto s = ExtendBySolver(fn, 2, opts.budget);
    c.Expect(r.status == ExtensionStatus::kExtended && s.status == ExtensionStatus::kExtended &&
                 AgreesOn(*r.poly, fn) && AgreesOn(*s.poly, fn),
             "constructive and solver agree on X_2");
  }
  XnModel model3(f, XnSpec{3, 2}, 6, opts.budget, opts.exec);
  const auto& x3 = model3.table();
  std::vector<Vec> dirs;
  for (std::size_t k = 0; k < 4; ++k) {
    Vec e(6);
    e[k] = Elem(1);
    dirs.push_back(e);
  }
  AffineFlat w0(*f, Vec(6), dirs);
  for (int trial = 0; trial < 3; ++trial) {
    FnOnX fn = FnOnX::FromPoly(x3, RandomPoly(f, 6, 2, rng));
    InductiveOptions io;
    io.budget = opts.budget;
    auto r = ExtendInductive(fn, 2, w0, io);
    auto s = ExtendBySolver(fn, 2, opts.budget);
    c.Expect(r.status == ExtensionStatus::kExtended && s.status == ExtensionStatus::kExtended &&
                 r.poly->degree() <= 2 && AgreesOn(*r.poly, fn) && AgreesOn(*s.poly, fn),
             "inductive and solver agree on X_3");
  }
  res.pass = c.ok();
  res.detail = c.Detail();
  return res;
}

}  // namespace

CriterionResult RunCriterion(int id, const SuiteOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Require(id >= 1 && id <= kCriterionCount, ErrorCode::kInvalidArgument,
          "no criterion " + std::to_string(id));
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = Example(opts); break;
      case 2: r = SchmidtInstance(opts); break;
      case 3: r = EqualityInstance(opts); break;
      case 4: r = GowersSuite(opts); break;
      case 5: r = SurjectivityInstance(opts); break;
      case 6: r = FiberDimensionInstance(opts); break;
      case 7: r = DeficiencyInstance(opts); break;
      case 8: r = SizeInstance(opts); break;
      case 9: r = PropertySuites(opts); break;
    }
  } catch (const Error& e) {
    r = Named(id);
    r.pass = false;
    r.detail = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> RunSuite(const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) {
      continue;
    }
    out.push_back(RunCriterion(id, opts));
  }
  return out;
}

Json ToJson(const CriterionResult& r) {
  Json j{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
  if (!r.data.is_null()) j["data"] = r.data;
  return j;
}

std::string FormatTable(const std::vector<CriterionResult>& results) {
  std::ostringstream o;
  for (const auto& r : results) {
    o << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " (" << std::fixed;
    o.precision(2);
    o << r.seconds << "s): " << r.detail << "\n";
  }
  return o.str();
}

}  // namespace hirank
