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

#include "hirank/rank.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hirank/affine.hpp"
#include "hirank/kernels.hpp"
#include "hirank/linalg.hpp"

namespace hirank {

std::optional<Rational> BiasResult::SquaredRational() const {
  auto n = abs2.AsInteger();
  if (!n) return std::nullopt;
  return Rational(*n, denominator);
}

CycloSum CharacterSum(const Poly& p, const Budget& budget, Exec exec) {
  const Field& f = p.field();
  const std::uint32_t q = f.q();
  const std::size_t n = p.nvars();
  const std::uint64_t count = SatPow(q, n);
  budget.Check(count, budget.max_enumeration, "character sum over F_q^n");
  if (exec == Exec::kSerial) {
    CycloSum s(f.p());
    for (std::uint64_t i = 0; i < count; ++i) {
      s.Add(f.trace(p.Eval(PointFromIndex(i, q, n))));
    }
    return s;
  }
  PolyEvaluator ev(p);
  return ParallelTraceSum(f.p(), count, [&] {
    return [&, x = Vec(n)](std::uint64_t i) mutable {
      PointFromIndex(i, q, x);
      return f.trace(ev(x.data()));
    };
  });
}

BiasResult Bias(const Poly& p, const Budget& budget, Exec exec) {
  BiasResult r;
  r.abs2 = CycloAbs2(CharacterSum(p, budget, exec));
  r.denominator = BigInt(1);
  for (std::size_t i = 0; i < 2 * p.nvars(); ++i) r.denominator *= p.field().q();
  long double v = r.abs2.RealApprox();
  r.value = static_cast<double>(std::sqrt(std::max<long double>(v, 0) /
                                          r.denominator.convert_to<long double>()));
  return r;
}

namespace {

// Sum of e_q((h_1..h_d)_P at x) over x in V (when full) and h in V^d.
CycloSum GowersSumSerial(const Poly& p, int d, bool full) {
  const Field& f = p.field();
  const std::uint32_t q = f.q();
  const std::size_t n = p.nvars();
  const std::size_t blocks = d + (full ? 1 : 0);
  const std::uint64_t count = SatPow(q, n * blocks);
  CycloSum s(f.p());
  for (std::uint64_t i = 0; i < count; ++i) {
    Vec all = PointFromIndex(i, q, n * blocks);
    Vec x(n);
    std::size_t off = 0;
    if (full) {
      std::copy_n(all.begin(), n, x.begin());
      off = n;
    }
    std::vector<Vec> hs;
    for (int k = 0; k < d; ++k) {
      hs.emplace_back(all.begin() + off + k * n, all.begin() + off + (k + 1) * n);
    }
    s.Add(f.trace(DerivativeForm(p, hs, x)));
  }
  return s;
}

CycloSum GowersSumParallel(const Poly& p, int d, bool full, const Budget& budget) {
  const Field& f = p.field();
  const std::uint32_t q = f.q();
  const std::size_t n = p.nvars();
  const std::size_t blocks = d + (full ? 1 : 0);
  const std::uint64_t vsize = SatPow(q, n);
  budget.Check(vsize, budget.max_enumeration, "Gowers value table");
  std::vector<std::uint16_t> table(vsize);
  {
    PolyEvaluator ev(p);
#pragma omp parallel
    {
      Vec x(n);
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(vsize); ++i) {
        PointFromIndex(static_cast<std::uint64_t>(i), q, x);
        table[i] = static_cast<std::uint16_t>(ev(x.data()).v);
      }
    }
  }
  const std::uint64_t count = SatPow(q, n * blocks);
  const std::uint16_t* add = f.add_table();
  const std::uint16_t* neg = f.neg_table();
  const std::uint32_t subsets = 1u << d;
  return ParallelTraceSum(f.p(), count, [&] {
    struct State {
      std::vector<std::uint32_t> digits;  // blocks * n
      std::vector<std::uint32_t> sums;    // subsets * n
    };
    return [&, st = State{std::vector<std::uint32_t>(blocks * n),
                          std::vector<std::uint32_t>(subsets * n)}](
               std::uint64_t i) mutable {
      for (std::size_t k = blocks * n; k-- > 0;) {
        st.digits[k] = static_cast<std::uint32_t>(i % q);
        i /= q;
      }
      const std::uint32_t* h = st.digits.data() + (full ? n : 0);
      for (std::size_t c = 0; c < n; ++c) st.sums[c] = full ? st.digits[c] : 0;
      std::uint32_t acc = 0;
      for (std::uint32_t s = 0; s < subsets; ++s) {
        std::uint32_t* cur = &st.sums[s * n];
        if (s) {
          int low = std::countr_zero(s);
          const std::uint32_t* prev = &st.sums[(s & (s - 1)) * n];
          const std::uint32_t* hv = h + low * n;
          for (std::size_t c = 0; c < n; ++c) cur[c] = add[prev[c] * q + hv[c]];
        }
        std::uint64_t idx = 0;
        for (std::size_t c = 0; c < n; ++c) idx = idx * q + cur[c];
        std::uint32_t v = table[idx];
        acc = add[acc * q + ((std::popcount(s) & 1) ? neg[v] : v)];
      }
      return f.trace(Elem(acc));
    };
  });
}

}  // namespace

GowersResult GowersNorm(const Poly& p, int d, const GowersOptions& opts,
                        const Budget& budget, Exec exec) {
  Require(d >= 1, ErrorCode::kInvalidArgument, "Gowers order must be >= 1");
  const Field& f = p.field();
  const std::uint32_t q = f.q();
  const std::size_t n = p.nvars();
  const bool full = p.degree() > d;
  GowersResult r;
  r.d = d;
  r.mode = opts.mode;
  if (opts.mode == GowersMode::kExact) {
    const std::size_t blocks = d + (full ? 1 : 0);
    budget.Check(SatPow(q, n * blocks), budget.max_gowers, "exact Gowers sum");
    CycloSum s = exec == Exec::kSerial ? GowersSumSerial(p, d, full)
                                       : GowersSumParallel(p, d, full, budget);
    r.numerator = CycloInt::FromSum(s);
    r.denominator = BigInt(1);
    for (std::size_t i = 0; i < n * blocks; ++i) r.denominator *= q;
    if (auto k = r.numerator.AsInteger()) r.exact = Rational(*k, r.denominator);
    r.value_pow = static_cast<double>(r.numerator.RealApprox() /
                                      r.denominator.convert_to<long double>());
    return r;
  }

  // Stratified by the first coordinate of h_1; one generator per stratum.
  Require(n >= 1, ErrorCode::kInvalidArgument, "sampling needs nvars >= 1");
  Require(opts.samples >= q, ErrorCode::kInvalidArgument,
          "need at least one sample per stratum");
  PolyEvaluator ev(p);
  const int blocks = d + (full ? 1 : 0);
  std::vector<double> mean(q), var(q);
  std::vector<std::uint64_t> ns(q);
  const double two_pi_over_p = 2 * std::numbers::pi / f.p();
  auto run_stratum = [&](std::uint32_t s) {
    std::uint64_t ns_s = opts.samples / q + (s < opts.samples % q ? 1 : 0);
    std::mt19937_64 gen(opts.seed * 0x9E3779B97F4A7C15ull + s);
    std::uniform_int_distribution<std::uint32_t> coord(0, q - 1);
    std::vector<Vec> pts(blocks, Vec(n));
    Vec x(n);
    std::vector<Vec> hs(d, Vec(n));
    double sum = 0, sum2 = 0;
    for (std::uint64_t k = 0; k < ns_s; ++k) {
      for (int b = 0; b < blocks; ++b) {
        for (std::size_t c = 0; c < n; ++c) pts[b][c] = Elem(coord(gen));
      }
      int off = full ? 1 : 0;
      pts[off][0] = Elem(s);
      x = full ? pts[0] : Vec(n);
      for (int j = 0; j < d; ++j) hs[j] = pts[off + j];
      Elem val;
      Vec pt(n);
      for (std::uint32_t w = 0; w < (1u << d); ++w) {
        pt = x;
        for (int j = 0; j < d; ++j) {
          if (w >> j & 1) AxpyRow(f, f.one(), hs[j], pt);
        }
        Elem e = ev(pt.data());
        val = (std::popcount(w) & 1) ? f.sub(val, e) : f.add(val, e);
      }
      double c = std::cos(two_pi_over_p * f.trace(val));
      sum += c;
      sum2 += c * c;
    }
    ns[s] = ns_s;
    mean[s] = sum / ns_s;
    var[s] = ns_s > 1 ? std::max(0.0, (sum2 - sum * sum / ns_s) / (ns_s - 1)) : 0;
  };
  if (exec == Exec::kSerial) {
    for (std::uint32_t s = 0; s < q; ++s) run_stratum(s);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(q); ++s) {
      run_stratum(static_cast<std::uint32_t>(s));
    }
  }
  double est = 0, v = 0;
  for (std::uint32_t s = 0; s < q; ++s) {
    est += mean[s] / q;
    v += var[s] / (double(q) * q * ns[s]);
  }
  r.value_pow = est;
  r.std_error = std::sqrt(v);
  r.samples = opts.samples;
  r.seed = opts.seed;
  return r;
}

double AnalyticRank(const GowersResult& g, std::uint32_t q) {
  double v = g.value_pow;
  if (g.exact) {
    if (*g.exact == 0) return std::numeric_limits<double>::infinity();
    v = RationalToDouble(*g.exact);
  }
  if (v <= 0) return std::numeric_limits<double>::infinity();
  return -std::log(v) / std::log(static_cast<double>(q)) / std::ldexp(1.0, g.d);
}

std::string RankValue::ToString() const {
  switch (kind) {
    case Kind::kExact: return std::to_string(value);
    case Kind::kAbove: return ">" + std::to_string(value);
    case Kind::kInfinite: return "inf";
  }
  return "?";
}

namespace {

class MonomialIndex {
 public:
  MonomialIndex(std::size_t n, int deg) : monos_(MonomialsUpTo(n, deg)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
  }
  std::size_t size() const { return monos_.size(); }
  const Monomial& operator[](std::size_t i) const { return monos_[i]; }
  std::size_t at(const Monomial& m) const { return index_.at(m); }
  Vec ToVec(const Poly& p) const {
    Vec v(size());
    for (const auto& [m, c] : p.terms()) v[at(m)] = c;
    return v;
  }

 private:
  std::vector<Monomial> monos_;
  std::map<Monomial, std::size_t, GrlexGreater> index_;
};

Monomial AddMono(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return m;
}

// Decides whether P lies in U * P_{D-1} for r-dimensional subspaces U of
// P_{D-1}, enumerating U by reduced echelon form. Returns the basis of the
// first U found in enumeration order.
class SubspaceSearch {
 public:
  SubspaceSearch(const Poly& p, int big_d, int r, const SchmidtOptions& opts)
      : p_(p), f_(p.field()), r_(r), opts_(opts),
        basis_(p.nvars(), big_d - 1), target_(p.nvars(), 2 * big_d - 2) {
    prod_.resize(basis_.size() * basis_.size());
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      for (std::size_t b = 0; b < basis_.size(); ++b) {
        prod_[a * basis_.size() + b] = target_.at(AddMono(basis_[a], basis_[b]));
      }
    }
    pvec_ = target_.ToVec(p);
  }

  std::optional<std::vector<Vec>> Run() {
    const std::size_t big_n = basis_.size();
    const std::uint32_t q = f_.q();
    if (static_cast<std::size_t>(r_) > big_n) return std::nullopt;
    // Budget: total subspace count.
    std::uint64_t total = 0;
    std::vector<std::size_t> piv(r_);
    for (std::size_t i = 0; i < piv.size(); ++i) piv[i] = i;
    std::vector<std::vector<std::size_t>> pivot_sets;
    while (true) {
      pivot_sets.push_back(piv);
      int k = r_ - 1;
      while (k >= 0 && piv[k] == big_n - r_ + k) --k;
      if (k < 0) break;
      ++piv[k];
      for (int j = k + 1; j < r_; ++j) piv[j] = piv[j - 1] + 1;
    }
    for (const auto& ps : pivot_sets) {
      total = std::min<std::uint64_t>(UINT64_MAX / 2, total + SatPow(q, FreeCount(ps)));
    }
    opts_.budget.Check(total, opts_.budget.max_search, "Schmidt rank subspace search");

    for (const auto& ps : pivot_sets) {
      // Free slots: (row, col) with col > pivot and col not a pivot.
      std::vector<std::pair<int, std::size_t>> slots;
      for (int i = 0; i < r_; ++i) {
        for (std::size_t c = ps[i] + 1; c < big_n; ++c) {
          if (std::find(ps.begin(), ps.end(), c) == ps.end()) slots.push_back({i, c});
        }
      }
      const std::uint64_t count = SatPow(q, slots.size());
      std::atomic<std::uint64_t> best{UINT64_MAX};
      auto test = [&](std::uint64_t idx) {
        std::vector<Vec> rows = Rows(ps, slots, idx);
        return Spans(rows);
      };
      if (opts_.exec == Exec::kSerial) {
        for (std::uint64_t i = 0; i < count; ++i) {
          if (test(i)) {
            best = i;
            break;
          }
        }
      } else {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
          if (static_cast<std::uint64_t>(i) > best.load(std::memory_order_relaxed)) continue;
          if (test(static_cast<std::uint64_t>(i))) {
            std::uint64_t cur = best.load();
            while (static_cast<std::uint64_t>(i) < cur &&
                   !best.compare_exchange_weak(cur, static_cast<std::uint64_t>(i))) {
            }
          }
        }
      }
      if (best != UINT64_MAX) return Rows(ps, slots, best);
    }
    return std::nullopt;
  }

  const MonomialIndex& basis() const { return basis_; }
  const MonomialIndex& target() const { return target_; }

  // Columns Q_i * mu for every row Q_i and basis monomial mu.
  std::vector<Vec> Products(const std::vector<Vec>& rows) const {
    const std::size_t big_n = basis_.size();
    std::vector<Vec> out;
    for (const auto& q : rows) {
      for (std::size_t mu = 0; mu < big_n; ++mu) {
        Vec v(target_.size());
        for (std::size_t b = 0; b < big_n; ++b) {
          if (q[b].v) v[prod_[b * big_n + mu]] = f_.add(v[prod_[b * big_n + mu]], q[b]);
        }
        out.push_back(std::move(v));
      }
    }
    return out;
  }
  const Vec& pvec() const { return pvec_; }

 private:
  std::size_t FreeCount(const std::vector<std::size_t>& ps) const {
    std::size_t free = 0;
    for (int i = 0; i < r_; ++i) {
      for (std::size_t c = ps[i] + 1; c < basis_.size(); ++c) {
        if (std::find(ps.begin(), ps.end(), c) == ps.end()) ++free;
      }
    }
    return free;
  }

  std::vector<Vec> Rows(const std::vector<std::size_t>& ps,
                        const std::vector<std::pair<int, std::size_t>>& slots,
                        std::uint64_t idx) const {
    const std::uint32_t q = f_.q();
    std::vector<Vec> rows(r_, Vec(basis_.size()));
    for (int i = 0; i < r_; ++i) rows[i][ps[i]] = f_.one();
    for (std::size_t s = slots.size(); s-- > 0;) {
      rows[slots[s].first][slots[s].second] = Elem(static_cast<std::uint32_t>(idx % q));
      idx /= q;
    }
    return rows;
  }

  bool Spans(const std::vector<Vec>& rows) const {
    // Test membership without building the whole span when possible.
    EchelonBasis eb(p_.field_ptr(), target_.size());
    for (auto& v : Products(rows)) eb.Insert(std::move(v));
    return eb.Contains(pvec_);
  }

  const Poly& p_;
  const Field& f_;
  int r_;
  const SchmidtOptions& opts_;
  MonomialIndex basis_, target_;
  std::vector<std::size_t> prod_;
  Vec pvec_;
};

// Recovers R_i with P = sum Q_i R_i for the given Q basis.
SchmidtWitness Witness(const Poly& p, const SubspaceSearch& s,
                       const std::vector<Vec>& rows) {
  const Field& f = p.field();
  auto cols = s.Products(rows);
  Matrix m(s.target().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  }
  auto sol = Solve(f, m, s.pvec());
  Require(sol.has_value(), ErrorCode::kInvalidArgument, "witness solve failed");
  SchmidtWitness w;
  const std::size_t big_n = s.basis().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Poly qi(p.field_ptr(), p.nvars()), ri(p.field_ptr(), p.nvars());
    for (std::size_t b = 0; b < big_n; ++b) {
      qi.AddTerm(s.basis()[b], rows[i][b]);
      ri.AddTerm(s.basis()[b], (*sol)[i * big_n + b]);
    }
    w.q.push_back(std::move(qi));
    w.r.push_back(std::move(ri));
  }
  return w;
}

// r = 1: P = Q R has deg Q + deg R = deg P, so Q may be taken of degree at
// most D/2, up to scalars.
std::optional<SchmidtWitness> RankOneSearch(const Poly& p, int big_d,
                                            const SchmidtOptions& opts) {
  const Field& f = p.field();
  const std::uint32_t q = f.q();
  const std::size_t n = p.nvars();
  MonomialIndex qbasis(n, big_d / 2);
  const std::size_t k = qbasis.size();
  const std::uint64_t count = SatPow(q, k);
  opts.budget.Check(count, opts.budget.max_search, "rank-one factor search");
  auto make_q = [&](std::uint64_t idx) {
    Vec v(k);
    PointFromIndex(idx, q, v);
    return v;
  };
  auto test = [&](std::uint64_t idx) -> bool {
    Vec v = make_q(idx);
    // Projective representative: first nonzero entry is 1.
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e.v != 0; });
    if (it == v.end() || it->v != 1) return false;
    Poly qp(p.field_ptr(), n);
    for (std::size_t i = 0; i < k; ++i) qp.AddTerm(qbasis[i], v[i]);
    int dq = qp.degree();
    if (dq < 1 || dq >= big_d) return false;
    MonomialIndex rbasis(n, big_d - dq);
    MonomialIndex target(n, big_d);
    EchelonBasis eb(p.field_ptr(), target.size());
    for (std::size_t j = 0; j < rbasis.size(); ++j) {
      Poly prod = qp * Poly::Monom(p.field_ptr(), rbasis[j]);
      eb.Insert(target.ToVec(prod));
    }
    return eb.Contains(target.ToVec(p));
  };
  std::atomic<std::uint64_t> best{UINT64_MAX};
  if (opts.exec == Exec::kSerial) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (test(i)) {
        best = i;
        break;
      }
    }
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      if (static_cast<std::uint64_t>(i) > best.load(std::memory_order_relaxed)) continue;
      if (test(static_cast<std::uint64_t>(i))) {
        std::uint64_t cur = best.load();
        while (static_cast<std::uint64_t>(i) < cur &&
               !best.compare_exchange_weak(cur, static_cast<std::uint64_t>(i))) {
        }
      }
    }
  }
  if (best == UINT64_MAX) return std::nullopt;
  Vec v = make_q(best);
  Poly qp(p.field_ptr(), n);
  for (std::size_t i = 0; i < k; ++i) qp.AddTerm(qbasis[i], v[i]);
  const int dq = qp.degree();
  MonomialIndex rbasis(n, big_d - dq), target(n, big_d);
  Matrix m(target.size(), rbasis.size());
  for (std::size_t j = 0; j < rbasis.size(); ++j) {
    Vec col = target.ToVec(qp * Poly::Monom(p.field_ptr(), rbasis[j]));
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  auto sol = Solve(f, m, target.ToVec(p));
  Poly rp(p.field_ptr(), n);
  for (std::size_t j = 0; j < rbasis.size(); ++j) rp.AddTerm(rbasis[j], (*sol)[j]);
  SchmidtWitness w;
  w.q.push_back(qp);
  w.r.push_back(rp);
  return w;
}

}  // namespace

std::optional<SchmidtWitness> SchmidtDecompose(const Poly& p, int r,
                                               const SchmidtOptions& opts) {
  const int big_d = opts.target_degree >= 0 ? opts.target_degree : p.degree();
  if (p.IsZero()) return SchmidtWitness{};
  if (p.degree() < big_d && r >= 1) {
    SchmidtWitness w;
    w.q.push_back(Poly::Constant(p.field_ptr(), p.nvars(), p.field().one()));
    w.r.push_back(p);
    return w;
  }
  if (big_d <= 1 || r < 1) return std::nullopt;
  if (r == 1) return RankOneSearch(p, big_d, opts);
  SubspaceSearch search(p, big_d, r, opts);
  auto rows = search.Run();
  if (!rows) return std::nullopt;
  return Witness(p, search, *rows);
}

RankValue SchmidtRankExact(const Poly& p, const SchmidtOptions& opts) {
  const int big_d = opts.target_degree >= 0 ? opts.target_degree : p.degree();
  if (p.IsZero()) return RankValue::Exact(0);
  if (p.degree() < big_d) return RankValue::Exact(1);
  if (big_d <= 1) return RankValue::Infinite();
  for (int r = 1; r <= opts.cutoff; ++r) {
    if (SchmidtDecompose(p, r, opts)) return RankValue::Exact(r);
  }
  return RankValue::Above(opts.cutoff);
}

RankValue CollectionRank(const PolyCollection& c, const SchmidtOptions& opts) {
  c.Validate();
  const Field& f = c.polys.front().field();
  const std::uint32_t q = f.q();
  std::map<int, std::vector<const Poly*>> blocks;
  for (const auto& p : c.polys) blocks[p.degree()].push_back(&p);
  std::optional<RankValue> best;
  auto better = [](const RankValue& a, const RankValue& b) {
    auto key = [](const RankValue& v) {
      switch (v.kind) {
        case RankValue::Kind::kExact: return 2 * static_cast<long>(v.value);
        case RankValue::Kind::kAbove: return 2 * static_cast<long>(v.value) + 1;
        case RankValue::Kind::kInfinite: return std::numeric_limits<long>::max();
      }
      return 0L;
    };
    return key(a) < key(b);
  };
  for (const auto& [deg, members] : blocks) {
    const std::size_t m = members.size();
    SchmidtOptions o = opts;
    o.target_degree = deg;
    // Projective combinations: first nonzero coefficient equal to 1.
    const std::uint64_t count = SatPow(q, m);
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      Vec a = PointFromIndex(idx, q, m);
      auto it = std::find_if(a.begin(), a.end(), [](Elem e) { return e.v != 0; });
      if (it->v != 1) continue;
      Poly comb(c.field_ptr(), c.nvars());
      for (std::size_t i = 0; i < m; ++i) comb += members[i]->Scaled(a[i]);
      RankValue v = SchmidtRankExact(comb, o);
      if (!best || better(v, *best)) best = v;
    }
  }
  return *best;
}

std::uint64_t CountPoints(const PolyCollection& c, const Budget& budget, Exec exec) {
  c.Validate();
  const Field& f = c.polys.front().field();
  const std::uint32_t q = f.q();
  const std::size_t n = c.nvars();
  const std::uint64_t count = SatPow(q, n);
  budget.Check(count, budget.max_enumeration, "point count");
  if (exec == Exec::kSerial) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      Vec x = PointFromIndex(i, q, n);
      bool ok = std::all_of(c.polys.begin(), c.polys.end(),
                            [&](const Poly& p) { return p.Eval(x).v == 0; });
      hits += ok;
    }
    return hits;
  }
  std::vector<PolyEvaluator> evs;
  for (const auto& p : c.polys) evs.emplace_back(p);
  auto hist = ParallelHistogram(2, count, [&] {
    return [&, x = Vec(n)](std::uint64_t i) mutable -> std::uint64_t {
      PointFromIndex(i, q, x);
      for (const auto& ev : evs) {
        if (ev(x.data()).v != 0) return 0;
      }
      return 1;
    };
  });
  return hist[1];
}

SingularBoundReport SingularRankBound(const Poly& p, const Budget& budget, Exec exec) {
  Require(p.IsHomogeneous() && !p.IsZero(), ErrorCode::kInvalidArgument,
          "singular rank bound needs a nonzero homogeneous polynomial");
  const Field& f = p.field();
  const int d = p.degree();
  Require(f.p() > static_cast<std::uint32_t>(d), ErrorCode::kNotAdmissible,
          "singular locus needs char > deg P");
  auto k2 = Field::Make(f.p(), 2 * f.l());
  auto collections = [&](const FieldPtr& field) {
    Poly pp = p.ChangeField(field);
    PolyCollection x{{pp}};
    PolyCollection sing{{pp}};
    for (std::size_t i = 0; i < p.nvars(); ++i) sing.polys.push_back(pp.Partial(i));
    return std::pair{x, sing};
  };
  auto [x1, s1] = collections(p.field_ptr());
  auto [x2, s2] = collections(k2);
  SingularBoundReport r;
  r.count_x_k = CountPoints(x1, budget, exec);
  r.count_sing_k = CountPoints(s1, budget, exec);
  r.count_x_k2 = CountPoints(x2, budget, exec);
  r.count_sing_k2 = CountPoints(s2, budget, exec);
  const double lq = std::log(static_cast<double>(f.q()));
  auto slope = [&](std::uint64_t a, std::uint64_t b) {
    return (std::log(static_cast<double>(b)) - std::log(static_cast<double>(a))) / lq;
  };
  r.slope_x = slope(r.count_x_k, r.count_x_k2);
  r.dim_x = static_cast<int>(std::lround(r.slope_x));
  r.slope_flag = std::abs(r.slope_x - r.dim_x) > 0.2;
  if (r.count_sing_k == 0 && r.count_sing_k2 == 0) {
    r.degenerate = true;
    r.codim = r.dim_x;
  } else {
    Require(r.count_sing_k > 0, ErrorCode::kDegenerateCount,
            "singular locus has no points over the base field");
    r.slope_sing = slope(r.count_sing_k, r.count_sing_k2);
    r.dim_sing = static_cast<int>(std::lround(r.slope_sing));
    r.slope_flag = r.slope_flag || std::abs(r.slope_sing - r.dim_sing) > 0.2;
    r.codim = static_cast<int>(p.nvars()) - r.dim_sing;
  }
  r.bound = Rational(r.codim, 2 * d);
  return r;
}

}  // namespace hirank
