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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hirank/affine.hpp"
#include "hirank/rank.hpp"
#include "oracles.hpp"

namespace hirank {
namespace {

Poly RandomPoly(const FieldPtr& f, std::size_t n, int deg, std::mt19937_64& rng) {
  Poly p(f, n);
  for (const auto& m : MonomialsUpTo(n, deg, static_cast<int>(f->q()))) {
    if (rng() % 3 == 0) p.AddTerm(m, Elem(rng() % f->q()));
  }
  return p;
}

std::complex<double> Root(std::uint32_t p, std::uint32_t k) {
  return std::polar(1.0, 2 * std::numbers::pi * k / p);
}

// |E_x e(P(x))|^2 by direct summation.
double BruteBias2(const Poly& p) {
  const Field& f = p.field();
  const std::uint64_t total = SatPow(f.q(), p.nvars());
  std::complex<double> s = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    s += Root(f.p(), f.trace(p.Eval(PointFromIndex(i, f.q(), p.nvars()))));
  }
  s /= static_cast<double>(total);
  return std::norm(s);
}

// E_{x,h_1..h_d} e(sum_w (-1)^|w| P(x + w.h)) with integer arithmetic mod p.
double BruteGowersPow(const Poly& p, int d) {
  const int q = static_cast<int>(p.field().q());
  const std::size_t n = p.nvars();
  PolyEvaluator ev(p);
  const std::uint64_t per = SatPow(q, n);
  const std::uint64_t total = SatPow(per, d + 1);
  std::complex<double> s = 0;
  std::vector<Elem> pt(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    std::vector<oracle::Point> parts(d + 1, oracle::Point(n));
    for (int k = 0; k <= d; ++k, r /= per) {
      std::uint64_t c = r % per;
      for (std::size_t j = n; j-- > 0; c /= q) parts[k][j] = static_cast<int>(c % q);
    }
    int acc = 0;
    for (std::uint32_t w = 0; w < (1u << d); ++w) {
      for (std::size_t j = 0; j < n; ++j) {
        int v = parts[0][j];
        for (int k = 0; k < d; ++k) {
          if (w >> k & 1) v += parts[k + 1][j];
        }
        pt[j] = Elem(static_cast<std::uint32_t>(v % q));
      }
      int val = static_cast<int>(ev(pt.data()).v);
      acc += (std::popcount(w) % 2 ? -val : val);
    }
    s += Root(q, oracle::Mod(acc, q));
  }
  return s.real() / static_cast<double>(total);
}

TEST(RankTest, BiasExamples) {
  auto f = Field::Make(7);
  EXPECT_EQ(Bias(ParsePoly("x1*x2", f)).SquaredRational(), Rational(1, 49));
  EXPECT_EQ(Bias(ParsePoly("x1*x2+x3*x4", f)).SquaredRational(), Rational(1, 2401));
  EXPECT_EQ(Bias(Poly(f, 2)).SquaredRational(), Rational(1));
  EXPECT_EQ(Bias(ParsePoly("x1", f)).SquaredRational(), Rational(0));
  EXPECT_NEAR(Bias(ParsePoly("x1^2", f)).value, 1 / std::sqrt(7.0), 1e-12);
}

TEST(RankTest, BiasMatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (const char* spec : {"3", "5", "2^2", "3^2"}) {
    auto f = Field::Make(ParseFieldSpec(spec));
    for (int t = 0; t < 8; ++t) {
      Poly p = RandomPoly(f, 3, 3, rng);
      auto b = Bias(p);
      EXPECT_NEAR(b.value * b.value, BruteBias2(p), 1e-9) << spec << " " << RenderPoly(p);
      EXPECT_NEAR(b.abs2.Approx().real() / static_cast<double>(b.denominator), BruteBias2(p), 1e-9);
    }
  }
}

TEST(RankTest, GowersExamples) {
  auto f = Field::Make(7);
  auto g = GowersNorm(ParsePoly("x1*x2", f), 2);
  ASSERT_TRUE(g.exact.has_value());
  EXPECT_EQ(*g.exact, Rational(1, 49));
  EXPECT_NEAR(AnalyticRank(g, 7), 0.5, 1e-12);
  auto g2 = GowersNorm(ParsePoly("x1*x2+x3*x4", f), 2);
  EXPECT_NEAR(AnalyticRank(g2, 7), 1.0, 1e-12);
  auto g3 = GowersNorm(ParsePoly("x1*x2 + x3", f), 3);
  ASSERT_TRUE(g3.exact.has_value());
  EXPECT_EQ(*g3.exact, Rational(1));
  EXPECT_EQ(AnalyticRank(g3, 7), 0.0);
}

TEST(RankTest, GowersMatchesBruteForce) {
  std::mt19937_64 rng(32);
  struct Case {
    std::uint32_t p;
    std::size_t n;
    int deg, d;
  };
  for (auto c : {Case{3, 2, 2, 2}, Case{5, 2, 3, 2}, Case{3, 2, 3, 3}, Case{5, 2, 3, 3}}) {
    auto f = Field::Make(c.p);
    for (int t = 0; t < 4; ++t) {
      Poly p = RandomPoly(f, c.n, c.deg, rng);
      auto g = GowersNorm(p, c.d);
      double brute = BruteGowersPow(p, c.d);
      ASSERT_TRUE(g.exact.has_value());
      EXPECT_NEAR(RationalToDouble(*g.exact), brute, 1e-9) << RenderPoly(p);
      EXPECT_GE(brute, -1e-12);
    }
  }
}

TEST(RankTest, SampledGowersIsNearExact) {
  auto f = Field::Make(5);
  Poly p = ParsePoly("x1*x2*x3 + x1^2", f);
  auto exact = GowersNorm(p, 3);
  GowersOptions o;
  o.mode = GowersMode::kSampled;
  o.samples = 20000;
  o.seed = 7;
  auto s = GowersNorm(p, 3, o);
  EXPECT_EQ(s.samples, 20000u);
  EXPECT_GT(s.std_error, 0.0);
  EXPECT_NEAR(s.value_pow, RationalToDouble(*exact.exact), 6 * s.std_error);
  auto again = GowersNorm(p, 3, o);
  EXPECT_EQ(again.value_pow, s.value_pow);
}

TEST(RankTest, BiasIsBoundedByGowersNorm) {
  std::mt19937_64 rng(33);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    auto f = Field::Make(q);
    for (int t = 0; t < 10; ++t) {
      Poly p = RandomPoly(f, 3, 2, rng);
      for (int d : {1, 2}) {
        auto g = GowersNorm(p, d);
        double u = std::pow(RationalToDouble(*g.exact), 1.0 / (1 << d));
        EXPECT_LE(Bias(p).value, u + 1e-9);
      }
    }
  }
}

TEST(RankTest, SchmidtExamples) {
  auto f7 = Field::Make(7);
  auto f5 = Field::Make(5);
  EXPECT_EQ(SchmidtRankExact(ParsePoly("x1*x2", f7)), RankValue::Exact(1));
  EXPECT_EQ(SchmidtRankExact(ParsePoly("x1*x2+x3*x4", f7)), RankValue::Exact(2));
  EXPECT_EQ(SchmidtRankExact(ParsePoly("x1^2", f7)), RankValue::Exact(1));
  // -1 is a square mod 5 but not mod 7.
  EXPECT_EQ(SchmidtRankExact(ParsePoly("x1^2+x2^2", f5)), RankValue::Exact(1));
  EXPECT_EQ(SchmidtRankExact(ParsePoly("x1^2+x2^2", f7)), RankValue::Exact(2));
  EXPECT_EQ(SchmidtRankExact(ParsePoly("x1 + 1", f7)), RankValue::Infinite());
  EXPECT_EQ(SchmidtRankExact(Poly(f7, 2)), RankValue::Exact(0));
  EXPECT_EQ(SchmidtRankExact(ParsePoly("x1*x2*x3", f5)), RankValue::Exact(1));
  SchmidtOptions o;
  o.cutoff = 1;
  EXPECT_EQ(SchmidtRankExact(ParsePoly("x1*x2+x3*x4", f7), o), RankValue::Above(1));
}

TEST(RankTest, SchmidtRankOneMatchesProductOracle) {
  std::mt19937_64 rng(34);
  for (int p : {3, 5}) {
    auto f = Field::Make(p);
    for (int t = 0; t < 30; ++t) {
      Poly poly(f, 3);
      std::map<std::vector<int>, int> coeffs;
      for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
          int c = static_cast<int>(rng() % p);
          if (rng() % 2 || c == 0) continue;
          Monomial m(3, 0);
          ++m[i];
          ++m[j];
          poly.AddTerm(m, Elem(c));
          coeffs[{i + 1, j + 1}] = c;
        }
      }
      if (poly.IsZero()) continue;
      bool product = oracle::QuadraticIsProduct(p, 3, coeffs);
      auto r = SchmidtRankExact(poly);
      EXPECT_EQ(r == RankValue::Exact(1), product) << RenderPoly(poly);
      EXPECT_EQ(r.kind, RankValue::Kind::kExact);
      EXPECT_LE(r.value, 2);
    }
  }
}

TEST(RankTest, SchmidtWitnessReconstructsTopPart) {
  auto f = Field::Make(5);
  for (const char* text : {"x1*x2+x3*x4", "x1*x2*x3 + x1^2*x2", "x1^2+2*x2^2+x3^2"}) {
    Poly p = ParsePoly(text, f);
    auto r = SchmidtRankExact(p);
    ASSERT_EQ(r.kind, RankValue::Kind::kExact);
    auto w = SchmidtDecompose(p, r.value);
    ASSERT_TRUE(w.has_value()) << text;
    ASSERT_EQ(w->q.size(), static_cast<std::size_t>(r.value));
    Poly sum(f, p.nvars());
    for (std::size_t i = 0; i < w->q.size(); ++i) {
      EXPECT_GE(w->q[i].degree(), 1);
      EXPECT_GE(w->r[i].degree(), 1);
      sum += w->q[i] * w->r[i];
    }
    EXPECT_LT((p - sum).degree(), p.degree()) << text;
    if (r.value > 1) EXPECT_FALSE(SchmidtDecompose(p, r.value - 1).has_value());
  }
}

TEST(RankTest, CollectionRank) {
  auto f = Field::Make(5);
  EXPECT_EQ(CollectionRank(ParseCollection("x1*x2; x3*x4", f)), RankValue::Exact(1));
  EXPECT_EQ(CollectionRank(ParseCollection("x1*x2+x3*x4", f)), RankValue::Exact(2));
  // The minimum over the pencil, computed independently.
  auto c = ParseCollection("x1*x2+x3*x4; x1*x4 + 2*x2*x3", f);
  auto r = CollectionRank(c);
  ASSERT_EQ(r.kind, RankValue::Kind::kExact);
  int best = 10;
  for (std::uint32_t a = 0; a < 5; ++a) {
    for (std::uint32_t b = 0; b < 5; ++b) {
      if (a == 0 && b == 0) continue;
      Poly comb = c.polys[0].Scaled(Elem(a)) + c.polys[1].Scaled(Elem(b));
      best = std::min(best, SchmidtRankExact(comb).value);
    }
  }
  EXPECT_EQ(r.value, best);
}

TEST(RankTest, SingularBoundExamples) {
  auto f = Field::Make(5);
  auto cube = SingularRankBound(ParsePoly("x1*x2*x3", f));
  EXPECT_EQ(cube.dim_sing, 1);
  EXPECT_EQ(cube.codim, 2);
  EXPECT_EQ(cube.bound, Rational(1, 3));
  auto q = SingularRankBound(ParsePoly("x1*x2+x3*x4", f));
  EXPECT_EQ(q.bound, Rational(1));
  EXPECT_EQ(q.dim_x, 3);
  // Products of two factors have Schmidt rank 1, so the bound is at most 1.
  for (const char* text : {"x1*x2", "x1^2*x2 + x1*x2*x3", "(x1+x2)*(x2*x3 + x1^2)"}) {
    auto rep = SingularRankBound(ParsePoly(text, f));
    EXPECT_LE(rep.bound, Rational(1)) << text;
  }
}

TEST(RankTest, CountPointsMatchesOracle) {
  std::mt19937_64 rng(35);
  for (int p : {3, 5, 7}) {
    auto f = Field::Make(p);
    for (int t = 0; t < 5; ++t) {
      Poly a = RandomPoly(f, 3, 2, rng);
      Poly b = RandomPoly(f, 3, 2, rng);
      auto ea = [&](const oracle::Point& x) {
        Vec v;
        for (int e : x) v.push_back(Elem(static_cast<std::uint32_t>(e)));
        return static_cast<int>(a.Eval(v).v);
      };
      auto eb = [&](const oracle::Point& x) {
        Vec v;
        for (int e : x) v.push_back(Elem(static_cast<std::uint32_t>(e)));
        return static_cast<int>(b.Eval(v).v);
      };
      auto both = [&](const oracle::Point& x) { return ea(x) == 0 && eb(x) == 0 ? 0 : 1; };
      PolyCollection c{{a, b}};
      EXPECT_EQ(CountPoints(c), oracle::Zeros(p, 3, both).size());
      EXPECT_EQ(CountPoints(c, {}, Exec::kSerial), CountPoints(c));
    }
  }
}

TEST(RankTest, BudgetIsEnforced) {
  auto f = Field::Make(7);
  Budget b;
  b.max_enumeration = 100;
  EXPECT_THROW(Bias(ParsePoly("x1*x2*x3", f), b), Error);
  try {
    CountPoints(ParseCollection("x1*x2*x3", f), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

}  // namespace
}  // namespace hirank
