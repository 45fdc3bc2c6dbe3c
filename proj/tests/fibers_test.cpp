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
#include <fstream>

#include "hirank/fibers.hpp"
#include "hirank/io.hpp"
#include "oracles.hpp"

namespace hirank {
namespace {

Json LoadGolden(const std::string& name) {
  std::ifstream in(std::string(HIRANK_GOLDEN_DIR) + "/" + name);
  return Json::parse(in);
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Counts maps w with P o w == target by composing every map.
std::uint64_t BruteFiber(const PolyCollection& p, const PolyCollection& target, std::size_t m) {
  const Field& f = *p.field_ptr();
  CoefficientMap cm = MakeCoefficientMap(p, m);
  const std::uint64_t total = SatPow(f.q(), cm.nentries());
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    AffineMap w = cm.ToAffineMap(PointFromIndex(i, f.q(), cm.nentries()));
    bool ok = true;
    for (std::size_t s = 0; s < p.size() && ok; ++s) {
      ok = ComposeAffine(p.polys[s], w) == target.polys[s].WithBound(p.polys[s].bound());
    }
    count += ok;
  }
  return count;
}

TEST(FibersTest, AffineMapLayout) {
  auto f = Field::Make(7);
  CoefficientMap cm = MakeCoefficientMap(ParseCollection("x1*x2", f), 1);
  EXPECT_EQ(cm.nentries(), 4u);
  // w = (A_00, s_0, A_10, s_1): x -> (2x + 3, 5x + 1).
  Vec w{Elem(2), Elem(3), Elem(5), Elem(1)};
  AffineMap map = cm.ToAffineMap(w);
  EXPECT_EQ(map.linear()(0, 0).v, 2u);
  EXPECT_EQ(map.linear()(1, 0).v, 5u);
  EXPECT_EQ(map.translation(), (Vec{Elem(3), Elem(1)}));
  // (2x + 3)(5x + 1) = 10x^2 + 17x + 3 = 3x^2 + 3x + 3.
  EXPECT_EQ(cm.Evaluate(w), (Vec{Elem(3), Elem(3), Elem(3)}));
  auto target = TargetFromVector(cm, cm.Evaluate(w));
  EXPECT_EQ(target.polys[0], ParsePoly("3*x1^2 + 3*x1 + 3", f, 1));
  EXPECT_EQ(TargetVector(cm, target), cm.Evaluate(w));
}

TEST(FibersTest, LambdaSizes) {
  auto f = Field::Make(5);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const char* text : {"x1*x2", "x1*x2*x3", "x1^2*x2 + x3^3 + x4"}) {
      auto p = ParseCollection(text, f);
      auto cm = MakeCoefficientMap(p, m);
      const int d = p.polys[0].degree();
      EXPECT_EQ(cm.total(), Binomial(m + d, d)) << text << " m=" << m;
    }
  }
  auto c = MakeCoefficientMap(ParseCollection("x1*x2; x3", f), 2);
  EXPECT_EQ(c.total(), Binomial(4, 2) + Binomial(3, 1));
}

TEST(FibersTest, SmallFibersMatchGolden) {
  Json g = LoadGolden("fiber_small.json");
  auto f = Field::Make(7);
  auto none = SolveFiber(ParseCollection("x1*x2", f), ParseCollection("x1^2 + 1", f, 1), 1);
  EXPECT_EQ(none.count_k, g["x1*x2_to_x1^2+1"].get<std::uint64_t>());
  EXPECT_TRUE(none.witnesses.empty());
  auto lin = SolveFiber(ParseCollection("x1", f, 3), ParseCollection("0", f, 1), 1);
  EXPECT_EQ(lin.count_k, g["x1_to_0"].get<std::uint64_t>());
  EXPECT_EQ(lin.expected_dim, 4);
}

TEST(FibersTest, WitnessesLieInTheFiber) {
  auto f = Field::Make(5);
  auto p = ParseCollection("x1*x2 + x3^2", f);
  auto target = ParseCollection("x1^2 + 2", f, 1);
  FiberOptions o;
  o.max_witnesses = 5;
  auto r = SolveFiber(p, target, 1, o);
  EXPECT_EQ(r.count_k, BruteFiber(p, target, 1));
  ASSERT_EQ(r.witnesses.size(), 5u);
  for (const auto& w : r.witnesses) {
    EXPECT_EQ(ComposeAffine(p.polys[0], w), target.polys[0]);
  }
}

TEST(FibersTest, HistogramMatchesQuadraticOracle) {
  for (int p : {3, 5}) {
    auto f = Field::Make(p);
    auto coll = ParseCollection("x1*x2", f);
    auto cm = MakeCoefficientMap(coll, 1);
    auto want = oracle::QuadraticFiberHistogram(p, 2, {{{1, 2}, 1}});
    EXPECT_EQ(FiberHistogram(cm, CountRoute::kDirect), want);
    EXPECT_EQ(FiberHistogram(cm, CountRoute::kDirect, {}, Exec::kSerial), want);
  }
  auto f = Field::Make(3);
  auto cm = MakeCoefficientMap(ParseCollection("x1*x2 + 2*x3^2 + x4", f), 1);
  auto want = oracle::QuadraticFiberHistogram(3, 4, {{{1, 2}, 1}, {{3, 3}, 2}, {{4}, 1}});
  EXPECT_EQ(FiberHistogram(cm, CountRoute::kDirect), want);
  EXPECT_EQ(FiberHistogram(cm, CountRoute::kSeparable), want);
}

TEST(FibersTest, CountingIdentity) {
  auto f = Field::Make(3);
  for (const char* text : {"x1*x2", "x1*x2+x3*x4", "x1^2*x2 + x2", "x1*x2; x1 + x2"}) {
    auto cm = MakeCoefficientMap(ParseCollection(text, f), 1);
    auto hist = FiberHistogram(cm, CountRoute::kAuto);
    std::uint64_t sum = 0;
    for (auto h : hist) sum += h;
    EXPECT_EQ(hist.size(), SatPow(3, cm.total())) << text;
    EXPECT_EQ(sum, SatPow(3, cm.nentries())) << text;
  }
}

TEST(FibersTest, SeparableRouteMatchesDirect) {
  auto f = Field::Make(3);
  for (const char* text : {"x1*x2+x3*x4", "x1*x2 + x3^2 + x4", "x1*x2*x3 + x4^3"}) {
    for (std::size_t m : {1u, 2u}) {
      auto cm = MakeCoefficientMap(ParseCollection(text, f), m);
      if (SatPow(3, cm.nentries()) > 3000000) continue;
      EXPECT_EQ(FiberHistogram(cm, CountRoute::kSeparable), FiberHistogram(cm, CountRoute::kDirect))
          << text << " m=" << m;
    }
  }
}

TEST(FibersTest, ScanMatchesGolden) {
  Json g = LoadGolden("fiber_scan.json");
  auto f = Field::Make(5);
  auto direct = SurjectivityScan(ParseCollection("x1*x2", f), 1, CountRoute::kDirect);
  auto sep = SurjectivityScan(ParseCollection("x1*x2", f), 1, CountRoute::kSeparable);
  auto want = g["x1*x2"]["missing"].get<std::vector<std::uint64_t>>();
  EXPECT_EQ(direct.targets, 125u);
  EXPECT_EQ(direct.missing, want);
  EXPECT_EQ(sep.missing, want);
  auto p3 = SurjectivityScan(ParseCollection("x1*x2+x3*x4+x5*x6", f), 1, CountRoute::kSeparable);
  EXPECT_TRUE(p3.missing.empty());
}

TEST(FibersTest, FiberCountsMatchGolden) {
  Json g = LoadGolden("fiber_counts.json")["counts"];
  auto f = Field::Make(5);
  auto p3 = ParseCollection("x1*x2+x3*x4+x5*x6", f);
  for (const char* q : {"0", "x1", "x1^2"}) {
    auto r = FiberDimension(p3, ParseCollection(q, f, 1), 1, 2);
    EXPECT_EQ(r.counts, g[q].get<std::vector<std::uint64_t>>()) << q;
    EXPECT_EQ(r.expected, 9);
    EXPECT_NEAR(r.slope, 9, 0.2);
  }
}

TEST(FibersTest, LinearFiberGrowth) {
  auto f = Field::Make(7);
  auto r = FiberDimension(ParseCollection("x1", f, 3), ParseCollection("0", f, 1), 1, 2);
  EXPECT_EQ(r.counts, (std::vector<std::uint64_t>{2401, 5764801}));
  EXPECT_EQ(r.expected, 4);
  EXPECT_NEAR(r.slope, 4.0, 1e-9);
  EXPECT_FALSE(r.flag);
  ASSERT_EQ(r.log_counts.size(), 2u);
  EXPECT_NEAR(r.log_counts[0], 4.0, 1e-9);
}

TEST(FibersTest, ChangeFieldKeepsFormulas) {
  auto f = Field::Make(5);
  auto big = Field::Make(5, 2);
  auto cm = MakeCoefficientMap(ParseCollection("x1*x2 + 3*x3^2", f), 1);
  auto lifted = cm.ChangeField(big);
  EXPECT_EQ(lifted.total(), cm.total());
  for (std::uint64_t i = 0; i < SatPow(5, cm.nentries()); i += 37) {
    Vec w = PointFromIndex(i, 5, cm.nentries());
    EXPECT_EQ(lifted.Evaluate(w), cm.Evaluate(w));
  }
}

TEST(FibersTest, CharacterSumGivesScaledCount) {
  auto f = Field::Make(3);
  for (const char* text : {"x1*x2", "x1^2 + x2"}) {
    auto cm = MakeCoefficientMap(ParseCollection(text, f), 1);
    auto hist = FiberHistogram(cm, CountRoute::kDirect);
    for (std::uint64_t t = 0; t < hist.size(); t += 4) {
      Vec target = PointFromIndex(t, 3, cm.total());
      auto s = FiberCharacterSum(cm, target);
      EXPECT_EQ(s.AsInteger(), BigInt(SatPow(3, cm.total()) * hist[t])) << text << " " << t;
    }
  }
}

TEST(FibersTest, CollectionFiberMatchesBruteForce) {
  auto f = Field::Make(3);
  auto p = ParseCollection("x1*x2; x3*x4", f);
  for (const char* target : {"x1; 0", "x1^2; x1 + 1", "0; 0", "x1^2; 2*x1^2"}) {
    auto t = ParseCollection(target, f, 1);
    EXPECT_EQ(SolveFiber(p, t, 1).count_k, BruteFiber(p, t, 1)) << target;
  }
}

TEST(FibersTest, RandomStrategyEstimatesRate) {
  auto f = Field::Make(5);
  auto p = ParseCollection("x1*x2", f);
  auto t = ParseCollection("0", f, 1);
  FiberOptions o;
  o.strategy = FiberStrategy::kRandom;
  o.samples = 20000;
  o.seed = 3;
  auto r = SolveFiber(p, t, 1, o);
  const double exact = static_cast<double>(SolveFiber(p, t, 1).count_k) / 625.0;
  EXPECT_EQ(r.samples, 20000u);
  EXPECT_NEAR(r.rate, exact, 5 * std::sqrt(exact * (1 - exact) / 20000));
  EXPECT_EQ(SolveFiber(p, t, 1, o).hits, r.hits);
  for (const auto& w : r.witnesses) EXPECT_TRUE(ComposeAffine(p.polys[0], w).IsZero());
}

TEST(FibersTest, TargetDegreeIsChecked) {
  auto f = Field::Make(5);
  EXPECT_THROW(SolveFiber(ParseCollection("x1*x2", f), ParseCollection("x1^3", f, 1), 1), Error);
}

}  // namespace
}  // namespace hirank
