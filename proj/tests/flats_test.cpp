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

#include <fstream>
#include <random>
#include <set>

#include "hirank/flats.hpp"
#include "hirank/io.hpp"
#include "oracles.hpp"

namespace hirank {
namespace {

std::vector<oracle::Point> ToOracle(const VarietyTable& x) {
  std::vector<oracle::Point> pts;
  for (std::size_t i = 0; i < x.size(); ++i) {
    oracle::Point p;
    for (Elem e : x.point(i)) p.push_back(static_cast<int>(e.v));
    pts.push_back(p);
  }
  return pts;
}

std::set<std::vector<std::uint64_t>> PointSets(const Field& f, const FlatCatalog& cat) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& fl : cat.flats) {
    std::vector<std::uint64_t> key;
    for (const auto& p : fl.Points(f)) key.push_back(PointIndex(p, f.q()));
    std::sort(key.begin(), key.end());
    out.insert(key);
  }
  return out;
}

Poly RandomQuadratic(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  Poly p(f, n);
  for (const auto& m : MonomialsUpTo(n, 2)) {
    if (rng() % 3 == 0) p.AddTerm(m, Elem(rng() % f->q()));
  }
  return p;
}

TEST(FlatsTest, LinesInPlane) {
  auto f = Field::Make(3);
  auto x = VarietyTable::Enumerate(ParseCollection("x1+x2+x3", f));
  auto cat = FlatsInBucket(x, std::nullopt, 1);
  EXPECT_EQ(cat.flats.size(), 12u);
  EXPECT_EQ(FlatsInBucket(x, std::nullopt, 2).flats.size(), 1u);
  EXPECT_EQ(FlatsInBucket(x, std::nullopt, 0).flats.size(), 9u);
  EXPECT_TRUE(FlatsInBucket(x, std::nullopt, 3).flats.empty());
}

TEST(FlatsTest, LinesMatchOracle) {
  std::mt19937_64 rng(51);
  for (int p : {3, 5}) {
    auto f = Field::Make(p);
    for (int t = 0; t < 8; ++t) {
      auto x = VarietyTable::Enumerate(PolyCollection{{RandomQuadratic(f, 3, rng)}});
      auto cat = FlatsInBucket(x, std::nullopt, 1);
      auto lines = oracle::LinesIn(p, 3, ToOracle(x));
      ASSERT_EQ(cat.flats.size(), lines.size());
      std::set<std::vector<std::uint64_t>> want;
      for (const auto& line : lines) {
        std::vector<std::uint64_t> key;
        for (const auto& z : line) {
          Vec v;
          for (int e : z) v.push_back(Elem(static_cast<std::uint32_t>(e)));
          key.push_back(PointIndex(v, p));
        }
        std::sort(key.begin(), key.end());
        want.insert(key);
      }
      EXPECT_EQ(PointSets(*f, cat), want);
      auto serial = FlatsInBucket(x, std::nullopt, 1, {}, Exec::kSerial);
      EXPECT_EQ(serial.flats, cat.flats);
    }
  }
}

TEST(FlatsTest, BucketFlatsStayInBucket) {
  auto f = Field::Make(5);
  auto x = VarietyTable::Enumerate(ParseCollection("x1*x2 + x3*x4", f));
  Poly ell = ParsePoly("x1 + x3", f, 4);
  x.AttachSlice(ell);
  for (std::uint32_t b = 0; b < 5; ++b) {
    auto cat = FlatsInBucket(x, Elem(b), 1);
    EXPECT_FALSE(cat.flats.empty());
    for (const auto& fl : cat.flats) {
      for (const auto& pt : fl.Points(*f)) {
        EXPECT_TRUE(x.Contains(pt));
        EXPECT_EQ(ell.Eval(pt).v, b);
      }
    }
  }
  EXPECT_THROW(FlatsInBucket(VarietyTable::Enumerate(ParseCollection("x1", f, 2)), Elem(1), 1),
               Error);
}

TEST(FlatsTest, DeficiencyExamples) {
  auto f = Field::Make(3);
  auto ambient = VarietyTable::Enumerate(PolyCollection{{Poly(f, 3)}});
  ambient.AttachSlice(ParsePoly("x1", f, 3));
  auto all = FlatExtensionDeficiency(ambient, FlatsInBucket(ambient, Elem(1), 1));
  EXPECT_EQ(all.deficient, 0u);
  EXPECT_EQ(all.total, 12u);

  // On x2 = x1^2 the bucket x1 = 1 holds the single line (1, 1, t), which
  // cannot be widened across buckets.
  auto parab = VarietyTable::Enumerate(ParseCollection("x2 - x1^2", f, 3));
  parab.AttachSlice(ParsePoly("x1", f, 3));
  auto cat = FlatsInBucket(parab, Elem(1), 1);
  auto rep = FlatExtensionDeficiency(parab, cat);
  EXPECT_EQ(rep.total, 1u);
  EXPECT_EQ(rep.deficient, 1u);
  EXPECT_EQ(rep.fraction, Rational(1));

  FlatCatalog empty;
  empty.bucket = Elem(1);
  try {
    FlatExtensionDeficiency(parab, empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCatalog);
  }
}

TEST(FlatsTest, PointDeficiency) {
  // A point extends when some line through it crosses every bucket inside X.
  auto f = Field::Make(5);
  auto x = VarietyTable::Enumerate(ParseCollection("x1*x2 - 1", f));
  x.AttachSlice(ParsePoly("x1", f, 2));
  auto rep = FlatExtensionDeficiency(x, FlatsInBucket(x, Elem(2), 0));
  EXPECT_EQ(rep.total, 1u);
  EXPECT_EQ(rep.deficient, 1u);
  auto y = VarietyTable::Enumerate(ParseCollection("x1*x2", f));
  y.AttachSlice(ParsePoly("x1", f, 2));
  auto rep2 = FlatExtensionDeficiency(y, FlatsInBucket(y, Elem(2), 0));
  EXPECT_EQ(rep2.total, 1u);
  EXPECT_EQ(rep2.deficient, 0u);
}

TEST(FlatsTest, LineDeficiencyMatchesOracle) {
  std::mt19937_64 rng(52);
  for (int p : {3, 5}) {
    auto f = Field::Make(p);
    int nontrivial = 0;
    for (int t = 0; t < 12; ++t) {
      auto x = VarietyTable::Enumerate(PolyCollection{{RandomQuadratic(f, 3, rng)}});
      x.AttachSlice(ParsePoly("x1", f, 3));
      for (int b = 1; b < p; ++b) {
        auto cat = FlatsInBucket(x, Elem(b), 1);
        auto want = oracle::LineDeficiency(p, 3, ToOracle(x), b);
        ASSERT_EQ(cat.flats.size(), want.lines);
        if (cat.flats.empty()) continue;
        auto rep = FlatExtensionDeficiency(x, cat);
        EXPECT_EQ(rep.deficient, want.deficient);
        EXPECT_EQ(FlatExtensionDeficiency(x, cat, {}, Exec::kSerial).deficient, rep.deficient);
        if (want.deficient > 0 && want.deficient < want.lines) ++nontrivial;
      }
    }
    RecordProperty("mixed_cases_p" + std::to_string(p), nontrivial);
  }
}

TEST(FlatsTest, X3DeficiencyMatchesGoldenAndSoftBound) {
  std::ifstream in(std::string(HIRANK_GOLDEN_DIR) + "/deficiency.json");
  Json g = Json::parse(in)["x3"];
  auto f = Field::Make(7);
  auto x = VarietyTable::Enumerate(ParseCollection("x1*x2+x3*x4+x5*x6", f));
  x.AttachSlice(ParsePoly("x1", f, 6));
  auto rep = FlatExtensionDeficiency(x, FlatsInBucket(x, Elem(1), 1));
  EXPECT_EQ(rep.total, g["lines"].get<std::uint64_t>());
  EXPECT_EQ(rep.deficient, g["deficient"].get<std::uint64_t>());
  EXPECT_LE(rep.value, 0.15);
}

TEST(FlatsTest, ProjectiveDirections) {
  auto f = Field::Make(5);
  EXPECT_EQ(ProjectiveDirections(*f, 3).size(), 31u);
  Vec lin{Elem(1), Elem(1), Elem(0)};
  auto dirs = ProjectiveDirections(*f, 3, &lin);
  EXPECT_EQ(dirs.size(), 6u);
  for (const auto& d : dirs) EXPECT_EQ(f->add(d[0], d[1]).v, 0u);
}

TEST(FlatsTest, SearchBudget) {
  auto f = Field::Make(5);
  auto x = VarietyTable::Enumerate(PolyCollection{{Poly(f, 3)}});
  Budget b;
  b.max_search = 1000;
  EXPECT_THROW(FlatsInBucket(x, std::nullopt, 1, b), Error);
}

}  // namespace
}  // namespace hirank
