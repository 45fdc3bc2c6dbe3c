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

#include <filesystem>
#include <fstream>
#include <random>

#include "hirank/io.hpp"
#include "hirank/variety.hpp"
#include "hirank/xn.hpp"
#include "oracles.hpp"

namespace hirank {
namespace {

Json LoadGolden(const std::string& name) {
  std::ifstream in(std::string(HIRANK_GOLDEN_DIR) + "/" + name);
  return Json::parse(in);
}

std::filesystem::path TempDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hirank_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(VarietyTest, EnumerateExamples) {
  auto f = Field::Make(7);
  EXPECT_EQ(VarietyTable::Enumerate(PolyCollection{{Poly(f, 2)}}).size(), 49u);
  EXPECT_EQ(VarietyTable::Enumerate(ParseCollection("x1*x2", f)).size(), 13u);
  EXPECT_EQ(VarietyTable::Enumerate(ParseCollection("x1", f, 2)).size(), 7u);
  EXPECT_EQ(VarietyTable::Enumerate(ParseCollection("x1*x2*(x1-x2)", f)).size(), 19u);
  EXPECT_EQ(VarietyTable::Enumerate(ParseCollection("x1^2+x2^2+1; x1", f)).size(), 0u);
}

TEST(VarietyTest, EnumerateMatchesOracle) {
  std::mt19937_64 rng(41);
  for (int p : {3, 5}) {
    auto f = Field::Make(p);
    for (int t = 0; t < 6; ++t) {
      Poly poly(f, 3);
      for (const auto& m : MonomialsUpTo(3, 2)) {
        if (rng() % 2) poly.AddTerm(m, Elem(rng() % p));
      }
      auto eval = [&](const oracle::Point& x) {
        Vec v;
        for (int e : x) v.push_back(Elem(static_cast<std::uint32_t>(e)));
        return static_cast<int>(poly.Eval(v).v);
      };
      auto zeros = oracle::Zeros(p, 3, eval);
      auto table = VarietyTable::Enumerate(PolyCollection{{poly}});
      ASSERT_EQ(table.size(), zeros.size());
      for (std::size_t i = 0; i < zeros.size(); ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
          EXPECT_EQ(static_cast<int>(table.point(i)[k].v), zeros[i][k]);
        }
      }
      auto serial = VarietyTable::Enumerate(PolyCollection{{poly}}, {}, Exec::kSerial);
      EXPECT_EQ(serial.indices(), table.indices());
    }
  }
}

TEST(VarietyTest, LookupAndRestrict) {
  auto f = Field::Make(5);
  auto table = VarietyTable::Enumerate(ParseCollection("x1*x2 + x3^2", f));
  for (std::size_t i = 0; i < table.size(); ++i) {
    EXPECT_EQ(table.Find(table.point(i)), static_cast<std::int64_t>(i));
  }
  Vec outside{Elem(1), Elem(1), Elem(0)};
  EXPECT_FALSE(table.Contains(outside));
  auto restricted = table.Restrict({ParsePoly("x3", f, 3)});
  auto direct = VarietyTable::Enumerate(ParseCollection("x1*x2 + x3^2; x3", f));
  EXPECT_EQ(restricted.indices(), direct.indices());
}

TEST(VarietyTest, SliceBuckets) {
  auto f = Field::Make(7);
  auto table = VarietyTable::Enumerate(ParseCollection("x1*x2 + x3*x4", f));
  Poly ell = ParsePoly("x1 + 2*x3 + 1", f, 4);
  table.AttachSlice(ell);
  ASSERT_EQ(table.buckets().size(), 7u);
  std::size_t total = 0;
  for (std::uint32_t b = 0; b < 7; ++b) {
    for (auto i : table.buckets()[b]) EXPECT_EQ(ell.Eval(table.point(i)).v, b);
    total += table.buckets()[b].size();
  }
  EXPECT_EQ(total, table.size());
  EXPECT_EQ(table.SliceLinear(), (Vec{Elem(1), Elem(0), Elem(2), Elem(0)}));
  EXPECT_THROW(table.AttachSlice(ParsePoly("x1^2", f, 4)), Error);
}

TEST(VarietyTest, FunctionsOnX) {
  auto f = Field::Make(5);
  auto host = std::make_shared<const VarietyTable>(
      VarietyTable::Enumerate(ParseCollection("x1*x2", f)));
  Poly p = ParsePoly("x1 + x2^2", f);
  FnOnX g = FnOnX::FromPoly(host, p);
  EXPECT_TRUE(AgreesOn(p, g));
  EXPECT_TRUE(AgreesOn(p + ParsePoly("3*x1*x2", f), g));
  EXPECT_FALSE(AgreesOn(ParsePoly("x1", f, 2), g));
  EXPECT_TRUE((g - g).IsZero());
  EXPECT_EQ(g + g, g.Scaled(Elem(2)));
  Vec pt{Elem(0), Elem(3)};
  EXPECT_EQ(g.at(pt).v, 4u);
  EXPECT_THROW(FnOnX(host, Vec(3)), Error);
}

TEST(VarietyTest, VarietyCacheRoundTrip) {
  auto dir = TempDir("cache");
  auto f = Field::Make(ParseFieldSpec("3^2"));
  auto spec = ParseCollection("x1*x2 + x3", f);
  auto table = VarietyTable::Enumerate(spec);
  std::string path = VarietyCachePath(dir.string(), spec);
  EXPECT_FALSE(LoadVarietyCache(path, spec).has_value());
  SaveVarietyCache(path, table);
  auto loaded = LoadVarietyCache(path, spec);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(loaded->indices(), table.indices());
  auto other = ParseCollection("x1*x2 + x3 + 1", f);
  EXPECT_NE(VarietyCacheKey(other), VarietyCacheKey(spec));
  try {
    LoadVarietyCache(path, other);
    FAIL() << "expected a mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
  auto cached = CachedVariety(dir.string(), spec);
  EXPECT_EQ(cached->indices(), table.indices());
  std::filesystem::remove_all(dir);
}

TEST(XnTest, CountsMatchGolden) {
  Json g = LoadGolden("xn_counts.json");
  auto f = Field::Make(ParseFieldSpec(g["field"].get<std::string>()));
  const std::size_t d = g["d"].get<std::size_t>();
  for (auto& [n, count] : g["counts"].items()) {
    XnModel model(f, XnSpec{std::stoul(n), d}, 6);
    EXPECT_EQ(model.table()->size(), count.get<std::size_t>()) << "n=" << n;
  }
}

TEST(XnTest, PnShape) {
  auto f = Field::Make(7);
  Poly p = MakePn(f, XnSpec{2, 3});
  EXPECT_EQ(p, ParsePoly("x1*x2*x3 + x4*x5*x6", f));
}

TEST(XnTest, Admissibility) {
  EXPECT_NO_THROW(RequireAdmissible(ParseFieldSpec("7"), 2, 2, 6));
  try {
    RequireAdmissible(ParseFieldSpec("5"), 2, 2, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::kNotAdmissible || e.code() == ErrorCode::kNonDivisor);
  }
}

class XnModelTest : public ::testing::Test {
 protected:
  FieldPtr f_ = Field::Make(7);
  XnModel model_{f_, XnSpec{2, 2}, 6};
};

TEST_F(XnModelTest, KappaAndNu) {
  for (const Vec& c : model_.LPoints()) {
    Vec v = model_.Kappa(c);
    EXPECT_TRUE(model_.table()->Contains(v));
    EXPECT_EQ(model_.Nu(v), c);
    EXPECT_TRUE(model_.InX0(v));
  }
  EXPECT_EQ(model_.LPoints().size(), 7u);
  Vec bad{Elem(1), Elem(1)};
  EXPECT_THROW(model_.Kappa(bad), Error);
}

TEST_F(XnModelTest, TorusStructure) {
  auto torus = model_.TorusElements();
  EXPECT_EQ(torus.size(), model_.TorusSize());
  EXPECT_EQ(torus.size(), 36u);
  for (const auto& t : torus) EXPECT_TRUE(model_.IsTorusElement(t));
  const auto& table = *model_.table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    Vec v(table.point(i).begin(), table.point(i).end());
    for (std::size_t k = 0; k < torus.size(); k += 7) {
      Vec tv = model_.TorusAct(torus[k], v);
      EXPECT_TRUE(table.Contains(tv));
      EXPECT_EQ(model_.Nu(tv), model_.Nu(v));
    }
    auto t = model_.TorusPart(v);
    EXPECT_EQ(t.has_value(), model_.InX0(v));
    if (t) {
      EXPECT_TRUE(model_.IsTorusElement(*t));
      EXPECT_EQ(model_.TorusAct(*t, model_.Kappa(model_.Nu(v))), v);
    }
  }
}

TEST_F(XnModelTest, GammaActionPreservesX) {
  auto gammas = model_.GammaElements();
  EXPECT_EQ(gammas.size(), 4u);
  const auto& table = *model_.table();
  for (const auto& g : gammas) {
    EXPECT_EQ(model_.ComposeGamma(model_.pn(), g), model_.pn());
    EXPECT_TRUE(g.After(g.Inverse()).IsIdentity());
    for (const auto& h : gammas) {
      for (std::size_t i = 0; i < table.size(); i += 11) {
        Vec v(table.point(i).begin(), table.point(i).end());
        EXPECT_EQ(model_.GammaAct(g.After(h), v), model_.GammaAct(g, model_.GammaAct(h, v)));
      }
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      EXPECT_TRUE(table.Contains(model_.GammaAct(g, table.point(i))));
    }
  }
}

TEST_F(XnModelTest, CharactersAreHomomorphisms) {
  auto chars = model_.Characters();
  EXPECT_EQ(chars.size(), 36u);
  auto torus = model_.TorusElements();
  for (const auto& theta : chars) {
    EXPECT_EQ(model_.CharacterFromIndex(model_.CharacterIndex(theta)), theta);
    for (std::size_t a = 0; a < torus.size(); a += 5) {
      for (std::size_t b = 0; b < torus.size(); b += 7) {
        Elem lhs = theta.Eval(*f_, model_.delta(), model_.TorusAct(torus[a], torus[b]));
        Elem rhs = f_->mul(theta.Eval(*f_, model_.delta(), torus[a]),
                           theta.Eval(*f_, model_.delta(), torus[b]));
        EXPECT_EQ(lhs, rhs);
      }
    }
    for (const auto& g : model_.GammaElements()) {
      for (const auto& t : torus) {
        EXPECT_EQ(theta.ComposeGamma(g).Eval(*f_, model_.delta(), t),
                  theta.Eval(*f_, model_.delta(), model_.GammaAct(g, t)));
      }
    }
  }
}

TEST_F(XnModelTest, EveryAdmissibleCharacterHasPlusGamma) {
  int admissible = 0;
  for (const auto& theta : model_.Characters()) {
    if (!theta.Admissible(2)) continue;
    ++admissible;
    auto g = model_.FindPlusGamma(theta, 2);
    ASSERT_TRUE(g.has_value()) << theta.ToString();
    EXPECT_TRUE(theta.ComposeGamma(*g).Plus(2));
  }
  EXPECT_EQ(admissible, 25);
}

}  // namespace
}  // namespace hirank
