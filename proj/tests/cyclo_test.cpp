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

#include "hirank/cyclo.hpp"
#include "hirank/field.hpp"

namespace hirank {
namespace {

CycloSum FromCounts(std::vector<std::uint64_t> counts) {
  CycloSum s(static_cast<std::uint32_t>(counts.size()));
  for (std::uint32_t i = 0; i < counts.size(); ++i) s.Add(i, counts[i]);
  return s;
}

TEST(CycloTest, UniformCountsVanish) {
  auto abs2 = CycloAbs2(FromCounts({4, 4, 4, 4, 4}));
  EXPECT_TRUE(abs2.IsZero());
}

TEST(CycloTest, ConcentratedAtZero) {
  auto abs2 = CycloAbs2(FromCounts({9, 0, 0}));
  EXPECT_EQ(abs2.AsInteger(), BigInt(81));
}

TEST(CycloTest, TwoPlusZetaThree) {
  // |2 + zeta_3|^2 = 4 + 2(zeta + zeta^-1) + 1 = 3.
  auto abs2 = CycloAbs2(FromCounts({2, 1, 0}));
  EXPECT_EQ(abs2.AsInteger(), BigInt(3));
  EXPECT_NEAR(abs2.RealApprox(), 3.0, 1e-12);
}

TEST(CycloTest, AdditiveCharacterSums) {
  for (const char* spec : {"5", "7", "3^2", "2^3"}) {
    auto f = Field::Make(ParseFieldSpec(spec));
    for (std::uint32_t c = 0; c < f->q(); ++c) {
      CycloSum s(f->p());
      for (std::uint32_t x = 0; x < f->q(); ++x) s.Add(f->trace(f->mul(Elem(c), Elem(x))));
      auto abs2 = CycloAbs2(s);
      if (c == 0) {
        EXPECT_EQ(abs2.AsInteger(), BigInt(f->q()) * f->q());
      } else {
        EXPECT_TRUE(abs2.IsZero()) << spec << " c=" << c;
      }
    }
  }
}

TEST(CycloTest, MergeIsAssociativeAndCountsTotal) {
  auto a = FromCounts({1, 2, 3});
  auto b = FromCounts({0, 5, 1});
  auto c = FromCounts({7, 0, 2});
  auto ab = a;
  ab.Merge(b);
  ab.Merge(c);
  auto bc = b;
  bc.Merge(c);
  auto a_bc = a;
  a_bc.Merge(bc);
  EXPECT_EQ(ab, a_bc);
  EXPECT_EQ(ab.total(), 21u);
}

TEST(CycloTest, ApproxMatchesExactMagnitude) {
  auto s = FromCounts({3, 1, 4, 1, 5, 9, 2});
  auto exact = CycloAbs2(s).RealApprox();
  EXPECT_NEAR(std::norm(s.Approx()), static_cast<double>(exact), 1e-9);
  EXPECT_TRUE(CycloAbs2(s).IsReal());
}

TEST(CycloTest, SignOfRealElements) {
  auto big = CycloAbs2(FromCounts({5, 0, 0}));
  auto small = CycloAbs2(FromCounts({2, 1, 0}));
  EXPECT_EQ((big - small).Sign(), 1);
  EXPECT_EQ((small - big).Sign(), -1);
  EXPECT_EQ((small - small).Sign(), 0);
}

TEST(CycloTest, ProductWithConjugate) {
  auto z = CycloInt::FromSum(FromCounts({1, 2, 0, 0, 3}));
  EXPECT_EQ(z * z.Conj(), CycloAbs2(FromCounts({1, 2, 0, 0, 3})));
  EXPECT_EQ(CycloInt::FromInteger(5, BigInt(7)).AsInteger(), BigInt(7));
}

}  // namespace
}  // namespace hirank
