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

#include <random>

#include "hirank/affine.hpp"
#include "hirank/poly.hpp"
#include "oracles.hpp"

namespace hirank {
namespace {

Vec V(std::initializer_list<std::uint32_t> xs) {
  Vec v;
  for (auto x : xs) v.push_back(Elem(x));
  return v;
}

Poly RandomPoly(const FieldPtr& f, std::size_t n, int deg, std::mt19937_64& rng) {
  Poly p(f, n);
  for (const auto& m : MonomialsUpTo(n, deg, static_cast<int>(f->q()))) {
    if (rng() % 2) p.AddTerm(m, Elem(rng() % f->q()));
  }
  return p;
}

AffineMap RandomMap(const Field& f, std::size_t target, std::size_t source, std::mt19937_64& rng) {
  Matrix m(target, source);
  for (std::size_t i = 0; i < target; ++i) {
    for (std::size_t j = 0; j < source; ++j) m(i, j) = Elem(rng() % f.q());
  }
  Vec t(target);
  for (auto& e : t) e = Elem(rng() % f.q());
  return AffineMap(m, t);
}

TEST(PolyTest, EvalExamples) {
  auto f = Field::Make(7);
  EXPECT_EQ(ParsePoly("x1*x2", f).Eval(V({2, 3})).v, 6u);
  EXPECT_EQ(Poly(f, 3).Eval(V({1, 2, 3})).v, 0u);
  EXPECT_EQ(ParsePoly("x1*x2+x3*x4", f).Eval(V({1, 2, 3, 4})).v, 0u);
  EXPECT_THROW(ParsePoly("x1*x2", f).Eval(V({1})), Error);
}

TEST(PolyTest, ComposeIdentity) {
  auto f = Field::Make(7);
  Poly p = ParsePoly("x1*x2 + 3*x3^2 + x1 + 5", f);
  EXPECT_EQ(ComposeAffine(p, AffineMap::Identity(*f, 3)), p);
}

TEST(PolyTest, ComposeDiagonal) {
  auto f = Field::Make(7);
  Matrix m(2, 1);
  m(0, 0) = f->one();
  m(1, 0) = f->one();
  Poly r = ComposeAffine(ParsePoly("x1*x2", f), AffineMap(m, Vec(2)));
  EXPECT_EQ(r, ParsePoly("x1^2", f, 1));
}

TEST(PolyTest, ComposeConstantIntoZeroSet) {
  auto f = Field::Make(7);
  Poly p = ParsePoly("x1*x2+x3*x4", f);
  Vec v0 = V({1, 6, 1, 1});
  ASSERT_EQ(p.Eval(v0).v, 0u);
  EXPECT_TRUE(ComposeAffine(p, AffineMap(Matrix(4, 2), v0)).IsZero());
}

TEST(PolyTest, ComposeAgreesPointwiseAndIsFunctorial) {
  std::mt19937_64 rng(21);
  auto f = Field::Make(5);
  for (int t = 0; t < 10; ++t) {
    Poly p = RandomPoly(f, 3, 3, rng);
    AffineMap phi = RandomMap(*f, 3, 2, rng);
    AffineMap psi = RandomMap(*f, 2, 2, rng);
    Poly r = ComposeAffine(p, phi);
    EXPECT_LE(r.degree(), std::max(p.degree(), 0));
    for (int k = 0; k < 100; ++k) {
      Vec w = V({static_cast<std::uint32_t>(rng() % 5), static_cast<std::uint32_t>(rng() % 5)});
      EXPECT_EQ(r.Eval(w), p.Eval(phi.Apply(*f, w)));
    }
    EXPECT_EQ(ComposeAffine(p, phi.After(*f, psi)), ComposeAffine(ComposeAffine(p, phi), psi));
  }
}

TEST(PolyTest, RestrictToWholeSpace) {
  auto f = Field::Make(7);
  Poly p = ParsePoly("x1*x2 + 2*x2", f);
  AffineFlat whole(*f, Vec(2), {V({1, 0}), V({0, 1})});
  EXPECT_EQ(RestrictToFlat(p, whole), p);
}

TEST(PolyTest, RestrictToCoordinateHyperplane) {
  auto f = Field::Make(7);
  AffineFlat h(*f, V({3, 0, 0}), {V({0, 1, 0}), V({0, 0, 1})});
  Poly r = RestrictToFlat(ParsePoly("x1", f, 3), h);
  EXPECT_EQ(r, Poly::Constant(f, 2, Elem(3)));
}

TEST(PolyTest, RestrictToLine) {
  auto f = Field::Make(7);
  AffineFlat line(*f, V({0, 1}), {V({1, 1})});
  EXPECT_EQ(RestrictToFlat(ParsePoly("x1*x2", f), line), ParsePoly("x1^2 + x1", f, 1));
}

TEST(PolyTest, DerivativeFormOfLowerDegreeVanishes) {
  std::mt19937_64 rng(22);
  auto f = Field::Make(7);
  Poly p = RandomPoly(f, 3, 2, rng);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> hs;
    for (int i = 0; i < 3; ++i) hs.push_back(V({static_cast<std::uint32_t>(rng() % 7), 1, 2}));
    EXPECT_EQ(DerivativeForm(p, hs, V({1, 2, 3})).v, 0u);
  }
}

TEST(PolyTest, DerivativeFormBilinearValue) {
  auto f = Field::Make(7);
  Poly p = ParsePoly("x1*x2", f);
  // (0) - (h1) - (h2) + (h1 + h2) = 0 - 0 - 0 + 1.
  for (auto x : {V({0, 0}), V({3, 5})}) {
    EXPECT_EQ(DerivativeForm(p, {V({1, 0}), V({0, 1})}, x), f->one());
  }
  EXPECT_EQ(DerivativeForm(p, {V({0, 0}), V({2, 1})}, V({4, 4})).v, 0u);
}

TEST(PolyTest, DerivativeFormSymmetricMultilinearAndIndependentOfX) {
  std::mt19937_64 rng(23);
  auto f = Field::Make(5);
  auto rv = [&] {
    return V({static_cast<std::uint32_t>(rng() % 5), static_cast<std::uint32_t>(rng() % 5),
              static_cast<std::uint32_t>(rng() % 5)});
  };
  for (int t = 0; t < 20; ++t) {
    Poly p = RandomPoly(f, 3, 3, rng);
    Vec a = rv(), b = rv(), c = rv(), x = rv(), y = rv();
    Elem k(1 + rng() % 4);
    Elem base = DerivativeForm(p, {a, b, c}, x);
    EXPECT_EQ(base, DerivativeForm(p, {a, b, c}, y));
    EXPECT_EQ(base, DerivativeForm(p, {c, a, b}, x));
    EXPECT_EQ(base, DerivativeForm(p, {b, a, c}, x));
    Vec ab(3), ka(3);
    for (int i = 0; i < 3; ++i) {
      ab[i] = f->add(a[i], y[i]);
      ka[i] = f->mul(k, a[i]);
    }
    EXPECT_EQ(DerivativeForm(p, {ab, b, c}, x),
              f->add(base, DerivativeForm(p, {y, b, c}, x)));
    EXPECT_EQ(DerivativeForm(p, {ka, b, c}, x), f->mul(k, base));
  }
}

TEST(PolyTest, DiagonalDerivativeIsFactorialTimesTopForm) {
  std::mt19937_64 rng(24);
  for (std::uint32_t q : {5u, 7u}) {
    auto f = Field::Make(q);
    for (int d : {2, 3}) {
      Poly p = RandomPoly(f, 2, d, rng);
      p.AddTerm(Monomial(d == 2 ? Monomial{1, 1} : Monomial{2, 1}), f->one());
      Poly top = p.HomogeneousPart(p.degree());
      Elem fact = f->FromInt(d == 2 ? 2 : 6);
      Elem sign = d % 2 ? f->neg(f->one()) : f->one();
      for (std::uint32_t i = 0; i < q * q; ++i) {
        Vec h = V({i / q, i % q});
        std::vector<Vec> hs(p.degree(), h);
        EXPECT_EQ(DerivativeForm(p, hs, Vec(2)), f->mul(sign, f->mul(fact, top.Eval(h))));
      }
    }
  }
}

TEST(PolyTest, HomogeneousComponents) {
  auto f = Field::Make(7);
  Poly p = ParsePoly("x1*x2 + x1 + 5", f);
  auto comps = p.HomogeneousComponents();
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], ParsePoly("5", f, 2));
  EXPECT_EQ(comps[1], ParsePoly("x1", f, 2));
  EXPECT_EQ(comps[2], ParsePoly("x1*x2", f));
  Poly h = ParsePoly("x1*x2 + x2^2", f);
  ASSERT_EQ(h.HomogeneousComponents().size(), 3u);
  EXPECT_TRUE(h.HomogeneousComponents()[0].IsZero());
  EXPECT_EQ(h.HomogeneousComponents()[2], h);
  EXPECT_TRUE(Poly(f, 2).HomogeneousComponents().empty());
  std::mt19937_64 rng(25);
  Poly r = RandomPoly(f, 3, 4, rng);
  Poly sum(f, 3);
  for (const auto& c : r.HomogeneousComponents()) sum += c;
  EXPECT_EQ(sum, r);
}

TEST(PolyTest, ParseAndRender) {
  auto f = Field::Make(7);
  Poly p = ParsePoly("x1*x2 + 3*x3^2", f);
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(ParsePoly(RenderPoly(p), f), p);
  EXPECT_EQ(ParsePoly("(x1 - x2)*(x1 + x2) - 8", f), ParsePoly("x1^2 + 6*x2^2 + 6", f));
  EXPECT_EQ(ParsePoly(" x1 *x2+10 ", f), ParsePoly("x1*x2 + 3", f));
  std::mt19937_64 rng(26);
  for (const char* spec : {"5", "7", "3^2"}) {
    auto g = Field::Make(ParseFieldSpec(spec));
    for (int t = 0; t < 20; ++t) {
      Poly r = RandomPoly(g, 4, 3, rng);
      EXPECT_EQ(ParsePoly(RenderPoly(r), g, 4), r) << RenderPoly(r);
    }
  }
}

TEST(PolyTest, ParseErrors) {
  auto f = Field::Make(7);
  try {
    ParsePoly("x1^^2", f);
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(ParsePoly("x1 +", f), SyntaxError);
  EXPECT_THROW(ParsePoly("y1", f), SyntaxError);
  try {
    ParsePoly("x1^3", f, 0, 2);
    FAIL() << "expected DegreeExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeExceeded);
  }
}

TEST(PolyTest, InterpolationReproducesValues) {
  std::mt19937_64 rng(27);
  for (const char* spec : {"5", "2^2"}) {
    auto f = Field::Make(ParseFieldSpec(spec));
    const std::uint32_t q = f->q();
    Vec values(q * q);
    for (auto& e : values) e = Elem(rng() % q);
    Poly p = Interpolate(f, 2, values);
    for (std::uint32_t i = 0; i < q * q; ++i) {
      EXPECT_EQ(p.Eval(V({i / q, i % q})), values[i]);
    }
    for (const auto& [m, c] : p.terms()) {
      for (auto e : m) EXPECT_LT(e, q);
    }
  }
}

TEST(PolyTest, InverseVandermondeMatchesPowerSumFormula) {
  // Over F_p the t^e coefficient is -sum_t t^(p-1-e) g(t) for e >= 1.
  for (int p : {5, 7}) {
    auto f = Field::Make(p);
    Matrix w = InverseVandermonde(*f);
    for (int e = 1; e < p; ++e) {
      for (int t = 0; t < p; ++t) {
        long long pw = 1;
        for (int k = 0; k < p - 1 - e; ++k) pw = pw * t % p;
        if (p - 1 - e == 0) pw = 1;
        EXPECT_EQ(static_cast<int>(w(e, t).v), oracle::Mod(-pw, p));
      }
    }
  }
}

TEST(PolyTest, CollectionsAndDegrees) {
  auto f = Field::Make(7);
  auto c = ParseCollection("x1*x2; x3 + x1^3", f);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.nvars(), 3u);
  EXPECT_EQ(c.degrees(), (std::vector<int>{2, 3}));
  EXPECT_EQ(ParseCollection(c.CanonicalText(), f).CanonicalText(), c.CanonicalText());
}

}  // namespace
}  // namespace hirank
