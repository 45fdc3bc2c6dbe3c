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

#include "hirank/xn.hpp"

#include <algorithm>
#include <numeric>

namespace hirank {

Poly MakePn(FieldPtr field, const XnSpec& spec) {
  const std::size_t nv = spec.dim();
  Poly p(field, nv, static_cast<int>(spec.d));
  for (std::size_t i = 0; i < spec.n; ++i) {
    Monomial m(nv, 0);
    for (std::size_t j = 0; j < spec.d; ++j) m[spec.var(i, j)] = 1;
    p.AddTerm(m, field->one());
  }
  return p;
}

void RequireAdmissible(const FieldSpec& spec, int a, int d, std::uint32_t m) {
  const std::uint64_t q = spec.q();
  auto fail = [&](const std::string& why) {
    Fail(ErrorCode::kNotAdmissible,
         "field " + spec.ToString() + " is not admissible for a=" + std::to_string(a) +
             ", d=" + std::to_string(d) + ", m=" + std::to_string(m) + ": " + why);
  };
  if (q <= static_cast<std::uint64_t>(a) * d) fail("need |k| > a*d");
  if (m == 0 || (q - 1) % m != 0) fail("need m | q-1");
  if (m <= static_cast<std::uint32_t>(2 * a)) fail("need m > 2a");
  if (spec.p <= static_cast<std::uint32_t>(d)) fail("need char > d");
}

GammaElement GammaElement::Inverse() const {
  GammaElement g;
  for (const auto& p : perms) {
    std::vector<std::uint8_t> inv(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) inv[p[j]] = static_cast<std::uint8_t>(j);
    g.perms.push_back(std::move(inv));
  }
  return g;
}

GammaElement GammaElement::After(const GammaElement& other) const {
  GammaElement g;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    std::vector<std::uint8_t> c(perms[i].size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = perms[i][other.perms[i][j]];
    g.perms.push_back(std::move(c));
  }
  return g;
}

bool GammaElement::IsIdentity() const {
  for (const auto& p : perms) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] != j) return false;
    }
  }
  return true;
}

std::string GammaElement::ToString() const {
  std::string out;
  for (const auto& p : perms) {
    if (!out.empty()) out += "|";
    for (auto v : p) out += std::to_string(v + 1);
  }
  return out;
}

int Character::Alpha(std::size_t i, std::size_t j, std::size_t j2) const {
  int diff = static_cast<int>((beta[i * d + j2] + m - beta[i * d + j]) % m);
  // Representative in (-m/2, m/2].
  if (2 * diff > static_cast<int>(m)) diff -= static_cast<int>(m);
  return diff;
}

bool Character::IsTrivial() const {
  return std::all_of(beta.begin(), beta.end(), [](std::uint32_t b) { return b == 0; });
}

bool Character::Admissible(int a) const {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t j2 = j + 1; j2 < d; ++j2) {
        if (std::abs(Alpha(i, j, j2)) > a) return false;
      }
    }
  }
  return true;
}

bool Character::Plus(int a) const {
  if (!Admissible(a)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t j2 = j + 1; j2 < d; ++j2) {
        if (Alpha(i, j, j2) < 0) return false;
      }
    }
  }
  return true;
}

Character Character::ComposeGamma(const GammaElement& g) const {
  Character c = *this;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) c.beta[i * d + j] = beta[i * d + g.perms[i][j]];
    std::uint32_t base = c.beta[i * d];
    for (std::size_t j = 0; j < d; ++j) {
      c.beta[i * d + j] = (c.beta[i * d + j] + m - base) % m;
    }
  }
  return c;
}

Elem Character::Eval(const Field& f, const SubgroupDelta& delta,
                     std::span<const Elem> t) const {
  (void)f;
  std::uint64_t e = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    int lg = delta.log[t[k].v];
    Require(lg >= 0, ErrorCode::kInvalidArgument, "torus entry outside Delta");
    e += static_cast<std::uint64_t>(lg) * beta[k];
  }
  return delta.elements[e % m];
}

std::string Character::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += "|";
    for (std::size_t j = 1; j < d; ++j) {
      if (j > 1) out += ",";
      out += std::to_string(beta[i * d + j]);
    }
  }
  return out;
}

XnModel::XnModel(FieldPtr field, XnSpec spec, std::uint32_t m, const Budget& budget,
                 Exec exec)
    : field_(std::move(field)), spec_(spec), delta_(FindDelta(*field_, m)),
      pn_(MakePn(field_, spec)) {
  Require(spec.n >= 1 && spec.d >= 1, ErrorCode::kInvalidArgument, "n, d >= 1");
  table_ = std::make_shared<const VarietyTable>(
      VarietyTable::Enumerate(PolyCollection{{pn_}}, budget, exec));
}

Vec XnModel::Kappa(std::span<const Elem> c) const {
  const Field& f = *field_;
  Require(c.size() == spec_.n, ErrorCode::kDimensionMismatch, "kappa takes n values");
  Elem s;
  for (Elem e : c) s = f.add(s, e);
  Require(s.v == 0, ErrorCode::kNotInL, "kappa argument does not sum to zero");
  Vec v(spec_.dim(), f.one());
  for (std::size_t i = 0; i < spec_.n; ++i) v[spec_.var(i, 0)] = c[i];
  return v;
}

Vec XnModel::Nu(std::span<const Elem> v) const {
  const Field& f = *field_;
  Require(v.size() == spec_.dim(), ErrorCode::kDimensionMismatch, "nu takes nd values");
  Vec c(spec_.n);
  for (std::size_t i = 0; i < spec_.n; ++i) {
    Elem prod = f.one();
    for (std::size_t j = 0; j < spec_.d; ++j) prod = f.mul(prod, v[spec_.var(i, j)]);
    c[i] = prod;
  }
  return c;
}

Vec XnModel::LPoint(std::span<const Elem> free) const {
  const Field& f = *field_;
  Require(free.size() + 1 == spec_.n, ErrorCode::kDimensionMismatch,
          "L is parametrized by n - 1 values");
  Vec c(spec_.n);
  Elem s;
  for (std::size_t i = 0; i + 1 < spec_.n; ++i) {
    c[i] = free[i];
    s = f.add(s, free[i]);
  }
  c[spec_.n - 1] = f.neg(s);
  return c;
}

std::vector<Vec> XnModel::LPoints() const {
  const std::uint32_t q = field_->q();
  std::vector<Vec> out;
  const std::uint64_t count = SatPow(q, spec_.n - 1);
  Vec free(spec_.n - 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    PointFromIndex(i, q, free);
    out.push_back(LPoint(free));
  }
  return out;
}

bool XnModel::IsTorusElement(std::span<const Elem> t) const {
  const Field& f = *field_;
  if (t.size() != spec_.dim()) return false;
  for (std::size_t i = 0; i < spec_.n; ++i) {
    Elem prod = f.one();
    for (std::size_t j = 0; j < spec_.d; ++j) {
      Elem u = t[spec_.var(i, j)];
      if (!delta_.Contains(u)) return false;
      prod = f.mul(prod, u);
    }
    if (prod != f.one()) return false;
  }
  return true;
}

std::uint64_t XnModel::TorusSize() const {
  return SatPow(delta_.m, (spec_.d - 1) * spec_.n);
}

Vec XnModel::TorusFromExponents(std::span<const std::uint32_t> k) const {
  const Field& f = *field_;
  const std::size_t d = spec_.d;
  Require(k.size() == (d - 1) * spec_.n, ErrorCode::kDimensionMismatch,
          "torus exponent vector length");
  Vec t(spec_.dim());
  for (std::size_t i = 0; i < spec_.n; ++i) {
    std::uint64_t total = 0;
    for (std::size_t j = 1; j < d; ++j) {
      std::uint32_t e = k[i * (d - 1) + (j - 1)] % delta_.m;
      t[spec_.var(i, j)] = delta_.elements[e];
      total += e;
    }
    t[spec_.var(i, 0)] = delta_.elements[(delta_.m - total % delta_.m) % delta_.m];
  }
  (void)f;
  return t;
}

std::vector<Vec> XnModel::TorusElements() const {
  const std::size_t len = (spec_.d - 1) * spec_.n;
  std::vector<Vec> out;
  std::vector<std::uint32_t> k(len, 0);
  const std::uint64_t count = TorusSize();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t c = len; c-- > 0;) {
      k[c] = static_cast<std::uint32_t>(r % delta_.m);
      r /= delta_.m;
    }
    out.push_back(TorusFromExponents(k));
  }
  return out;
}

Vec XnModel::TorusAct(std::span<const Elem> t, std::span<const Elem> v) const {
  const Field& f = *field_;
  Require(t.size() == v.size() && v.size() == spec_.dim(), ErrorCode::kDimensionMismatch,
          "torus action dimensions");
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = f.mul(t[k], v[k]);
  return out;
}

GammaElement XnModel::GammaIdentity() const {
  GammaElement g;
  std::vector<std::uint8_t> id(spec_.d);
  std::iota(id.begin(), id.end(), 0);
  g.perms.assign(spec_.n, id);
  return g;
}

std::vector<GammaElement> XnModel::GammaElements() const {
  std::vector<std::vector<std::uint8_t>> block;
  std::vector<std::uint8_t> p(spec_.d);
  std::iota(p.begin(), p.end(), 0);
  do {
    block.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<GammaElement> out;
  const std::uint64_t count = SatPow(block.size(), spec_.n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    GammaElement g;
    g.perms.resize(spec_.n);
    std::uint64_t r = idx;
    for (std::size_t i = spec_.n; i-- > 0;) {
      g.perms[i] = block[r % block.size()];
      r /= block.size();
    }
    out.push_back(std::move(g));
  }
  return out;
}

Vec XnModel::GammaAct(const GammaElement& g, std::span<const Elem> v) const {
  Require(v.size() == spec_.dim(), ErrorCode::kDimensionMismatch, "gamma action");
  Vec out(v.size());
  for (std::size_t i = 0; i < spec_.n; ++i) {
    for (std::size_t j = 0; j < spec_.d; ++j) {
      out[spec_.var(i, g.perms[i][j])] = v[spec_.var(i, j)];
    }
  }
  return out;
}

Poly XnModel::ComposeGamma(const Poly& p, const GammaElement& g) const {
  std::vector<Poly> subs(spec_.dim(), Poly(field_, spec_.dim()));
  for (std::size_t i = 0; i < spec_.n; ++i) {
    for (std::size_t j = 0; j < spec_.d; ++j) {
      subs[spec_.var(i, g.perms[i][j])] = Poly::Variable(field_, spec_.dim(), spec_.var(i, j));
    }
  }
  return p.Compose(subs);
}

bool XnModel::InX0(std::span<const Elem> v) const {
  for (std::size_t i = 0; i < spec_.n; ++i) {
    for (std::size_t j = 1; j < spec_.d; ++j) {
      if (!delta_.Contains(v[spec_.var(i, j)])) return false;
    }
  }
  return true;
}

std::optional<Vec> XnModel::TorusPart(std::span<const Elem> v) const {
  const Field& f = *field_;
  if (!InX0(v)) return std::nullopt;
  Vec t(spec_.dim());
  for (std::size_t i = 0; i < spec_.n; ++i) {
    Elem prod = f.one();
    for (std::size_t j = 1; j < spec_.d; ++j) {
      t[spec_.var(i, j)] = v[spec_.var(i, j)];
      prod = f.mul(prod, v[spec_.var(i, j)]);
    }
    t[spec_.var(i, 0)] = f.inv(prod);
  }
  return t;
}

Character XnModel::CharacterFromIndex(std::uint64_t idx) const {
  Character c;
  c.n = spec_.n;
  c.d = spec_.d;
  c.m = delta_.m;
  c.beta.assign(spec_.dim(), 0);
  for (std::size_t i = spec_.n; i-- > 0;) {
    for (std::size_t j = spec_.d; j-- > 1;) {
      c.beta[spec_.var(i, j)] = static_cast<std::uint32_t>(idx % delta_.m);
      idx /= delta_.m;
    }
  }
  return c;
}

std::uint64_t XnModel::CharacterIndex(const Character& c) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < spec_.n; ++i) {
    for (std::size_t j = 1; j < spec_.d; ++j) idx = idx * delta_.m + c.beta[spec_.var(i, j)];
  }
  return idx;
}

std::vector<Character> XnModel::Characters() const {
  std::vector<Character> out;
  for (std::uint64_t i = 0; i < TorusSize(); ++i) out.push_back(CharacterFromIndex(i));
  return out;
}

std::optional<GammaElement> XnModel::FindPlusGamma(const Character& theta, int a) const {
  for (const auto& g : GammaElements()) {
    if (theta.ComposeGamma(g).Plus(a)) return g;
  }
  return std::nullopt;
}

}  // namespace hirank
