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

#include "hirank/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>

namespace hirank {

int TotalDegree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = TotalDegree(a), db = TotalDegree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Monomial> MonomialsUpTo(std::size_t n, int deg, int cap) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    int hi = cap > 0 ? std::min(left, cap - 1) : left;
    for (int e = 0; e <= hi; ++e) {
      cur[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, deg);
  std::sort(out.begin(), out.end(), GrlexGreater());
  return out;
}

Poly::Poly(FieldPtr field, std::size_t nvars, int bound)
    : field_(std::move(field)), nvars_(nvars), bound_(bound) {
  Require(field_ != nullptr, ErrorCode::kInvalidArgument, "null field");
}

Poly Poly::Constant(FieldPtr field, std::size_t nvars, Elem c) {
  Poly p(std::move(field), nvars);
  p.AddTerm(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::Variable(FieldPtr field, std::size_t nvars, std::size_t i) {
  Require(i < nvars, ErrorCode::kDimensionMismatch, "variable index");
  Monomial m(nvars, 0);
  m[i] = 1;
  Poly p(std::move(field), nvars);
  p.AddTerm(m, Elem(1));
  return p;
}

Poly Poly::Monom(FieldPtr field, Monomial m, Elem c) {
  Poly p(std::move(field), m.size());
  p.AddTerm(m, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return TotalDegree(terms_.begin()->first);
}

bool Poly::IsHomogeneous() const {
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return TotalDegree(t.first) == d; });
}

Elem Poly::Coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Elem(0) : it->second;
}

void Poly::AddTerm(const Monomial& m, Elem c) {
  Require(m.size() == nvars_, ErrorCode::kDimensionMismatch,
          "monomial has wrong number of variables");
  if (c.v == 0) return;
  if (TotalDegree(m) > bound_) {
    Fail(ErrorCode::kDegreeExceeded,
         "term of degree " + std::to_string(TotalDegree(m)) +
             " exceeds bound " + std::to_string(bound_));
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second.v == 0) terms_.erase(it);
  }
}

void Poly::CheckCompatible(const Poly& o) const {
  Require(nvars_ == o.nvars_, ErrorCode::kDimensionMismatch,
          "polynomials live in different rings");
  Require(field_->spec() == o.field_->spec(), ErrorCode::kInvalidArgument,
          "polynomials over different fields");
}

Poly& Poly::operator+=(const Poly& o) {
  CheckCompatible(o);
  bound_ = std::max(bound_, o.bound_);
  for (const auto& [m, c] : o.terms_) AddTerm(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  CheckCompatible(o);
  bound_ = std::max(bound_, o.bound_);
  for (const auto& [m, c] : o.terms_) AddTerm(m, field_->neg(c));
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const { return Scaled(field_->neg(field_->one())); }

Poly Poly::operator*(const Poly& o) const {
  CheckCompatible(o);
  int bound = (bound_ == kUnbounded || o.bound_ == kUnbounded)
                  ? kUnbounded
                  : bound_ + o.bound_;
  Poly r(field_, nvars_, bound);
  Monomial m(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) {
        m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      }
      r.AddTerm(m, field_->mul(ca, cb));
    }
  }
  return r;
}

Poly Poly::Scaled(Elem c) const {
  Poly r(field_, nvars_, bound_);
  if (c.v == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, field_->mul(c, x));
  return r;
}

Poly Poly::Pow(unsigned k) const {
  Poly r = Constant(field_, nvars_, field_->one());
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Elem Poly::Eval(std::span<const Elem> v) const {
  Require(v.size() == nvars_, ErrorCode::kDimensionMismatch,
          "point has " + std::to_string(v.size()) + " coordinates, expected " +
              std::to_string(nvars_));
  const Field& f = *field_;
  Elem s;
  for (const auto& [m, c] : terms_) {
    Elem t = c;
    for (std::size_t i = 0; i < nvars_ && t.v != 0; ++i) {
      if (m[i]) t = f.mul(t, f.pow(v[i], m[i]));
    }
    s = f.add(s, t);
  }
  return s;
}

std::vector<Poly> Poly::HomogeneousComponents() const {
  // Entry i is the degree-i part, zero where P has no terms of that degree.
  std::vector<Poly> out;
  if (IsZero()) return out;
  out.assign(degree() + 1, Poly(field_, nvars_, bound_));
  for (const auto& [m, c] : terms_) out[TotalDegree(m)].terms_.emplace(m, c);
  return out;
}

Poly Poly::HomogeneousPart(int deg) const {
  Poly r(field_, nvars_, bound_);
  for (const auto& [m, c] : terms_) {
    if (TotalDegree(m) == deg) r.terms_.emplace(m, c);
  }
  return r;
}

Poly Poly::Partial(std::size_t var) const {
  Require(var < nvars_, ErrorCode::kDimensionMismatch, "variable index");
  Poly r(field_, nvars_, bound_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial mm = m;
    --mm[var];
    r.AddTerm(mm, field_->mul(c, field_->FromInt(m[var])));
  }
  return r;
}

Poly Poly::Compose(const std::vector<Poly>& subs) const {
  Require(subs.size() == nvars_, ErrorCode::kDimensionMismatch,
          "substitution needs one polynomial per variable");
  std::size_t target = subs.empty() ? 0 : subs.front().nvars();
  Poly r(field_, target);
  if (subs.empty()) {
    for (const auto& [m, c] : terms_) r.AddTerm(Monomial{}, c);
    return r;
  }
  // powers[i][e] = subs[i]^e, filled lazily.
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Constant(field_, target, field_->one()));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * subs[i]);
    return pw[e];
  };
  for (const auto& [m, c] : terms_) {
    Poly t = Constant(field_, target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i]) t = t * power(i, m[i]);
    }
    for (const auto& [mm, cc] : t.terms_) r.AddTerm(mm, cc);
  }
  return r;
}

Poly Poly::ReducedAsFunction() const {
  const std::uint32_t q = field_->q();
  Poly r(field_, nvars_, bound_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    for (auto& e : mm) {
      if (e >= q) e = static_cast<std::uint16_t>((e - 1) % (q - 1) + 1);
    }
    r.AddTerm(mm, c);
  }
  return r;
}

Poly Poly::WithBound(int bound) const {
  if (degree() > bound) {
    Fail(ErrorCode::kDegreeExceeded, "degree " + std::to_string(degree()) +
                                         " exceeds bound " +
                                         std::to_string(bound));
  }
  Poly r = *this;
  r.bound_ = bound;
  return r;
}

Poly Poly::WithNvars(std::size_t nvars) const {
  Poly r(field_, nvars, bound_);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = nvars; i < m.size(); ++i) {
      Require(m[i] == 0, ErrorCode::kDimensionMismatch,
              "cannot drop a variable that occurs");
    }
    Monomial mm(nvars, 0);
    std::copy_n(m.begin(), std::min(nvars, m.size()), mm.begin());
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

Poly Poly::ChangeField(FieldPtr target) const {
  Require(target->p() == field_->p(), ErrorCode::kInvalidArgument,
          "characteristic mismatch");
  Poly r(target, nvars_, bound_);
  for (const auto& [m, c] : terms_) {
    Require(field_->InPrimeField(c), ErrorCode::kInvalidArgument,
            "coefficient outside the prime field");
    r.terms_.emplace(m, Elem(c.v));
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && field_->spec() == o.field_->spec() &&
         terms_ == o.terms_;
}

PolyEvaluator::PolyEvaluator(const Poly& p)
    : field_(p.field_ptr()), nvars_(p.nvars()) {
  offsets_.push_back(0);
  for (const auto& [m, c] : p.terms()) {
    coeffs_.push_back(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i]) factors_.push_back({static_cast<std::uint32_t>(i), m[i]});
    }
    offsets_.push_back(static_cast<std::uint32_t>(factors_.size()));
  }
}

Elem PolyEvaluator::operator()(const Elem* x) const {
  const Field& f = *field_;
  const std::uint32_t q = f.q();
  const std::uint16_t* add = f.add_table();
  const std::uint16_t* mul = f.mul_table();
  std::uint32_t s = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    std::uint32_t v = coeffs_[t].v;
    for (std::uint32_t k = offsets_[t]; k < offsets_[t + 1] && v; ++k) {
      std::uint32_t xv = x[factors_[k].var].v;
      for (std::uint32_t e = 0; e < factors_[k].exp; ++e) v = mul[v * q + xv];
    }
    s = add[s * q + v];
  }
  return Elem(s);
}

std::string RenderPoly(const Poly& p) {
  if (p.IsZero()) return "0";
  const Field& f = p.field();
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += f.ToString(c);
    } else if (c == f.one()) {
      out += mono;
    } else {
      out += f.ToString(c) + "*" + mono;
    }
  }
  return out;
}

namespace {

// Recursive-descent parser. Polynomials are built over a generous ring and
// trimmed to the requested variable count afterwards.
class Parser {
 public:
  Parser(const std::string& s, FieldPtr field) : s_(s), field_(std::move(field)) {}

  Poly Parse() {
    Poly p = Expr();
    Skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "unexpected character");
    return p;
  }
  std::size_t max_var() const { return max_var_; }

  static constexpr std::size_t kRing = 64;

 private:
  void Skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool Accept(char c) {
    Skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned long long Number() {
    Skip();
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (ULLONG_MAX - 9) / 10) throw SyntaxError(start, "integer too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "expected integer");
    return v;
  }
  Poly Expr() {
    Skip();
    Poly acc(field_, kRing);
    bool neg = false;
    if (Accept('-')) {
      neg = true;
    } else {
      Accept('+');
    }
    while (true) {
      Poly t = Term();
      acc = neg ? acc - t : acc + t;
      if (Accept('+')) {
        neg = false;
      } else if (Accept('-')) {
        neg = true;
      } else {
        break;
      }
    }
    return acc;
  }
  Poly Term() {
    Poly acc = Factor();
    while (Accept('*')) acc = acc * Factor();
    return acc;
  }
  Poly Factor() {
    Poly base = Primary();
    if (Accept('^')) {
      Skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        throw SyntaxError(pos_, "expected exponent");
      }
      auto e = Number();
      if (e > 4096) throw SyntaxError(pos_, "exponent too large");
      base = base.Pow(static_cast<unsigned>(e));
    }
    return base;
  }
  Poly Primary() {
    Skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = Expr();
      if (!Accept(')')) throw SyntaxError(pos_, "expected ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        throw SyntaxError(pos_, "expected variable index");
      }
      auto i = Number();
      if (i == 0 || i > kRing) throw SyntaxError(at, "variable index out of range");
      max_var_ = std::max<std::size_t>(max_var_, i);
      return Poly::Variable(field_, kRing, i - 1);
    }
    if (c == '{') {
      ++pos_;
      auto v = Number();
      if (v >= field_->q()) throw SyntaxError(pos_, "element index out of range");
      if (!Accept('}')) throw SyntaxError(pos_, "expected '}'");
      return Poly::Constant(field_, kRing, Elem(static_cast<std::uint32_t>(v)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto v = Number();
      return Poly::Constant(field_, kRing,
                            Elem(static_cast<std::uint32_t>(v % field_->p())));
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  FieldPtr field_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
};

}  // namespace

Poly ParsePoly(const std::string& text, FieldPtr field, std::size_t nvars,
               int bound) {
  Parser parser(text, field);
  Poly p = parser.Parse();
  std::size_t n = nvars == 0 ? std::max<std::size_t>(parser.max_var(), 1) : nvars;
  Require(parser.max_var() <= n, ErrorCode::kDimensionMismatch,
          "polynomial uses x" + std::to_string(parser.max_var()) + " but only " +
              std::to_string(n) + " variables were declared");
  return p.WithNvars(n).WithBound(bound);
}

std::size_t PolyCollection::nvars() const {
  Require(!polys.empty(), ErrorCode::kInvalidArgument, "empty collection");
  return polys.front().nvars();
}

std::vector<int> PolyCollection::degrees() const {
  std::vector<int> d;
  for (const auto& p : polys) d.push_back(p.degree());
  return d;
}

void PolyCollection::Validate() const {
  Require(!polys.empty(), ErrorCode::kInvalidArgument, "empty collection");
  for (const auto& p : polys) {
    Require(p.nvars() == polys.front().nvars(), ErrorCode::kDimensionMismatch,
            "collection members must share nvars");
    Require(p.field().spec() == polys.front().field().spec(),
            ErrorCode::kInvalidArgument, "collection members must share a field");
  }
}

std::string PolyCollection::CanonicalText() const {
  std::string out;
  for (const auto& p : polys) {
    if (!out.empty()) out += "; ";
    out += RenderPoly(p);
  }
  return out;
}

PolyCollection ParseCollection(const std::string& text, FieldPtr field,
                               std::size_t nvars) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::size_t n = nvars;
  if (n == 0) {
    for (const auto& s : parts) n = std::max(n, ParsePoly(s, field).nvars());
  }
  PolyCollection c;
  for (const auto& s : parts) c.polys.push_back(ParsePoly(s, field, n));
  c.Validate();
  return c;
}

Elem DerivativeForm(const Poly& p, const std::vector<Vec>& hs,
                    std::span<const Elem> x) {
  const Field& f = p.field();
  const std::size_t n = p.nvars();
  Require(x.size() == n, ErrorCode::kDimensionMismatch, "base point length");
  for (const auto& h : hs) {
    Require(h.size() == n, ErrorCode::kDimensionMismatch, "direction length");
  }
  const std::size_t d = hs.size();
  Elem s;
  Vec pt(n);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << d); ++w) {
    std::copy(x.begin(), x.end(), pt.begin());
    for (std::size_t i = 0; i < d; ++i) {
      if (w >> i & 1) {
        for (std::size_t k = 0; k < n; ++k) pt[k] = f.add(pt[k], hs[i][k]);
      }
    }
    Elem v = p.Eval(pt);
    s = (std::popcount(w) & 1) ? f.sub(s, v) : f.add(s, v);
  }
  return s;
}

Matrix InverseVandermonde(const Field& f) {
  const std::uint32_t q = f.q();
  Matrix aug(q, 2 * q);
  for (std::uint32_t t = 0; t < q; ++t) {
    for (std::uint32_t e = 0; e < q; ++e) aug(t, e) = f.pow(Elem(t), e);
    aug(t, q + t) = f.one();
  }
  Rref r = RowReduce(f, aug);
  Matrix inv_v(q, q);
  for (std::uint32_t i = 0; i < q; ++i) {
    for (std::uint32_t j = 0; j < q; ++j) inv_v(i, j) = r.m(i, q + j);
  }
  return inv_v;
}

Poly Interpolate(FieldPtr field, std::size_t nvars, std::span<const Elem> values) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  Require(values.size() == SatPow(q, nvars), ErrorCode::kDimensionMismatch,
          "value table size must be q^nvars");
  const Matrix inv_v = InverseVandermonde(f);

  std::vector<Elem> a(values.begin(), values.end());
  std::vector<Elem> line(q), out(q);
  // Transform along each axis; axis k has stride q^(nvars-1-k).
  for (std::size_t k = 0; k < nvars; ++k) {
    std::uint64_t stride = SatPow(q, nvars - 1 - k);
    std::uint64_t block = stride * q;
    for (std::uint64_t base = 0; base < a.size(); base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t t = 0; t < q; ++t) line[t] = a[base + off + t * stride];
        for (std::uint32_t e = 0; e < q; ++e) {
          out[e] = Dot(f, inv_v.row(e), line);
        }
        for (std::uint32_t e = 0; e < q; ++e) a[base + off + e * stride] = out[e];
      }
    }
  }
  Poly p(field, nvars);
  Monomial m(nvars);
  for (std::uint64_t idx = 0; idx < a.size(); ++idx) {
    if (a[idx].v == 0) continue;
    std::uint64_t r2 = idx;
    for (std::size_t k = nvars; k-- > 0;) {
      m[k] = static_cast<std::uint16_t>(r2 % q);
      r2 /= q;
    }
    p.AddTerm(m, a[idx]);
  }
  return p;
}

}  // namespace hirank
