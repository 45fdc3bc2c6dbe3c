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

#include "hirank/field.hpp"

#include <algorithm>
#include <charconv>

namespace hirank {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonDivisor: return "NonDivisor";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDegreeExceeded: return "DegreeExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kDegenerateCount: return "DegenerateCount";
    case ErrorCode::kNotInL: return "NotInL";
    case ErrorCode::kEmptyCatalog: return "EmptyCatalog";
    case ErrorCode::kFlatNotInX: return "FlatNotInX";
    case ErrorCode::kNotWeaklyPolynomial: return "NotWeaklyPolynomial";
    case ErrorCode::kNonAdmissibleComponentNonzero:
      return "NonAdmissibleComponentNonzero";
    case ErrorCode::kNoPlusGamma: return "NoPlusGamma";
    case ErrorCode::kVanishingCheckFailed: return "VanishingCheckFailed";
    case ErrorCode::kSliceBudgetExceeded: return "SliceBudgetExceeded";
    case ErrorCode::kResidualNotLowerDegree: return "ResidualNotLowerDegree";
    case ErrorCode::kTooManySlices: return "TooManySlices";
    case ErrorCode::kEmptyFiber: return "EmptyFiber";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

bool IsPropertyFailure(ErrorCode code) {
  return code == ErrorCode::kNonAdmissibleComponentNonzero ||
         code == ErrorCode::kNoPlusGamma ||
         code == ErrorCode::kVanishingCheckFailed ||
         code == ErrorCode::kResidualNotLowerDegree;
}

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Digits = std::vector<std::uint32_t>;

// Remainder of a modulo the monic b, over F_p. Both lowest degree first.
Digits PolyMod(Digits a, const Digits& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool IsZeroPoly(const Digits& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

}  // namespace

bool IsIrreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  const std::size_t l = monic.size() - 1;
  if (l <= 1) return true;
  // Trial division by every monic polynomial of degree 1..l/2.
  for (std::size_t deg = 1; deg <= l / 2; ++deg) {
    std::uint64_t count = SatPow(p, deg);
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits div(deg + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < deg; ++i) {
        div[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      div[deg] = 1;
      if (IsZeroPoly(PolyMod(monic, div, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> LeastIrreducible(std::uint32_t p, std::uint32_t l) {
  if (l == 1) return {0, 1};
  std::uint64_t count = SatPow(p, l);
  for (std::uint64_t code = 0; code < count; ++code) {
    // code's most significant base-p digit is the t^(l-1) coefficient.
    Digits f(l + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < l; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[l] = 1;
    if (f[0] != 0 && IsIrreducible(p, f)) return f;
  }
  Fail(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
}

std::uint32_t FieldSpec::q() const {
  return static_cast<std::uint32_t>(SatPow(p, l));
}

std::string FieldSpec::ToString() const {
  if (l == 1) return std::to_string(p);
  return std::to_string(p) + "^" + std::to_string(l);
}

FieldSpec MakeFieldSpec(std::uint32_t p, std::uint32_t l) {
  Require(IsPrime(p), ErrorCode::kInvalidArgument,
          "field characteristic " + std::to_string(p) + " is not prime");
  Require(l >= 1, ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  Require(SatPow(p, l) <= Field::kMaxOrder, ErrorCode::kInvalidArgument,
          "field order exceeds " + std::to_string(Field::kMaxOrder));
  FieldSpec spec;
  spec.p = p;
  spec.l = l;
  spec.modulus = LeastIrreducible(p, l);
  return spec;
}

FieldSpec ParseFieldSpec(const std::string& text) {
  auto parse_uint = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      Fail(ErrorCode::kInvalidArgument, "bad field literal '" + text + "'");
    }
    return v;
  };
  std::string_view sv(text);
  auto caret = sv.find('^');
  if (caret == std::string_view::npos) return MakeFieldSpec(parse_uint(sv), 1);
  return MakeFieldSpec(parse_uint(sv.substr(0, caret)),
                       parse_uint(sv.substr(caret + 1)));
}

std::shared_ptr<const Field> Field::Make(const FieldSpec& spec) {
  return std::make_shared<const Field>(spec);
}

std::shared_ptr<const Field> Field::Make(std::uint32_t p, std::uint32_t l) {
  return Make(MakeFieldSpec(p, l));
}

Field::Field(const FieldSpec& spec) : spec_(spec), q_(spec.q()) {
  Require(IsPrime(spec.p), ErrorCode::kInvalidArgument, "p must be prime");
  Require(q_ <= kMaxOrder, ErrorCode::kInvalidArgument, "field too large");
  Require(spec.modulus.size() == spec.l + 1 && spec.modulus.back() == 1,
          ErrorCode::kInvalidArgument, "modulus must be monic of degree l");
  Require(IsIrreducible(spec.p, spec.modulus), ErrorCode::kInvalidArgument,
          "modulus is reducible");
  const std::uint32_t p = spec.p, l = spec.l, q = q_;

  auto digits = [&](std::uint32_t idx) {
    Digits d(l);
    for (std::uint32_t i = 0; i < l; ++i) {
      d[i] = idx % p;
      idx /= p;
    }
    return d;
  };
  auto index = [&](const Digits& d) {
    std::uint32_t idx = 0;
    for (std::uint32_t i = l; i-- > 0;) idx = idx * p + (i < d.size() ? d[i] : 0);
    return idx;
  };
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    if (l == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    Digits da = digits(a), db = digits(b), prod(2 * l - 1, 0);
    for (std::uint32_t i = 0; i < l; ++i) {
      for (std::uint32_t j = 0; j < l; ++j) {
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
    }
    return index(PolyMod(prod, spec_.modulus, p));
  };

  add_.resize(std::size_t{q} * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Digits da = digits(a);
    Digits dn(l);
    for (std::uint32_t i = 0; i < l; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<std::uint16_t>(index(dn));
    for (std::uint32_t b = 0; b < q; ++b) {
      Digits db = digits(b), s(l);
      for (std::uint32_t i = 0; i < l; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<std::uint16_t>(index(s));
    }
  }

  // Exhaustive primitive root search from index 2 upward.
  std::uint32_t g = q == 2 ? 1 : 0;
  for (std::uint32_t cand = 2; g == 0 && cand < q; ++cand) {
    std::uint32_t x = cand, order = 1;
    while (x != 1) {
      x = slow_mul(x, cand);
      ++order;
    }
    if (order == q - 1) g = cand;
  }
  primitive_root_ = Elem(g);
  exp_.resize(q - 1);
  log_.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    exp_[k] = static_cast<std::uint16_t>(x);
    log_[x] = static_cast<std::uint16_t>(k);
    x = slow_mul(x, g);
  }
  mul_.assign(std::size_t{q} * q, 0);
  inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    inv_[a] = exp_[(q - 1 - log_[a]) % (q - 1)];
    for (std::uint32_t b = 1; b < q; ++b) {
      mul_[a * q + b] = exp_[(log_[a] + log_[b]) % (q - 1)];
    }
  }

  trace_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Elem y(a), sum(0);
    for (std::uint32_t i = 0; i < l; ++i) {
      sum = add(sum, y);
      y = pow(y, p);
    }
    Require(sum.v < p, ErrorCode::kInvalidArgument, "trace left prime field");
    trace_[a] = static_cast<std::uint8_t>(sum.v);
  }
}

Elem Field::FromInt(long long n) const {
  long long r = n % static_cast<long long>(spec_.p);
  if (r < 0) r += spec_.p;
  return Elem(static_cast<std::uint32_t>(r));
}

Elem Field::inv(Elem a) const {
  Require(a.v != 0, ErrorCode::kInvalidArgument, "inverse of zero");
  return Elem(inv_[a.v]);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  return Elem(exp_[(log_[a.v] * (e % (q_ - 1))) % (q_ - 1)]);
}

std::vector<std::uint32_t> Field::Coeffs(Elem a) const {
  std::vector<std::uint32_t> d(spec_.l);
  std::uint32_t idx = a.v;
  for (std::uint32_t i = 0; i < spec_.l; ++i) {
    d[i] = idx % spec_.p;
    idx /= spec_.p;
  }
  return d;
}

Elem Field::FromCoeffs(std::span<const std::uint32_t> coeffs) const {
  Require(coeffs.size() == spec_.l, ErrorCode::kDimensionMismatch,
          "coefficient vector length must equal l");
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    Require(coeffs[i] < spec_.p, ErrorCode::kInvalidArgument,
            "coefficient not reduced");
    idx = idx * spec_.p + coeffs[i];
  }
  return Elem(idx);
}

std::string Field::ToString(Elem a) const {
  if (spec_.l == 1) return std::to_string(a.v);
  return "{" + std::to_string(a.v) + "}";
}

SubgroupDelta FindDelta(const Field& field, std::uint32_t m) {
  const std::uint32_t q = field.q();
  if (m == 0 || (q - 1) % m != 0) {
    Fail(ErrorCode::kNonDivisor, "m = " + std::to_string(m) +
                                     " does not divide q - 1 = " +
                                     std::to_string(q - 1));
  }
  SubgroupDelta delta;
  delta.m = m;
  delta.generator = field.pow(field.primitive_root(), (q - 1) / m);
  delta.log.assign(q, -1);
  Elem x = field.one();
  for (std::uint32_t k = 0; k < m; ++k) {
    delta.elements.push_back(x);
    delta.log[x.v] = static_cast<int>(k);
    x = field.mul(x, delta.generator);
  }
  return delta;
}

}  // namespace hirank
