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

#include "hirank/io.hpp"

#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hirank/session.hpp"

namespace hirank {

namespace {

constexpr std::array<char, 8> kVarietyMagic = {'H', 'R', 'V', 'A', 'R', '0', '0', '1'};
constexpr std::array<char, 8> kFnMagic = {'H', 'R', 'F', 'N', '0', '0', '0', '1'};

void PutU32(std::ostream& o, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) o.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
void PutU64(std::ostream& o, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) o.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
void PutU16(std::ostream& o, std::uint32_t v) {
  o.put(static_cast<char>(v & 0xff));
  o.put(static_cast<char>((v >> 8) & 0xff));
}

std::uint64_t GetLE(std::istream& in, int bytes, const std::string& path) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    int c = in.get();
    Require(c != EOF, ErrorCode::kIoError, "truncated file " + path);
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}

void ExpectMagic(std::istream& in, const std::array<char, 8>& magic, const std::string& path) {
  std::array<char, 8> got{};
  in.read(got.data(), got.size());
  Require(in.gcount() == 8 && got == magic, ErrorCode::kIoError, "bad magic in " + path);
}

std::ofstream OpenOut(const std::string& path, std::ios::openmode mode) {
  auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, mode);
  Require(static_cast<bool>(out), ErrorCode::kIoError, "cannot write " + path);
  return out;
}

}  // namespace

Json ToJson(const Vec& v) {
  Json j = Json::array();
  for (Elem e : v) j.push_back(e.v);
  return j;
}

Json ToJson(const CycloInt& c) {
  Json j = Json::array();
  for (const auto& x : c.coeffs()) j.push_back(x.str());
  return j;
}

Json ToJson(const Rational& r) { return RationalToString(r); }

Json ToJson(const AffineFlat& flat) {
  Json dirs = Json::array();
  for (const auto& d : flat.directions()) dirs.push_back(ToJson(d));
  return Json{{"base", ToJson(flat.base())}, {"directions", dirs}};
}

Json ToJson(const AffineMap& map) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < map.target_dim(); ++r) {
    Vec row(map.linear().row(r).begin(), map.linear().row(r).end());
    rows.push_back(ToJson(row));
  }
  return Json{{"linear", rows}, {"translation", ToJson(map.translation())}};
}

Json ToJson(const RankValue& r) {
  if (r.kind == RankValue::Kind::kExact) return r.value;
  return r.ToString();
}

Json ToJson(const BiasResult& b) {
  Json j{{"abs2", ToJson(b.abs2)}, {"denominator", b.denominator.str()}, {"value", b.value}};
  if (auto sq = b.SquaredRational()) j["bias_squared"] = ToJson(*sq);
  return j;
}

Json ToJson(const GowersResult& g, std::uint32_t q) {
  Json j{{"d", g.d},
         {"mode", g.mode == GowersMode::kExact ? "exact" : "sampled"},
         {"value_pow", g.value_pow},
         {"arank", AnalyticRank(g, q)}};
  if (g.mode == GowersMode::kExact) {
    j["numerator"] = ToJson(g.numerator);
    j["denominator"] = g.denominator.str();
    if (g.exact) j["exact"] = ToJson(*g.exact);
  } else {
    j["std_error"] = g.std_error;
    j["samples"] = g.samples;
    j["seed"] = g.seed;
  }
  return j;
}

Json ToJson(const SingularBoundReport& s) {
  return Json{{"bound", ToJson(s.bound)},
              {"bound_value", RationalToDouble(s.bound)},
              {"codim", s.codim},
              {"dim_x", s.dim_x},
              {"dim_sing", s.dim_sing},
              {"slope_x", s.slope_x},
              {"slope_sing", s.slope_sing},
              {"slope_flag", s.slope_flag},
              {"degenerate", s.degenerate},
              {"counts",
               {{"x_k", s.count_x_k},
                {"x_k2", s.count_x_k2},
                {"sing_k", s.count_sing_k},
                {"sing_k2", s.count_sing_k2}}}};
}

Json ToJson(const WeakTestResult& w) {
  Json j{{"weakly_polynomial", w.ok}, {"flats_checked", w.flats_checked}};
  if (w.violation) {
    j["violation"] = ToJson(*w.violation);
    j["violation_degree"] = w.violation_degree;
  }
  return j;
}

Json ToJson(const QuotientReport& r) {
  return Json{{"dim_weak", r.dim_weak}, {"dim_poly", r.dim_poly}, {"quotient", r.quotient}};
}

Json ToJson(const ExtensionResult& r) {
  Json j{{"status", std::string(StatusName(r.status))}, {"engine", r.engine}};
  if (r.poly) j["poly"] = RenderPoly(*r.poly);
  if (!r.certificate.empty()) j["certificate"] = ToJson(r.certificate);
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.theta_steps.empty()) {
    Json steps = Json::array();
    for (const auto& s : r.theta_steps) {
      steps.push_back(Json{{"theta", s.theta.ToString()},
                           {"gamma", s.gamma.ToString()},
                           {"h", RenderPoly(s.h)},
                           {"p", RenderPoly(s.p)}});
    }
    j["theta_steps"] = steps;
  }
  if (!r.stripped_degrees.empty()) j["stripped_degrees"] = r.stripped_degrees;
  if (!r.slice_steps.empty()) {
    Json steps = Json::array();
    for (const auto& s : r.slice_steps) {
      steps.push_back(Json{{"level", s.level},
                           {"b", s.b.v},
                           {"matched", s.matched},
                           {"q_degree", s.q_degree}});
    }
    j["slice_steps"] = steps;
  }
  return j;
}

Json ToJson(const DeficiencyReport& r) {
  return Json{{"deficient", r.deficient},
              {"total", r.total},
              {"fraction", ToJson(r.fraction)},
              {"value", r.value}};
}

Json ToJson(const ScanReport& r, const CoefficientMap& cm) {
  Json missing = Json::array();
  const std::uint32_t q = cm.field().q();
  for (std::uint64_t idx : r.missing) {
    Vec v = PointFromIndex(idx, q, cm.total());
    missing.push_back(TargetFromVector(cm, v).CanonicalText());
  }
  return Json{{"targets", r.targets},
              {"missing_count", r.missing.size()},
              {"onto", r.missing.empty()},
              {"missing", missing}};
}

Json ToJson(const FiberReport& r) {
  Json wit = Json::array();
  for (const auto& w : r.witnesses) wit.push_back(ToJson(w));
  Json j{{"target", r.target},
         {"mode", r.strategy == FiberStrategy::kExhaustive ? "exhaustive" : "random"},
         {"expected_dim", r.expected_dim},
         {"heuristic", r.heuristic}};
  if (r.strategy == FiberStrategy::kExhaustive) {
    j["count_k"] = r.count_k;
  } else {
    j["samples"] = r.samples;
    j["hits"] = r.hits;
    j["rate"] = r.rate;
    j["seed"] = r.seed;
  }
  j["witnesses"] = wit;
  return j;
}

Json ToJson(const FiberDimensionReport& r) {
  Json counts = Json::array();
  for (auto c : r.counts) counts.push_back(c);
  return Json{{"counts", counts},
              {"log_counts", r.log_counts},
              {"slope", r.slope},
              {"expected_dim", r.expected},
              {"flag", r.flag}};
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::uint64_t VarietyCacheKey(const PolyCollection& spec) {
  return Fnv1a(spec.field_ptr()->spec().ToString() + "|" + std::to_string(spec.nvars()) + "|" +
               spec.CanonicalText());
}

std::string VarietyCachePath(const std::string& dir, const PolyCollection& spec) {
  std::ostringstream name;
  name << std::hex << VarietyCacheKey(spec);
  return (std::filesystem::path(dir) / ("variety-" + name.str() + ".bin")).string();
}

void SaveVarietyCache(const std::string& path, const VarietyTable& table) {
  const auto& spec = table.field().spec();
  {
    auto out = OpenOut(path, std::ios::binary | std::ios::trunc);
    out.write(kVarietyMagic.data(), kVarietyMagic.size());
    PutU32(out, spec.p);
    PutU32(out, spec.l);
    PutU64(out, VarietyCacheKey(table.spec()));
    PutU64(out, table.size());
    PutU32(out, static_cast<std::uint32_t>(table.nvars()));
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (Elem e : table.point(i)) PutU16(out, e.v);
    }
    Require(static_cast<bool>(out), ErrorCode::kIoError, "write failed for " + path);
  }
  Json meta{{"field", spec.ToString()},
            {"equations", table.spec().CanonicalText()},
            {"nvars", table.nvars()},
            {"count", table.size()},
            {"key", VarietyCacheKey(table.spec())}};
  auto out = OpenOut(path + ".json", std::ios::trunc);
  out << Dump(meta);
}

std::optional<VarietyTable> LoadVarietyCache(const std::string& path,
                                             const PolyCollection& spec) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  ExpectMagic(in, kVarietyMagic, path);
  const auto& fs = spec.field_ptr()->spec();
  std::uint32_t p = static_cast<std::uint32_t>(GetLE(in, 4, path));
  std::uint32_t l = static_cast<std::uint32_t>(GetLE(in, 4, path));
  std::uint64_t key = GetLE(in, 8, path);
  Require(p == fs.p && l == fs.l && key == VarietyCacheKey(spec), ErrorCode::kIoError,
          "cache " + path + " belongs to a different variety");
  std::uint64_t count = GetLE(in, 8, path);
  std::size_t nvars = GetLE(in, 4, path);
  Require(nvars == spec.nvars(), ErrorCode::kIoError, "cache " + path + " has wrong arity");
  const std::uint32_t q = fs.q();
  std::vector<std::uint64_t> indices(count);
  Vec pt(nvars);
  for (auto& idx : indices) {
    for (auto& e : pt) {
      e = Elem(static_cast<std::uint32_t>(GetLE(in, 2, path)));
      Require(e.v < q, ErrorCode::kIoError, "element out of range in " + path);
    }
    idx = PointIndex(pt, q);
  }
  return VarietyTable::FromIndices(spec, std::move(indices));
}

VarietyPtr CachedVariety(const std::string& dir, const PolyCollection& spec,
                         const Budget& budget, Exec exec) {
  const std::string path = VarietyCachePath(dir, spec);
  if (auto t = LoadVarietyCache(path, spec)) {
    return std::make_shared<const VarietyTable>(std::move(*t));
  }
  auto t = VarietyTable::Enumerate(spec, budget, exec);
  SaveVarietyCache(path, t);
  return std::make_shared<const VarietyTable>(std::move(t));
}

FnOnX ReadFnCsv(const std::string& path, const VarietyPtr& host) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorCode::kIoError, "cannot read " + path);
  const Field& f = host->field();
  const std::size_t n = host->nvars();
  Vec values(host->size());
  std::vector<std::uint8_t> seen(host->size(), 0);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (std::isalpha(static_cast<unsigned char>(line[first]))) continue;
    std::vector<long long> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        cells.push_back(std::stoll(cell));
      } catch (const std::exception&) {
        Fail(ErrorCode::kIoError, path + ":" + std::to_string(lineno) + ": bad number '" +
                                      cell + "'");
      }
    }
    Require(cells.size() == n + 1, ErrorCode::kIoError,
            path + ":" + std::to_string(lineno) + ": expected " + std::to_string(n + 1) +
                " columns");
    auto elem = [&](long long v) {
      if (f.l() == 1) return f.FromInt(v);
      Require(v >= 0 && v < static_cast<long long>(f.q()), ErrorCode::kIoError,
              path + ":" + std::to_string(lineno) + ": element index out of range");
      return Elem(static_cast<std::uint32_t>(v));
    };
    Vec pt(n);
    for (std::size_t i = 0; i < n; ++i) pt[i] = elem(cells[i]);
    auto ord = host->Find(pt);
    Require(ord >= 0, ErrorCode::kIoError,
            path + ":" + std::to_string(lineno) + ": point is not on the variety");
    Require(!seen[ord], ErrorCode::kIoError,
            path + ":" + std::to_string(lineno) + ": duplicate point");
    seen[ord] = 1;
    values[ord] = elem(cells[n]);
  }
  auto missing = std::count(seen.begin(), seen.end(), 0);
  Require(missing == 0, ErrorCode::kIoError,
          path + ": " + std::to_string(missing) + " points of the variety have no value");
  return FnOnX(host, std::move(values));
}

void WriteFnCsv(const std::string& path, const FnOnX& f) {
  auto out = OpenOut(path, std::ios::trunc);
  const std::size_t n = f.host->nvars();
  for (std::size_t i = 0; i < n; ++i) out << "x" << (i + 1) << ",";
  out << "value\n";
  for (std::size_t k = 0; k < f.host->size(); ++k) {
    for (Elem e : f.host->point(k)) out << e.v << ",";
    out << f.values[k].v << "\n";
  }
}

void WriteFnBinary(const std::string& path, const FnOnX& f) {
  auto out = OpenOut(path, std::ios::binary | std::ios::trunc);
  out.write(kFnMagic.data(), kFnMagic.size());
  PutU64(out, VarietyCacheKey(f.host->spec()));
  PutU64(out, f.values.size());
  for (Elem e : f.values) PutU16(out, e.v);
  Require(static_cast<bool>(out), ErrorCode::kIoError, "write failed for " + path);
}

FnOnX ReadFnBinary(const std::string& path, const VarietyPtr& host) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), ErrorCode::kIoError, "cannot read " + path);
  ExpectMagic(in, kFnMagic, path);
  Require(GetLE(in, 8, path) == VarietyCacheKey(host->spec()), ErrorCode::kIoError,
          path + " was written for a different variety");
  Require(GetLE(in, 8, path) == host->size(), ErrorCode::kIoError,
          path + " has the wrong number of values");
  Vec values(host->size());
  for (auto& e : values) {
    e = Elem(static_cast<std::uint32_t>(GetLE(in, 2, path)));
    Require(e.v < host->field().q(), ErrorCode::kIoError, "value out of range in " + path);
  }
  return FnOnX(host, std::move(values));
}

void AppendRecord(const std::string& path, const Json& record) {
  auto out = OpenOut(path, std::ios::app);
  out << record.dump() << "\n";
}

}  // namespace hirank
