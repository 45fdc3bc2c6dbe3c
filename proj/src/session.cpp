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

#include "hirank/session.hpp"

#include <omp.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hirank/xn.hpp"

namespace hirank {

std::uint64_t Fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

std::string Trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t ToU64(const std::string& key, const std::string& v) {
  try {
    if (v.empty() || !std::isdigit(static_cast<unsigned char>(v[0]))) {
      throw std::invalid_argument(v);
    }
    std::size_t pos = 0;
    unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    Fail(ErrorCode::kInvalidArgument, "config key " + key + " needs an unsigned integer, got '" +
                                          v + "'");
  }
}

}  // namespace

void SessionConfig::Set(const std::string& key, const std::string& value) {
  if (key == "field") field = value;
  else if (key == "d") d = static_cast<int>(ToU64(key, value));
  else if (key == "a") a = static_cast<int>(ToU64(key, value));
  else if (key == "m") m = static_cast<std::uint32_t>(ToU64(key, value));
  else if (key == "max_enumeration") budget.max_enumeration = ToU64(key, value);
  else if (key == "max_gowers") budget.max_gowers = ToU64(key, value);
  else if (key == "max_search") budget.max_search = ToU64(key, value);
  else if (key == "max_matrix_entries") budget.max_matrix_entries = ToU64(key, value);
  else if (key == "samples") samples = ToU64(key, value);
  else if (key == "seed") seed = ToU64(key, value);
  else if (key == "workers") workers = static_cast<int>(ToU64(key, value));
  else if (key == "cache_dir") cache_dir = value;
  else Fail(ErrorCode::kInvalidArgument, "unknown config key '" + key + "'");
}

SessionConfig SessionConfig::Parse(const std::string& text) {
  SessionConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    Require(eq != std::string::npos, ErrorCode::kInvalidArgument,
            "config line " + std::to_string(lineno) + " is not key=value");
    c.Set(Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
  }
  return c;
}

SessionConfig SessionConfig::Load(const std::string& path) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorCode::kIoError, "cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

void SessionConfig::ApplyEnvironment() {
  if (const char* dir = std::getenv("HIRANK_CACHE_DIR"); dir && *dir) cache_dir = dir;
}

void SessionConfig::CheckAdmissible() const { RequireAdmissible(field_spec(), a, d, m); }

void SessionConfig::ApplyWorkers() const {
  if (workers > 0) omp_set_num_threads(workers);
}

std::string SessionConfig::Canonical() const {
  std::ostringstream o;
  o << "a=" << a << "\n"
    << "d=" << d << "\n"
    << "field=" << field_spec().ToString() << "\n"
    << "m=" << m << "\n"
    << "max_enumeration=" << budget.max_enumeration << "\n"
    << "max_gowers=" << budget.max_gowers << "\n"
    << "max_matrix_entries=" << budget.max_matrix_entries << "\n"
    << "max_search=" << budget.max_search << "\n"
    << "samples=" << samples << "\n"
    << "seed=" << seed << "\n";
  return o.str();
}

}  // namespace hirank
