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

// Run configuration shared by the command line tool and the suite.

#ifndef HIRANK_SESSION_HPP_
#define HIRANK_SESSION_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "hirank/error.hpp"
#include "hirank/field.hpp"

namespace hirank {

std::uint64_t Fnv1a(std::string_view data);

struct SessionConfig {
  std::string field = "7";
  int d = 2;
  int a = 2;
  std::uint32_t m = 6;
  Budget budget;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  int workers = 0;  // 0 keeps the OpenMP default
  std::string cache_dir = ".hirank-cache";

  // key=value lines; '#' starts a comment. Unknown keys are errors.
  static SessionConfig Parse(const std::string& text);
  static SessionConfig Load(const std::string& path);
  void Set(const std::string& key, const std::string& value);
  // HIRANK_CACHE_DIR overrides cache_dir.
  void ApplyEnvironment();
  // Throws kNotAdmissible unless q > a*d, m | q-1, m > 2a and p > d.
  void CheckAdmissible() const;
  void ApplyWorkers() const;
  FieldSpec field_spec() const { return ParseFieldSpec(field); }
  std::string Canonical() const;
  std::uint64_t Hash() const { return Fnv1a(Canonical()); }
};

}  // namespace hirank

#endif  // HIRANK_SESSION_HPP_
