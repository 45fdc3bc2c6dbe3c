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

// The acceptance battery: one entry per criterion, each a fixed instance
// checked against exact values and frozen oracle results.

#ifndef HIRANK_SUITE_HPP_
#define HIRANK_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hirank/error.hpp"
#include "hirank/io.hpp"

namespace hirank {

struct SuiteOptions {
  std::string golden_dir;
  std::vector<int> only;  // empty runs every criterion
  std::uint64_t seed = 1;
  std::uint64_t samples = 20000;
  Budget budget;
  Exec exec = Exec::kParallel;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  Json data;
};

inline constexpr int kCriterionCount = 9;

CriterionResult RunCriterion(int id, const SuiteOptions& opts);
std::vector<CriterionResult> RunSuite(const SuiteOptions& opts);

Json ToJson(const CriterionResult& r);
// One "PASS|FAIL <id> <name> (<seconds>s): <detail>" line per criterion.
std::string FormatTable(const std::vector<CriterionResult>& results);

}  // namespace hirank

#endif  // HIRANK_SUITE_HPP_
