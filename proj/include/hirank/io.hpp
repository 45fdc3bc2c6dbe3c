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

// JSON views of the reports, the point-table cache, function files and the
// experiment log.

#ifndef HIRANK_IO_HPP_
#define HIRANK_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "hirank/extend.hpp"
#include "hirank/fibers.hpp"
#include "hirank/flats.hpp"
#include "hirank/rank.hpp"
#include "hirank/variety.hpp"
#include "hirank/weakpoly.hpp"

namespace hirank {

using Json = nlohmann::ordered_json;

Json ToJson(const Vec& v);
Json ToJson(const CycloInt& c);
Json ToJson(const Rational& r);
Json ToJson(const AffineFlat& flat);
Json ToJson(const AffineMap& map);
Json ToJson(const RankValue& r);
Json ToJson(const BiasResult& b);
Json ToJson(const GowersResult& g, std::uint32_t q);
Json ToJson(const SingularBoundReport& s);
Json ToJson(const WeakTestResult& w);
Json ToJson(const QuotientReport& r);
Json ToJson(const ExtensionResult& r);
Json ToJson(const DeficiencyReport& r);
Json ToJson(const ScanReport& r, const CoefficientMap& cm);
Json ToJson(const FiberReport& r);
Json ToJson(const FiberDimensionReport& r);

// Canonical serialization: two-space indent, trailing newline.
std::string Dump(const Json& j);

// Point-table cache. The key hashes the equations' canonical text and the
// field spec. The binary file holds a header (magic, field spec, key, count,
// nvars) and one little-endian uint16 element index per coordinate; a JSON
// sidecar carries the same metadata in readable form.
std::uint64_t VarietyCacheKey(const PolyCollection& spec);
std::string VarietyCachePath(const std::string& dir, const PolyCollection& spec);
void SaveVarietyCache(const std::string& path, const VarietyTable& table);
// Returns nullopt when the file is missing; throws kIoError on a corrupt or
// mismatched file.
std::optional<VarietyTable> LoadVarietyCache(const std::string& path,
                                             const PolyCollection& spec);
// Loads from dir when cached, otherwise enumerates and stores.
VarietyPtr CachedVariety(const std::string& dir, const PolyCollection& spec,
                         const Budget& budget = {}, Exec exec = Exec::kParallel);

// Function files. CSV rows are "c1,...,cN,value" with element indices; an
// optional header row starting with a letter is skipped. Every point of the
// host must appear exactly once.
FnOnX ReadFnCsv(const std::string& path, const VarietyPtr& host);
void WriteFnCsv(const std::string& path, const FnOnX& f);
// Binary form: magic, host cache key, count, uint16 values in host order.
void WriteFnBinary(const std::string& path, const FnOnX& f);
FnOnX ReadFnBinary(const std::string& path, const VarietyPtr& host);

// Appends one JSON line to an experiment log.
void AppendRecord(const std::string& path, const Json& record);

}  // namespace hirank

#endif  // HIRANK_IO_HPP_
