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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hirank/extend.hpp"
#include "hirank/io.hpp"
#include "hirank/rank.hpp"
#include "hirank/session.hpp"

namespace hirank {
namespace {

std::filesystem::path TempDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hirank_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void WriteText(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

TEST(SessionTest, Fnv1aReferenceValues) {
  EXPECT_EQ(Fnv1a(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(Fnv1a("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(Fnv1a("foobar"), 0x85944171f73967e8ull);
}

TEST(SessionTest, DefaultsAreAdmissible) {
  SessionConfig c;
  EXPECT_EQ(c.field, "7");
  EXPECT_EQ(c.d, 2);
  EXPECT_EQ(c.a, 2);
  EXPECT_EQ(c.m, 6u);
  EXPECT_NO_THROW(c.CheckAdmissible());
}

TEST(SessionTest, ParseConfig) {
  auto c = SessionConfig::Parse(
      "# comment\n"
      "field = 3^2   # inline\n"
      "\n"
      "a=1\n"
      "m = 8\n"
      "seed=42\n"
      "max_search = 99\n");
  EXPECT_EQ(c.field_spec(), ParseFieldSpec("3^2"));
  EXPECT_EQ(c.a, 1);
  EXPECT_EQ(c.m, 8u);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.budget.max_search, 99u);
  EXPECT_NO_THROW(c.CheckAdmissible());
  EXPECT_THROW(SessionConfig::Parse("colour=blue\n"), Error);
  EXPECT_THROW(SessionConfig::Parse("seed=-1\n"), Error);
  EXPECT_THROW(SessionConfig::Parse("just words\n"), Error);
}

TEST(SessionTest, AdmissibilityFailures) {
  SessionConfig c;
  c.field = "5";
  try {
    c.CheckAdmissible();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
  }
  c.field = "7";
  c.a = 3;
  EXPECT_THROW(c.CheckAdmissible(), Error);
}

TEST(SessionTest, CanonicalFormAndHash) {
  SessionConfig a = SessionConfig::Parse("field=7\nseed=3\n");
  SessionConfig b = SessionConfig::Parse("seed = 3\nfield = 7\ncache_dir = elsewhere\n");
  EXPECT_EQ(a.Canonical(), b.Canonical());
  EXPECT_EQ(a.Hash(), b.Hash());
  b.Set("samples", "10");
  EXPECT_NE(a.Hash(), b.Hash());
  EXPECT_NE(a.Canonical().find("field=7\n"), std::string::npos);
}

TEST(SessionTest, LoadAndEnvironment) {
  auto dir = TempDir("session");
  WriteText(dir / "run.cfg", "field=11\ncache_dir=/nowhere\n");
  auto c = SessionConfig::Load((dir / "run.cfg").string());
  EXPECT_EQ(c.field, "11");
  setenv("HIRANK_CACHE_DIR", "/from/env", 1);
  c.ApplyEnvironment();
  EXPECT_EQ(c.cache_dir, "/from/env");
  unsetenv("HIRANK_CACHE_DIR");
  EXPECT_THROW(SessionConfig::Load((dir / "absent.cfg").string()), Error);
  std::filesystem::remove_all(dir);
}

class FnIoTest : public ::testing::Test {
 protected:
  FieldPtr f_ = Field::Make(7);
  VarietyPtr host_ = std::make_shared<const VarietyTable>(
      VarietyTable::Enumerate(ParseCollection("x1*x2*(x1-x2)", f_)));
  std::filesystem::path dir_ = TempDir("fnio");
  void TearDown() override { std::filesystem::remove_all(dir_); }
};

TEST_F(FnIoTest, ReadsExampleFile) {
  FnOnX fn = ReadFnCsv(std::string(HIRANK_EXAMPLES_DIR) + "/example1.fn", host_);
  for (std::size_t i = 0; i < host_->size(); ++i) {
    auto pt = host_->point(i);
    Elem want = (pt[0].v && pt[1].v) ? pt[0] : Elem();
    EXPECT_EQ(fn.values[i], want);
  }
  EXPECT_EQ(ExtendBySolver(fn, 1).status, ExtensionStatus::kNoExtension);
}

TEST_F(FnIoTest, CsvAndBinaryRoundTrip) {
  FnOnX fn = FnOnX::FromPoly(host_, ParsePoly("x1^2 + 3*x2 + 1", f_));
  std::string csv = (dir_ / "f.csv").string();
  std::string bin = (dir_ / "f.bin").string();
  WriteFnCsv(csv, fn);
  WriteFnBinary(bin, fn);
  EXPECT_EQ(ReadFnCsv(csv, host_), fn);
  EXPECT_EQ(ReadFnBinary(bin, host_), fn);
  auto other = std::make_shared<const VarietyTable>(
      VarietyTable::Enumerate(ParseCollection("x1*x2", f_)));
  EXPECT_THROW(ReadFnBinary(bin, other), Error);
}

TEST_F(FnIoTest, CsvErrors) {
  auto expect_io = [&](const std::string& text) {
    WriteText(dir_ / "bad.csv", text);
    try {
      ReadFnCsv((dir_ / "bad.csv").string(), host_);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kIoError);
    }
  };
  expect_io("0,0,1\n");             // missing points
  expect_io("1,2,3\n");             // not on X
  expect_io("0,0,1\n0,0,1\n");      // duplicate
  expect_io("0,0\n");               // column count
  expect_io("0,zero,1\n");          // bad number
  EXPECT_THROW(ReadFnCsv((dir_ / "absent.csv").string(), host_), Error);
}

TEST_F(FnIoTest, NegativeAndLargeValuesReduce) {
  std::ostringstream text;
  text << "x1,x2,value\n";
  for (std::size_t i = 0; i < host_->size(); ++i) {
    auto pt = host_->point(i);
    text << static_cast<int>(pt[0].v) - 7 << "," << pt[1].v + 14 << ",-1\n";
  }
  WriteText(dir_ / "shifted.csv", text.str());
  FnOnX fn = ReadFnCsv((dir_ / "shifted.csv").string(), host_);
  for (Elem e : fn.values) EXPECT_EQ(e.v, 6u);
}

TEST_F(FnIoTest, AppendRecordWritesJsonLines) {
  std::string path = (dir_ / "log.jsonl").string();
  AppendRecord(path, Json{{"command", "a"}});
  AppendRecord(path, Json{{"command", "b"}});
  std::ifstream in(path);
  std::string line;
  std::vector<std::string> cmds;
  while (std::getline(in, line)) cmds.push_back(Json::parse(line)["command"]);
  EXPECT_EQ(cmds, (std::vector<std::string>{"a", "b"}));
}

TEST(JsonTest, Renderings) {
  auto f = Field::Make(7);
  EXPECT_EQ(ToJson(Rational(2, 6)), Json("1/3"));
  EXPECT_EQ(ToJson(RankValue::Exact(2)), Json(2));
  EXPECT_EQ(ToJson(RankValue::Infinite()).get<std::string>(), RankValue::Infinite().ToString());
  Json b = ToJson(Bias(ParsePoly("x1*x2", f)));
  EXPECT_EQ(b["bias_squared"], Json("1/49"));
  EXPECT_EQ(Dump(Json{{"k", 1}}), "{\n  \"k\": 1\n}\n");
}

}  // namespace
}  // namespace hirank
