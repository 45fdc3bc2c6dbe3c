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

// Serial reference vs OpenMP kernels. Arg 0 selects the serial path.

#include <benchmark/benchmark.h>

#include "hirank/fibers.hpp"
#include "hirank/rank.hpp"
#include "hirank/variety.hpp"
#include "hirank/weakpoly.hpp"
#include "hirank/xn.hpp"

namespace hirank {
namespace {

Exec ExecOf(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel;
}

void BM_CharacterSum(benchmark::State& state) {
  auto f = Field::Make(7);
  Poly p = ParsePoly("x1*x2*x3 + x4*x5*x6 + x1^2*x6 + 3*x2", f);
  for (auto _ : state) benchmark::DoNotOptimize(CharacterSum(p, {}, ExecOf(state)));
}
BENCHMARK(BM_CharacterSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Gowers(benchmark::State& state) {
  auto f = Field::Make(5);
  Poly p = ParsePoly("x1*x2*x3 + x2^2*x3", f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GowersNorm(p, 2, {}, {}, ExecOf(state)));
  }
}
BENCHMARK(BM_Gowers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  auto f = Field::Make(7);
  auto c = ParseCollection("x1*x2 + x3*x4 + x5*x6", f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(VarietyTable::Enumerate(c, {}, ExecOf(state)));
  }
}
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FiberHistogram(benchmark::State& state) {
  auto f = Field::Make(5);
  auto cm = MakeCoefficientMap(ParseCollection("x1*x2", f), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(FiberHistogram(cm, CountRoute::kDirect, {}, ExecOf(state)));
  }
}
BENCHMARK(BM_FiberHistogram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ThetaDecompose(benchmark::State& state) {
  auto f = Field::Make(7);
  XnModel model(f, XnSpec{2, 2}, 6);
  Vec values(model.table()->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = Elem((i * 5 + 3) % 7);
  FnOnX fn(model.table(), values);
  for (auto _ : state) benchmark::DoNotOptimize(ThetaDecompose(model, fn, ExecOf(state)));
}
BENCHMARK(BM_ThetaDecompose)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hirank

BENCHMARK_MAIN();
