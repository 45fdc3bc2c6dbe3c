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

// OpenMP loop skeletons shared by the data-parallel kernels. Each takes a
// factory so that every thread owns its scratch state.

#ifndef HIRANK_KERNELS_HPP_
#define HIRANK_KERNELS_HPP_

#include <omp.h>

#include <cstdint>
#include <vector>

#include "hirank/cyclo.hpp"

namespace hirank {

// Sums e_p(fn(i)) for i < count. make_fn() must return a callable
// i -> trace value in [0, p).
template <class MakeFn>
CycloSum ParallelTraceSum(std::uint32_t p, std::uint64_t count, MakeFn make_fn) {
  std::vector<std::uint64_t> total(p, 0);
#pragma omp parallel
  {
    auto fn = make_fn();
    std::vector<std::uint64_t> local(p, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      ++local[fn(static_cast<std::uint64_t>(i))];
    }
#pragma omp critical(hirank_trace_merge)
    for (std::uint32_t k = 0; k < p; ++k) total[k] += local[k];
  }
  CycloSum s(p);
  for (std::uint32_t k = 0; k < p; ++k) s.Add(k, total[k]);
  return s;
}

// Histogram of fn(i) over bins [0, bins).
template <class MakeFn>
std::vector<std::uint64_t> ParallelHistogram(std::uint64_t bins,
                                             std::uint64_t count, MakeFn make_fn) {
  std::vector<std::uint64_t> total(bins, 0);
#pragma omp parallel
  {
    auto fn = make_fn();
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      ++local[fn(static_cast<std::uint64_t>(i))];
    }
#pragma omp critical(hirank_hist_merge)
    for (std::uint64_t k = 0; k < bins; ++k) total[k] += local[k];
  }
  return total;
}

// Indices i < count with pred(i), in increasing order.
template <class MakePred>
std::vector<std::uint64_t> ParallelFilter(std::uint64_t count, MakePred make_pred) {
  int threads = omp_get_max_threads();
  std::vector<std::vector<std::uint64_t>> parts(threads);
#pragma omp parallel
  {
    auto pred = make_pred();
    auto& mine = parts[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      if (pred(static_cast<std::uint64_t>(i))) mine.push_back(static_cast<std::uint64_t>(i));
    }
  }
  // Static schedule hands out contiguous ascending chunks by thread id.
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace hirank

#endif  // HIRANK_KERNELS_HPP_
