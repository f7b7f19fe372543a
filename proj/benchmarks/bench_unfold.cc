// Copyright 2026 The foldtree Authors.
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

#include <benchmark/benchmark.h>

#include "foldtree/unfold.h"

namespace foldtree {
namespace {

void BM_DistinctUnfoldings(benchmark::State& state) {
  Frustum f;
  f.k = static_cast<int>(state.range(0));
  int distinct = 0;
  for (auto _ : state) distinct = distinct_unfoldings(f).distinct;
  state.counters["distinct"] = distinct;
}
BENCHMARK(BM_DistinctUnfoldings)->DenseRange(3, 10)->Unit(benchmark::kMillisecond);

void BM_Develop(benchmark::State& state) {
  Frustum f;
  const CutTree t = volcano_cut_tree(f, "0101101");
  for (auto _ : state) benchmark::DoNotOptimize(develop(f, t));
}
BENCHMARK(BM_Develop);

}  // namespace
}  // namespace foldtree
