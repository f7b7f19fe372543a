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

#include "foldtree/edge_to_edge.h"
#include "foldtree/enumerate.h"
#include "foldtree/io.h"

namespace foldtree {
namespace {

void BM_EnumerateShape(benchmark::State& state, const std::string& shape) {
  const PolygonSpec p = named_shape(shape);
  size_t count = 0;
  for (auto _ : state) {
    EnumerationResult r = enumerate_gluings(p);
    count = r.trees.size();
    benchmark::DoNotOptimize(r);
  }
  state.counters["gluings"] = static_cast<double>(count);
}
BENCHMARK_CAPTURE(BM_EnumerateShape, triangle, std::string("triangle"));
BENCHMARK_CAPTURE(BM_EnumerateShape, square, std::string("square"));
BENCHMARK_CAPTURE(BM_EnumerateShape, latin_cross, std::string("latin-cross"))
    ->Unit(benchmark::kMillisecond);

// Growth of the count for regular polygons.
void BM_EnumerateRegular(benchmark::State& state) {
  const PolygonSpec p = regular_ngon(static_cast<int>(state.range(0)));
  size_t count = 0;
  for (auto _ : state) count = enumerate_gluings(p).trees.size();
  state.counters["gluings"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateRegular)->DenseRange(3, 10)->Unit(benchmark::kMillisecond);

void BM_EdgeToEdgeCount(benchmark::State& state) {
  const PolygonSpec p = regular_ngon(static_cast<int>(state.range(0)));
  std::uint64_t count = 0;
  for (auto _ : state) count = count_edge_to_edge(p);
  state.counters["gluings"] = static_cast<double>(count);
}
BENCHMARK(BM_EdgeToEdgeCount)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
}  // namespace foldtree
