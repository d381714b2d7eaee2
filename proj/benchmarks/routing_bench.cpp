// Copyright 2026 The roadchange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>

#include <benchmark/benchmark.h>

#include "roadchange/connectivity.hpp"
#include "roadchange/routing.hpp"

namespace roadchange {
namespace {

WeightedGraph grid(int n) {
  RoadGraph g;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g.add_node({c * 40.0, r * 40.0});
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) g.add_edge(r * n + c, r * n + c + 1);
      if (r + 1 < n) g.add_edge(r * n + c, (r + 1) * n + c);
    }
  }
  return WeightedGraph::from_lengths(std::move(g));
}

void BM_ShortestPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightedGraph g = grid(n);
  const Router router(g);
  for (auto _ : state) benchmark::DoNotOptimize(router.shortest_path(0, n * n - 1));
}
BENCHMARK(BM_ShortestPath)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_ConnectivityMetrics(benchmark::State& state) {
  const WeightedGraph truth = grid(32);
  WeightedGraph predicted = truth;
  for (std::size_t e = 0; e < predicted.weights.size(); e += 7) predicted.weights[e] *= 3.0;
  const auto pairs = pair_positions(
      truth.graph, sample_pairs(truth.graph, static_cast<std::size_t>(state.range(0)), 1, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(connectivity_metrics(predicted, truth, pairs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConnectivityMetrics)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace roadchange
