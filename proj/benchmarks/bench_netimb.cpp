// Copyright 2026 the netimb authors
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

#include <benchmark/benchmark.h>

#include "netimb/netimb.hpp"

namespace {

using netimb::QoSProfile;

void BM_AllPairsHistogram(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const netimb::Graph g = netimb::erdos_renyi(n, 8.0 / static_cast<double>(n), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netimb::all_pairs_histogram(g, 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairsHistogram)->Range(64, 2048)->Complexity();

void BM_AllPairsHistogramParallel(benchmark::State& state) {
  const netimb::Graph g = netimb::erdos_renyi(2048, 8.0 / 2048.0, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netimb::all_pairs_histogram(
        g, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_AllPairsHistogramParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_ImbalanceFromHistogram(benchmark::State& state) {
  const netimb::Graph g =
      netimb::watts_strogatz(static_cast<std::size_t>(state.range(0)), 4, 0.1, 3);
  const netimb::HopHistogram hist = netimb::all_pairs_histogram(g);
  const QoSProfile profile(1.0, 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netimb::imbalance_from_histogram(hist, profile));
  }
}
BENCHMARK(BM_ImbalanceFromHistogram)->Range(64, 4096);

void BM_ImbalanceGradient(benchmark::State& state) {
  const netimb::Graph g = netimb::watts_strogatz(1024, 4, 0.1, 3);
  const netimb::HopHistogram hist = netimb::all_pairs_histogram(g);
  const QoSProfile profile(1.0, 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netimb::imbalance_gradient(hist, profile));
  }
}
BENCHMARK(BM_ImbalanceGradient);

void BM_GenerateErdosRenyi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  netimb::Seed seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        netimb::erdos_renyi(n, 8.0 / static_cast<double>(n), ++seed));
  }
}
BENCHMARK(BM_GenerateErdosRenyi)->Range(64, 2048);

void BM_GenerateBarabasiAlbert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  netimb::Seed seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(netimb::barabasi_albert(n, 3, ++seed));
  }
}
BENCHMARK(BM_GenerateBarabasiAlbert)->Range(64, 2048);

void BM_GenerateWattsStrogatz(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  netimb::Seed seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(netimb::watts_strogatz(n, 4, 0.1, ++seed));
  }
}
BENCHMARK(BM_GenerateWattsStrogatz)->Range(64, 2048);

void BM_EvaluateCandidates(benchmark::State& state) {
  const netimb::Graph g = netimb::erdos_renyi(
      static_cast<std::size_t>(state.range(0)), 0.25, 5);
  const QoSProfile profile(2.0, 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netimb::evaluate_candidates(g, profile));
  }
}
BENCHMARK(BM_EvaluateCandidates)->Arg(16)->Arg(24)->Arg(32);

void BM_AlgebraicConnectivity(benchmark::State& state) {
  const netimb::Graph g =
      netimb::watts_strogatz(static_cast<std::size_t>(state.range(0)), 4, 0.1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netimb::algebraic_connectivity(g));
  }
}
BENCHMARK(BM_AlgebraicConnectivity)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
