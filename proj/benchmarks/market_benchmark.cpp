// Copyright 2026 The Authors.
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

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "netauction/bid_engine.hpp"
#include "netauction/market.hpp"
#include "netauction/number.hpp"
#include "netauction/random_market.hpp"

namespace netauction {
namespace {

Scenario sized_market(std::size_t agents, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomMarketConfig config;
  config.min_agents = agents;
  config.max_agents = agents;
  config.edge_probability = 3.0 / static_cast<double>(agents);
  config.seller_edge_probability = 0.05;
  return random_market(rng, config);
}

void BM_EffectiveMarket(benchmark::State& state) {
  const Scenario s = sized_market(static_cast<std::size_t>(state.range(0)), 7);
  const ReportProfile r = ReportProfile::truthful(s);
  for (auto _ : state) benchmark::DoNotOptimize(build_effective_market(s, r));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EffectiveMarket)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_KthHighest(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::vector<Rational> bids(static_cast<std::size_t>(state.range(0)));
  for (auto& b : bids) b = Rational(static_cast<long>(rng() % 1000), 1 + static_cast<long>(rng() % 7));
  for (auto _ : state) benchmark::DoNotOptimize(kth_highest(std::span<const Rational>(bids), 3));
}
BENCHMARK(BM_KthHighest)->Range(8, 4096);

void BM_RealCompare(benchmark::State& state) {
  const Real a = Real(3) * Real::sqrt_ratio(2, 1) + Real::sqrt_ratio(3, 1);
  const Real b = Real(Rational(1414, 233)) + Real::sqrt_ratio(5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a < b);
}
BENCHMARK(BM_RealCompare);

}  // namespace
}  // namespace netauction
