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

#include <cstdint>
#include <exception>
#include <random>

#include "netauction/allocation.hpp"
#include "netauction/bid_engine.hpp"
#include "netauction/mechanisms.hpp"
#include "netauction/random_market.hpp"

namespace netauction {
namespace {

Scenario fig1() {
  Scenario::Builder b("s");
  b.unit_demand(3).seller_neighbors({"A", "B"});
  b.agent("A", 4, {}).agent("B", 1, {"F", "C"}).agent("C", 4, {"D"});
  b.agent("D", 7, {"H"}).agent("F", 6, {}).agent("H", 5, {});
  return b.build();
}

Scenario random_of(Mode mode, std::size_t agents, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomMarketConfig config;
  config.mode = mode;
  config.min_agents = agents;
  config.max_agents = agents;
  config.max_units = 5;
  config.max_items = 12;
  config.max_bundle = 4;
  config.edge_probability = 3.0 / static_cast<double>(agents);
  config.seller_edge_probability = 0.1;
  return random_market(rng, config);
}

void BM_RunFig1(benchmark::State& state, const char* id) {
  const Scenario s = fig1();
  const ReportProfile r = ReportProfile::truthful(s);
  const auto m = make_mechanism(id);
  for (auto _ : state) benchmark::DoNotOptimize(m->run(s, r));
}
BENCHMARK_CAPTURE(BM_RunFig1, dna_mu, "dna-mu");
BENCHMARK_CAPTURE(BM_RunFig1, dna_mu_r, "dna-mu-r");
BENCHMARK_CAPTURE(BM_RunFig1, vcg, "vcg");
BENCHMARK_CAPTURE(BM_RunFig1, vcg_rm, "vcg-rm");

void BM_RunRandom(benchmark::State& state, const char* id) {
  const auto m = make_mechanism(id);
  const Scenario s = random_of(m->mode(), static_cast<std::size_t>(state.range(0)), 3);
  const ReportProfile r = ReportProfile::truthful(s);
  for (auto _ : state) benchmark::DoNotOptimize(m->run(s, r));
}
BENCHMARK_CAPTURE(BM_RunRandom, dna_mu_r, "dna-mu-r")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK_CAPTURE(BM_RunRandom, vcg_rm, "vcg-rm")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK_CAPTURE(BM_RunRandom, net_sqrt_k_apm, "net-sqrt-k-apm")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK_CAPTURE(BM_RunRandom, nsa, "nsa")->RangeMultiplier(2)->Range(8, 64);

void BM_CriticalBidExact(benchmark::State& state) {
  const Scenario s = random_of(Mode::unit_demand, static_cast<std::size_t>(state.range(0)), 5);
  const ReportProfile r = ReportProfile::truthful(s);
  const auto rule = make_dna_mu_r_allocation();
  const AgentId a = s.seller_neighbors().front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(critical_bid_exact(*rule, s, r, a, r.invites[a.value]));
  }
}
BENCHMARK(BM_CriticalBidExact)->RangeMultiplier(2)->Range(8, 64);

void BM_CriticalBidBisect(benchmark::State& state) {
  const Scenario s = random_of(Mode::unit_demand, static_cast<std::size_t>(state.range(0)), 5);
  const ReportProfile r = ReportProfile::truthful(s);
  const auto rule = make_dna_mu_r_allocation();
  const AgentId a = s.seller_neighbors().front();
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(
          critical_bid_bisect(*rule, s, r, a, r.invites[a.value], 1000, Rational(1, 1024)));
    } catch (const std::exception&) {
    }
  }
}
BENCHMARK(BM_CriticalBidBisect)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
}  // namespace netauction
