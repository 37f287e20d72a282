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
#include <random>

#include "netauction/auditor.hpp"
#include "netauction/mechanisms.hpp"
#include "netauction/random_market.hpp"

namespace netauction {
namespace {

Scenario seven_agents(Mode mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomMarketConfig config;
  config.mode = mode;
  config.min_agents = 7;
  config.max_agents = 7;
  return random_market(rng, config);
}

void BM_AuditSp(benchmark::State& state, const char* id) {
  const auto m = make_mechanism(id);
  const Scenario s = seven_agents(m->mode(), 17);
  for (auto _ : state) benchmark::DoNotOptimize(audit_sp(*m, s));
}
BENCHMARK_CAPTURE(BM_AuditSp, dna_mu_r, "dna-mu-r")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AuditSp, vcg_rm, "vcg-rm")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AuditSp, nsa, "nsa")->Unit(benchmark::kMillisecond);

void BM_AuditPaymentAxioms(benchmark::State& state) {
  const auto m = make_mechanism("dna-mu-r");
  const Scenario s = seven_agents(Mode::unit_demand, 19);
  for (auto _ : state) benchmark::DoNotOptimize(audit_payment_axioms(*m, s));
}
BENCHMARK(BM_AuditPaymentAxioms)->Unit(benchmark::kMillisecond);

void BM_AuditIpMon(benchmark::State& state) {
  const auto rule = make_nsa_allocation();
  const Scenario s = seven_agents(Mode::single_minded, 23);
  for (auto _ : state) benchmark::DoNotOptimize(audit_ip_mon(*rule, s));
}
BENCHMARK(BM_AuditIpMon)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace netauction
