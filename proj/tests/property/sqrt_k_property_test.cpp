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


#include <gtest/gtest.h>

#include <cstddef>
#include <random>

#include "netauction/allocation.hpp"
#include "netauction/random_market.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace netauction {
namespace {

RandomMarketConfig solvable() {
  RandomMarketConfig config;
  config.mode = Mode::single_minded;
  config.max_agents = 10;
  config.max_items = 8;
  config.max_bundle = 4;
  return config;
}

TEST(SqrtKProperty, GreedyReachesOptimumOverSqrtItems) {
  std::mt19937_64 withhold(93500);
  for (std::size_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng(93000 + i);
    const Scenario s = random_market(rng, solvable());
    for (const ReportProfile& r : {ReportProfile::truthful(s), oracle::random_withholding(s, withhold)}) {
      const auto v = property::sqrt_k_bound(s, r);
      EXPECT_FALSE(v.has_value()) << "market " << i << ": " << v.value_or("");
    }
  }
}

TEST(SqrtKProperty, GreedyWinnersAreDisjointAndMaximal) {
  const auto rule = make_greedy_sqrt_k_allocation();
  for (std::size_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng(94000 + i);
    const Scenario s = random_market(rng, solvable());
    const ReportProfile r = ReportProfile::truthful(s);
    const Allocation alloc = rule->allocate(s, r);
    Bundle used = 0;
    for (std::size_t a = 0; a < s.agent_count(); ++a) {
      if (!alloc.won[a]) continue;
      EXPECT_EQ(used & s.bundle(oracle::agent(a)), 0u) << "market " << i;
      used |= s.bundle(oracle::agent(a));
    }
    // A participant left out must clash with some winner.
    const auto present = oracle::reachable(s, r);
    for (std::size_t a = 0; a < s.agent_count(); ++a) {
      if (present[a] && !alloc.won[a]) {
        EXPECT_NE(used & s.bundle(oracle::agent(a)), 0u) << "market " << i;
      }
    }
  }
}

}  // namespace
}  // namespace netauction
