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
#include <string>

#include "netauction/mechanisms.hpp"
#include "netauction/scenario_io.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace netauction {
namespace {

constexpr std::size_t kMarkets = 150;

TEST(IoProperty, ScenariosRoundTrip) {
  for (Mode mode : {Mode::unit_demand, Mode::single_minded}) {
    const auto markets = property::random_suite(mode, kMarkets, 170000 + 1000 * static_cast<int>(mode), 10);
    for (std::size_t i = 0; i < markets.size(); ++i) {
      const std::string text = emit_scenario(markets[i]);
      const Scenario back = parse_scenario_text(text);
      EXPECT_EQ(back, markets[i]) << "market " << i;
      EXPECT_EQ(emit_scenario(back), text);
    }
  }
}

TEST(IoProperty, ReportsRoundTrip) {
  std::mt19937_64 rng(180000);
  std::uniform_int_distribution<int> num(0, 40);
  std::uniform_int_distribution<int> den(1, 7);
  const auto markets = property::random_suite(Mode::unit_demand, kMarkets, 180000, 10);
  for (std::size_t i = 0; i < markets.size(); ++i) {
    const Scenario& s = markets[i];
    ReportProfile r = oracle::random_withholding(s, rng);
    for (auto& b : r.bids) {
      if (num(rng) % 3 == 0) b = Rational(num(rng), den(rng));
      b.canonicalize();
    }
    const ReportProfile back = parse_reports_text(s, emit_reports(s, r));
    EXPECT_EQ(back, r) << "market " << i;
  }
}

TEST(IoProperty, ReportsRenderDeterministicallyAndTracesReplay) {
  for (Mode mode : {Mode::unit_demand, Mode::single_minded}) {
    const auto markets = property::random_suite(mode, 60, 190000 + 1000 * static_cast<int>(mode), 8);
    for (std::size_t i = 0; i < markets.size(); ++i) {
      const Scenario& s = markets[i];
      for (const auto& id : property::mechanisms_for(mode)) {
        const Outcome o = make_mechanism(id)->run(s, ReportProfile::truthful(s));
        const ResultReport report = make_report(s, id, o);
        const Outcome again = make_mechanism(id)->run(s, ReportProfile::truthful(s));
        EXPECT_EQ(render_table(s, report), render_table(s, make_report(s, id, again)));
        EXPECT_EQ(render_json(s, report), render_json(s, make_report(s, id, again)));
        const Outcome replayed = replay_trace(s, report.trace);
        EXPECT_EQ(replayed.allocation, o.allocation) << id << " market " << i;
        EXPECT_EQ(replayed.payments, o.payments) << id << " market " << i;
      }
    }
  }
}

}  // namespace
}  // namespace netauction
