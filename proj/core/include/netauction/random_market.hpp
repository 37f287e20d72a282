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

#ifndef NETAUCTION_RANDOM_MARKET_HPP_
#define NETAUCTION_RANDOM_MARKET_HPP_

#include <cstddef>
#include <random>

#include "netauction/market.hpp"

namespace netauction {

struct RandomMarketConfig {
  Mode mode = Mode::unit_demand;
  std::size_t min_agents = 1;
  std::size_t max_agents = 7;
  std::size_t max_units = 3;
  std::size_t min_items = 1;
  std::size_t max_items = 5;
  std::size_t max_bundle = 3;
  unsigned max_bid = 10;  // bids are integers in [0, max_bid]
  double seller_edge_probability = 0.4;
  double edge_probability = 0.3;
};

Scenario random_market(std::mt19937_64& rng, const RandomMarketConfig& config = {});

// Adds unit_count - base.unit_count() bidders adjacent to the seller, listed
// first, each bidding dummy_bid; the unit count becomes unit_count.
Scenario with_dummy_bidders(const Scenario& base, std::size_t unit_count,
                            const Rational& dummy_bid);

}  // namespace netauction

#endif  // NETAUCTION_RANDOM_MARKET_HPP_
