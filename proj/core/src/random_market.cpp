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

#include "netauction/random_market.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace netauction {
namespace {

std::vector<std::string> names_of(const Scenario& s, const std::vector<AgentId>& ids) {
  std::vector<std::string> out;
  for (AgentId id : ids) out.push_back(s.name(id));
  return out;
}

std::vector<std::string> bundle_items(const Scenario& s, AgentId id) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < s.items().size(); ++j) {
    if (s.bundle(id) >> j & 1U) out.push_back(s.items()[j]);
  }
  return out;
}

}  // namespace

Scenario random_market(std::mt19937_64& rng, const RandomMarketConfig& config) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = uniform(config.min_agents, config.max_agents);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));

  Scenario::Builder b("s");
  std::vector<std::string> items;
  if (config.mode == Mode::unit_demand) {
    b.unit_demand(uniform(1, config.max_units));
  } else {
    const std::size_t m = uniform(config.min_items, config.max_items);
    for (std::size_t j = 0; j < m; ++j) items.push_back(std::string(1, static_cast<char>('a' + j)));
    b.single_minded(items);
  }

  std::bernoulli_distribution to_seller(config.seller_edge_probability);
  std::bernoulli_distribution edge(config.edge_probability);
  std::vector<std::string> from_seller;
  for (const auto& name : names) {
    if (to_seller(rng)) from_seller.push_back(name);
  }
  if (from_seller.empty() && n > 0) from_seller.push_back(names[uniform(0, n - 1)]);
  std::shuffle(from_seller.begin(), from_seller.end(), rng);
  b.seller_neighbors(from_seller);

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> nbrs;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && edge(rng)) nbrs.push_back(names[j]);
    }
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    std::vector<std::string> bundle;
    if (config.mode == Mode::single_minded) {
      std::vector<std::string> pool = items;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(uniform(1, std::min(config.max_bundle, pool.size())));
      bundle = std::move(pool);
    }
    b.agent(names[i], Rational(static_cast<unsigned long>(uniform(0, config.max_bid))),
            std::move(nbrs), std::move(bundle));
  }
  return b.build();
}

Scenario with_dummy_bidders(const Scenario& base, std::size_t unit_count,
                            const Rational& dummy_bid) {
  if (base.mode() != Mode::unit_demand || unit_count < base.unit_count()) {
    throw std::invalid_argument("with_dummy_bidders needs a unit-demand base and more units");
  }
  const std::size_t t = unit_count - base.unit_count();
  Scenario::Builder b(base.seller_name());
  b.unit_demand(unit_count);
  std::vector<std::string> from_seller;
  for (std::size_t i = 1; i <= t; ++i) {
    std::string name = "dummy" + std::to_string(i);
    while (base.find(name)) name += "_";
    from_seller.push_back(name);
    b.agent(name, dummy_bid, {});
  }
  for (const auto& n : names_of(base, base.seller_neighbors())) from_seller.push_back(n);
  b.seller_neighbors(from_seller);
  for (std::uint32_t i = 0; i < base.agent_count(); ++i) {
    const AgentId id{i};
    b.agent(base.name(id), base.bid(id), names_of(base, base.neighbors(id)),
            base.mode() == Mode::single_minded ? bundle_items(base, id)
                                               : std::vector<std::string>{});
  }
  return b.build();
}

}  // namespace netauction
