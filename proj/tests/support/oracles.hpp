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


#ifndef NETAUCTION_TESTS_ORACLES_HPP_
#define NETAUCTION_TESTS_ORACLES_HPP_

// Brute-force references. Nothing here calls into the market, allocation or
// payment code under test; they read the scenario and reports directly.

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <deque>
#include <optional>
#include <random>
#include <vector>

#include "netauction/market.hpp"
#include "netauction/number.hpp"
#include "netauction/random_market.hpp"

namespace netauction::oracle {

using Mask = std::uint32_t;

inline AgentId agent(std::size_t i) { return AgentId{static_cast<std::uint32_t>(i)}; }

// Agents reachable from the seller along reported invitations, never
// passing through `removed`.
inline std::vector<char> reachable(const Scenario& s, const ReportProfile& r,
                                   std::optional<AgentId> removed = std::nullopt) {
  std::vector<char> seen(s.agent_count(), 0);
  std::deque<AgentId> queue;
  auto visit = [&](AgentId j) {
    if (removed && j == *removed) return;
    if (seen[j.value]) return;
    seen[j.value] = 1;
    queue.push_back(j);
  };
  for (AgentId j : s.seller_neighbors()) visit(j);
  while (!queue.empty()) {
    const AgentId i = queue.front();
    queue.pop_front();
    for (AgentId j : r.invites[i.value]) visit(j);
  }
  return seen;
}

// Shortest invitation distance from the seller; 0 for unreachable agents.
inline std::vector<std::uint32_t> distances(const Scenario& s, const ReportProfile& r) {
  std::vector<std::uint32_t> d(s.agent_count(), 0);
  std::deque<AgentId> queue;
  for (AgentId j : s.seller_neighbors()) {
    if (d[j.value] == 0) {
      d[j.value] = 1;
      queue.push_back(j);
    }
  }
  while (!queue.empty()) {
    const AgentId i = queue.front();
    queue.pop_front();
    for (AgentId j : r.invites[i.value]) {
      if (d[j.value] != 0) continue;
      d[j.value] = d[i.value] + 1;
      queue.push_back(j);
    }
  }
  return d;
}

// True iff every path from the seller to j passes through a (a != j).
inline bool dominates(const Scenario& s, const ReportProfile& r, AgentId a, AgentId j) {
  if (a == j) return false;
  const auto base = reachable(s, r);
  if (!base[a.value] || !base[j.value]) return false;
  return !reachable(s, r, a)[j.value];
}

// j itself plus every participant it dominates.
inline std::vector<char> dominated_set(const Scenario& s, const ReportProfile& r, AgentId i) {
  std::vector<char> out(s.agent_count(), 0);
  const auto base = reachable(s, r);
  if (!base[i.value]) return out;
  const auto without = reachable(s, r, i);
  for (std::size_t j = 0; j < s.agent_count(); ++j) out[j] = base[j] && !without[j];
  out[i.value] = 1;
  return out;
}

// Highest total reported value over feasible winner sets drawn from `pool`:
// at most k winners in unit demand, pairwise disjoint bundles otherwise.
inline Rational best_welfare(const Scenario& s, const std::vector<Rational>& bids,
                             const std::vector<char>& pool) {
  std::vector<std::size_t> members;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    if (pool[j]) members.push_back(j);
  }
  Rational best = 0;
  for (Mask m = 0; m < (Mask{1} << members.size()); ++m) {
    Rational total = 0;
    std::size_t count = 0;
    Bundle used = 0;
    bool feasible = true;
    for (std::size_t t = 0; t < members.size() && feasible; ++t) {
      if (!(m >> t & 1U)) continue;
      const AgentId a = agent(members[t]);
      ++count;
      total += bids[a.value];
      if (s.mode() == Mode::single_minded) {
        feasible = (used & s.bundle(a)) == 0;
        used |= s.bundle(a);
      }
    }
    if (s.mode() == Mode::unit_demand) feasible = count <= s.unit_count();
    if (feasible && total > best) best = total;
  }
  return best;
}

// Clarke pivot payments over dominated sets: what the others lose when i
// and everyone i dominates leave.
inline std::vector<Rational> clarke_payments(const Scenario& s, const ReportProfile& r,
                                             const std::vector<char>& won) {
  const auto base = reachable(s, r);
  const Rational total = best_welfare(s, r.bids, base);
  std::vector<Rational> out(s.agent_count());
  for (std::size_t i = 0; i < s.agent_count(); ++i) {
    if (!base[i]) continue;
    const auto gone = dominated_set(s, r, agent(i));
    std::vector<char> pool(base);
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (gone[j]) pool[j] = 0;
    }
    Rational others = total;
    if (won[i]) others -= r.bids[i];
    out[i] = best_welfare(s, r.bids, pool) - others;
  }
  return out;
}

// Invitation profile where every agent keeps a random subset of her
// neighbors.
inline ReportProfile random_withholding(const Scenario& s, std::mt19937_64& rng) {
  ReportProfile r = ReportProfile::truthful(s);
  std::bernoulli_distribution keep(0.7);
  for (auto& inv : r.invites) {
    std::vector<AgentId> kept;
    for (AgentId j : inv) {
      if (keep(rng)) kept.push_back(j);
    }
    inv = std::move(kept);
  }
  return r;
}

// Every subset of an agent's neighbors, sorted ascending.
inline std::vector<std::vector<AgentId>> invite_subsets(const Scenario& s, AgentId i) {
  std::vector<AgentId> nb = s.neighbors(i);
  std::sort(nb.begin(), nb.end());
  std::vector<std::vector<AgentId>> out;
  for (Mask m = 0; m < (Mask{1} << nb.size()); ++m) {
    std::vector<AgentId> set;
    for (std::size_t t = 0; t < nb.size(); ++t) {
      if (m >> t & 1U) set.push_back(nb[t]);
    }
    out.push_back(std::move(set));
  }
  return out;
}

inline bool subset_of(const std::vector<AgentId>& a, const std::vector<AgentId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace netauction::oracle

#endif  // NETAUCTION_TESTS_ORACLES_HPP_
