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

#ifndef NETAUCTION_ALLOCATION_HPP_
#define NETAUCTION_ALLOCATION_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "netauction/bid_engine.hpp"
#include "netauction/market.hpp"

namespace netauction {

struct Allocation {
  std::vector<char> won;           // indexed by AgentId
  std::vector<AgentId> selection;  // winners in the order they were admitted
};

class AllocationContext {
 public:
  AllocationContext(const Scenario& scenario, const EffectiveMarket& market,
                    std::span<const BidPoint> bids)
      : scenario_(scenario), market_(market), bids_(bids) {}

  const Scenario& scenario() const { return scenario_; }
  const EffectiveMarket& market() const { return market_; }
  const BidPoint& bid(AgentId id) const { return bids_[id.value]; }

 private:
  const Scenario& scenario_;
  const EffectiveMarket& market_;
  std::span<const BidPoint> bids_;
};

std::vector<BidPoint> to_bid_points(const std::vector<Rational>& bids);

class AllocationRule {
 public:
  virtual ~AllocationRule() = default;
  virtual std::string_view name() const = 0;
  virtual Mode mode() const = 0;
  // Decisions depend on bids only through comparisons between them.
  virtual bool comparison_based() const { return true; }
  virtual Allocation allocate(const AllocationContext& ctx) const = 0;

  // Builds the market from the reports. Throws ModeMismatch.
  Allocation allocate(const Scenario& scenario, const ReportProfile& reports) const;
  void require_mode(const Scenario& scenario) const;
};

std::unique_ptr<AllocationRule> make_dna_mu_allocation();
std::unique_ptr<AllocationRule> make_dna_mu_r_allocation();
// Top-k bids, ties by priority.
std::unique_ptr<AllocationRule> make_efficient_allocation();
// Greedy sqrt-k over all participants.
std::unique_ptr<AllocationRule> make_greedy_sqrt_k_allocation();
std::unique_ptr<AllocationRule> make_nsa_allocation();
std::unique_ptr<AllocationRule> make_exploratory_i_allocation();
std::unique_ptr<AllocationRule> make_exploratory_ii_allocation(std::size_t rank_k);

// Scans agents by descending v / sqrt|S| (ties by priority, then id) and
// admits each one whose bundle misses every bundle admitted so far. The
// result starts with pre_winners.
std::vector<AgentId> greedy_sqrt_k(const AllocationContext& ctx,
                                   std::span<const AgentId> agents,
                                   std::span<const AgentId> pre_winners);

struct DnaMuRun {
  Allocation allocation;
  std::vector<Real> threshold;  // threshold met by each winner
};
DnaMuRun run_dna_mu_loop(const AllocationContext& ctx);

std::vector<AgentId> alloc_exploratory_i(const Scenario& scenario,
                                         const ReportProfile& reports);
std::vector<AgentId> alloc_exploratory_ii(const Scenario& scenario,
                                          const ReportProfile& reports,
                                          std::size_t rank_k);

}  // namespace netauction

#endif  // NETAUCTION_ALLOCATION_HPP_
