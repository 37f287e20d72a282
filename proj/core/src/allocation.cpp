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

#include "netauction/allocation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "netauction/errors.hpp"

namespace netauction {
namespace {

// Participants sorted by descending bid.
std::vector<AgentId> by_bid_descending(const AllocationContext& ctx) {
  std::vector<AgentId> out = ctx.market().participants();
  std::stable_sort(out.begin(), out.end(), [&](AgentId a, AgentId b) {
    return ctx.bid(a) > ctx.bid(b);
  });
  return out;
}

// v^k over the ranked participants that pass keep().
template <class Keep>
BidPoint kth_among(const AllocationContext& ctx, const std::vector<AgentId>& ranked,
                   std::size_t k, Keep keep) {
  std::size_t seen = 0;
  for (AgentId j : ranked) {
    if (!keep(j)) continue;
    if (++seen == k) return ctx.bid(j);
  }
  return BidPoint{};
}

// v^2 / |S|, compared lexicographically with the nudge flag.
class Scores {
 public:
  explicit Scores(const AllocationContext& ctx) : ctx_(ctx) {
    key_.resize(ctx.scenario().agent_count());
    for (AgentId a : ctx.market().participants()) {
      const BidPoint& b = ctx.bid(a);
      Real sq = b.value * b.value;
      sq *= Real(Rational(1, static_cast<unsigned long>(ctx.scenario().bundle_size(a))));
      key_[a.value] = BidPoint{std::move(sq), b.nudged};
    }
  }
  std::strong_ordering compare(AgentId a, AgentId b) const {
    return key_[a.value] <=> key_[b.value];
  }
  bool higher_in_scan(AgentId a, AgentId b) const {
    if (auto c = compare(a, b); c != 0) return c > 0;
    const auto& m = ctx_.market();
    if (m.rank(a) != m.rank(b)) return m.rank(a) < m.rank(b);
    return a < b;
  }

 private:
  const AllocationContext& ctx_;
  std::vector<BidPoint> key_;
};

Allocation empty_allocation(const AllocationContext& ctx) {
  Allocation out;
  out.won.assign(ctx.scenario().agent_count(), 0);
  return out;
}

void admit(Allocation& out, AgentId a) {
  out.won[a.value] = 1;
  out.selection.push_back(a);
}

std::vector<AgentId> greedy_with(const AllocationContext& ctx, const Scores& scores,
                                 std::vector<AgentId> agents,
                                 std::span<const AgentId> pre_winners) {
  std::sort(agents.begin(), agents.end(),
            [&](AgentId a, AgentId b) { return scores.higher_in_scan(a, b); });
  std::vector<AgentId> winners(pre_winners.begin(), pre_winners.end());
  Bundle used = 0;
  for (AgentId w : winners) used |= ctx.scenario().bundle(w);
  for (AgentId a : agents) {
    if (std::find(winners.begin(), winners.end(), a) != winners.end()) continue;
    const Bundle b = ctx.scenario().bundle(a);
    if ((b & used) == 0) {
      winners.push_back(a);
      used |= b;
    }
  }
  return winners;
}

class DnaMuRule final : public AllocationRule {
 public:
  std::string_view name() const override { return "dna-mu"; }
  Mode mode() const override { return Mode::unit_demand; }
  Allocation allocate(const AllocationContext& ctx) const override {
    return run_dna_mu_loop(ctx).allocation;
  }
};

class DnaMuRRule final : public AllocationRule {
 public:
  std::string_view name() const override { return "dna-mu-r"; }
  Mode mode() const override { return Mode::unit_demand; }
  Allocation allocate(const AllocationContext& ctx) const override {
    Allocation out = empty_allocation(ctx);
    const std::size_t k = ctx.scenario().unit_count();
    const auto ranked = by_bid_descending(ctx);
    const auto& idt = ctx.market().idt();
    for (AgentId i : ctx.market().priority().sequence) {
      if (out.selection.size() == k) break;
      BidPoint th = kth_among(ctx, ranked, k, [&](AgentId j) { return !idt.in_subtree(i, j); });
      if (ctx.bid(i) >= th) admit(out, i);
    }
    return out;
  }
};

class EfficientRule final : public AllocationRule {
 public:
  std::string_view name() const override { return "efficient"; }
  Mode mode() const override { return Mode::unit_demand; }
  Allocation allocate(const AllocationContext& ctx) const override {
    Allocation out = empty_allocation(ctx);
    std::vector<AgentId> order = ctx.market().priority().sequence;
    std::stable_sort(order.begin(), order.end(),
                     [&](AgentId a, AgentId b) { return ctx.bid(a) > ctx.bid(b); });
    const std::size_t k = std::min(ctx.scenario().unit_count(), order.size());
    std::vector<AgentId> top(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    for (AgentId a : ctx.market().priority().sequence) {
      if (std::find(top.begin(), top.end(), a) != top.end()) admit(out, a);
    }
    return out;
  }
};

class GreedySqrtKRule final : public AllocationRule {
 public:
  std::string_view name() const override { return "greedy-sqrt-k"; }
  Mode mode() const override { return Mode::single_minded; }
  Allocation allocate(const AllocationContext& ctx) const override {
    Allocation out = empty_allocation(ctx);
    Scores scores(ctx);
    for (AgentId a : greedy_with(ctx, scores, ctx.market().participants(), {})) {
      admit(out, a);
    }
    return out;
  }
};

class NsaRule final : public AllocationRule {
 public:
  std::string_view name() const override { return "nsa"; }
  Mode mode() const override { return Mode::single_minded; }
  Allocation allocate(const AllocationContext& ctx) const override {
    Allocation out = empty_allocation(ctx);
    Scores scores(ctx);
    const auto& idt = ctx.market().idt();
    const auto& participants = ctx.market().participants();
    Bundle used = 0;
    for (AgentId i : ctx.market().priority().sequence) {
      const bool argmax = std::none_of(participants.begin(), participants.end(), [&](AgentId j) {
        return !idt.in_subtree(i, j) && scores.compare(j, i) > 0;
      });
      const Bundle b = ctx.scenario().bundle(i);
      if (argmax && (b & used) == 0) {
        admit(out, i);
        used |= b;
      }
    }
    return out;
  }
};

class ExploratoryIRule final : public AllocationRule {
 public:
  std::string_view name() const override { return "exploratory-1"; }
  Mode mode() const override { return Mode::single_minded; }
  Allocation allocate(const AllocationContext& ctx) const override {
    Allocation out = empty_allocation(ctx);
    Scores scores(ctx);
    const auto& idt = ctx.market().idt();
    for (AgentId i : ctx.market().priority().sequence) {
      std::vector<AgentId> pool;
      for (AgentId j : ctx.market().participants()) {
        if (j == i || !idt.in_subtree(i, j)) pool.push_back(j);
      }
      auto run = greedy_with(ctx, scores, std::move(pool), out.selection);
      if (std::find(run.begin(), run.end(), i) != run.end()) admit(out, i);
    }
    return out;
  }
};

class ExploratoryIIRule final : public AllocationRule {
 public:
  explicit ExploratoryIIRule(std::size_t rank_k) : rank_k_(rank_k) {
    if (rank_k_ == 0) throw std::invalid_argument("exploratory-2 needs a positive rank");
  }
  std::string_view name() const override { return "exploratory-2"; }
  Mode mode() const override { return Mode::single_minded; }
  Allocation allocate(const AllocationContext& ctx) const override {
    Allocation out = empty_allocation(ctx);
    Scores scores(ctx);
    const auto& idt = ctx.market().idt();
    const auto& participants = ctx.market().participants();
    Bundle used = 0;
    for (AgentId i : ctx.market().priority().sequence) {
      const auto above = std::count_if(participants.begin(), participants.end(), [&](AgentId j) {
        return !idt.in_subtree(i, j) && scores.compare(j, i) > 0;
      });
      const Bundle b = ctx.scenario().bundle(i);
      if (static_cast<std::size_t>(above) < rank_k_ && (b & used) == 0) {
        admit(out, i);
        used |= b;
      }
    }
    return out;
  }

 private:
  std::size_t rank_k_;
};

}  // namespace

std::vector<BidPoint> to_bid_points(const std::vector<Rational>& bids) {
  std::vector<BidPoint> out;
  out.reserve(bids.size());
  for (const auto& b : bids) out.push_back(BidPoint{Real(b), false});
  return out;
}

void AllocationRule::require_mode(const Scenario& scenario) const {
  if (scenario.mode() != mode()) {
    throw ModeMismatch(std::string(name()) + " needs a " + std::string(to_string(mode())) +
                       " scenario, got " + std::string(to_string(scenario.mode())));
  }
}

Allocation AllocationRule::allocate(const Scenario& scenario,
                                    const ReportProfile& reports) const {
  require_mode(scenario);
  const EffectiveMarket market = build_effective_market(scenario, reports);
  const auto bids = to_bid_points(reports.bids);
  return allocate(AllocationContext(scenario, market, bids));
}

std::unique_ptr<AllocationRule> make_dna_mu_allocation() { return std::make_unique<DnaMuRule>(); }
std::unique_ptr<AllocationRule> make_dna_mu_r_allocation() {
  return std::make_unique<DnaMuRRule>();
}
std::unique_ptr<AllocationRule> make_efficient_allocation() {
  return std::make_unique<EfficientRule>();
}
std::unique_ptr<AllocationRule> make_greedy_sqrt_k_allocation() {
  return std::make_unique<GreedySqrtKRule>();
}
std::unique_ptr<AllocationRule> make_nsa_allocation() { return std::make_unique<NsaRule>(); }
std::unique_ptr<AllocationRule> make_exploratory_i_allocation() {
  return std::make_unique<ExploratoryIRule>();
}
std::unique_ptr<AllocationRule> make_exploratory_ii_allocation(std::size_t rank_k) {
  return std::make_unique<ExploratoryIIRule>(rank_k);
}

std::vector<AgentId> greedy_sqrt_k(const AllocationContext& ctx,
                                   std::span<const AgentId> agents,
                                   std::span<const AgentId> pre_winners) {
  if (ctx.scenario().mode() != Mode::single_minded) {
    throw ModeMismatch("greedy_sqrt_k needs a single_minded scenario");
  }
  Scores scores(ctx);
  for (AgentId a : agents) {
    if (!ctx.market().contains(a)) throw UnknownAgent("greedy_sqrt_k: agent is not a participant");
  }
  return greedy_with(ctx, scores, std::vector<AgentId>(agents.begin(), agents.end()),
                     pre_winners);
}

DnaMuRun run_dna_mu_loop(const AllocationContext& ctx) {
  DnaMuRun run;
  run.allocation = empty_allocation(ctx);
  run.threshold.resize(ctx.scenario().agent_count());
  std::size_t k = ctx.scenario().unit_count();
  const auto ranked = by_bid_descending(ctx);
  const auto& idt = ctx.market().idt();
  for (AgentId i : ctx.market().priority().sequence) {
    if (k == 0) break;
    BidPoint th = kth_among(ctx, ranked, k, [&](AgentId j) {
      return !idt.in_subtree(i, j) && !run.allocation.won[j.value];
    });
    if (ctx.bid(i) >= th) {
      admit(run.allocation, i);
      run.threshold[i.value] = th.value;
      --k;
    }
  }
  return run;
}

std::vector<AgentId> alloc_exploratory_i(const Scenario& scenario,
                                         const ReportProfile& reports) {
  return make_exploratory_i_allocation()->allocate(scenario, reports).selection;
}

std::vector<AgentId> alloc_exploratory_ii(const Scenario& scenario,
                                          const ReportProfile& reports,
                                          std::size_t rank_k) {
  return make_exploratory_ii_allocation(rank_k)->allocate(scenario, reports).selection;
}

}  // namespace netauction
