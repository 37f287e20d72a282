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

#ifndef NETAUCTION_MARKET_HPP_
#define NETAUCTION_MARKET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netauction/number.hpp"

namespace netauction {

// Index into Scenario::agent_names(), which is sorted, so the order of ids
// is the order of names.
struct AgentId {
  std::uint32_t value = 0;
  friend auto operator<=>(const AgentId&, const AgentId&) = default;
};

inline constexpr AgentId kSeller{std::numeric_limits<std::uint32_t>::max()};

enum class Mode { unit_demand, single_minded };

std::string_view to_string(Mode mode);

// Bit j set means item j of Scenario::items().
using Bundle = std::uint64_t;
inline constexpr std::size_t kMaxItems = 64;

class Scenario {
 public:
  class Builder;

  const std::string& seller_name() const { return seller_; }
  std::size_t agent_count() const { return names_.size(); }
  const std::vector<std::string>& agent_names() const { return names_; }
  const std::string& name(AgentId id) const;
  std::optional<AgentId> find(std::string_view name) const;
  // Throws UnknownAgent.
  AgentId id(std::string_view name) const;

  // Neighbor lists keep their declared order; BFS visits them in that order.
  const std::vector<AgentId>& seller_neighbors() const { return seller_neighbors_; }
  const std::vector<AgentId>& neighbors(AgentId id) const;
  bool is_neighbor(AgentId from, AgentId to) const;

  const Rational& bid(AgentId id) const { return bids_.at(id.value); }
  const std::vector<Rational>& bids() const { return bids_; }

  Mode mode() const { return mode_; }
  std::size_t unit_count() const { return unit_count_; }
  const std::vector<std::string>& items() const { return items_; }
  Bundle bundle(AgentId id) const { return bundles_.at(id.value); }
  std::size_t bundle_size(AgentId id) const;

  bool operator==(const Scenario&) const = default;

 private:
  std::string seller_;
  std::vector<std::string> names_;
  std::vector<AgentId> seller_neighbors_;
  std::vector<std::vector<AgentId>> neighbors_;
  std::vector<Rational> bids_;
  Mode mode_ = Mode::unit_demand;
  std::size_t unit_count_ = 0;
  std::vector<std::string> items_;
  std::vector<Bundle> bundles_;
};

// Collects names, resolves them, and validates on build(). Edges pointing at
// the seller are dropped: they can never be used to enter the market.
class Scenario::Builder {
 public:
  explicit Builder(std::string seller) : seller_(std::move(seller)) {}

  Builder& unit_demand(std::size_t unit_count);
  Builder& single_minded(std::vector<std::string> items);
  Builder& seller_neighbors(std::vector<std::string> names);
  Builder& agent(std::string name, Rational bid,
                 std::vector<std::string> neighbors,
                 std::vector<std::string> bundle = {});

  // Throws ValidationError.
  Scenario build() const;

 private:
  struct PendingAgent {
    std::string name;
    Rational bid;
    std::vector<std::string> neighbors;
    std::vector<std::string> bundle;
  };
  std::string seller_;
  std::optional<Mode> mode_;
  std::size_t unit_count_ = 0;
  std::vector<std::string> items_;
  std::vector<std::string> seller_neighbors_;
  std::vector<PendingAgent> agents_;
};

struct ReportProfile {
  std::vector<Rational> bids;
  std::vector<std::vector<AgentId>> invites;  // each sorted ascending

  static ReportProfile truthful(const Scenario& scenario);

  ReportProfile with_bid(AgentId agent, Rational bid) const;
  ReportProfile with_invites(AgentId agent, std::vector<AgentId> invites) const;

  bool operator==(const ReportProfile&) const = default;
};

// Throws UnknownAgent or InvalidReport.
void validate(const Scenario& scenario, const ReportProfile& reports);

struct DiffusionEdge {
  AgentId from;  // may be kSeller
  AgentId to;
  bool operator==(const DiffusionEdge&) const = default;
};

struct PriorityOrder {
  std::vector<AgentId> sequence;
  std::vector<std::uint32_t> depth;  // parallel to sequence; seller is depth 0
};

class DominationTree {
 public:
  DominationTree() = default;
  DominationTree(std::size_t agent_count, std::span<const AgentId> participants,
                 std::vector<AgentId> parent);

  // kSeller for agents dominated by nobody but the seller.
  AgentId parent(AgentId id) const;
  const std::vector<AgentId>& children(AgentId id) const;
  bool contains(AgentId id) const;
  // True iff j lies in the subtree rooted at root (root included).
  bool in_subtree(AgentId root, AgentId j) const {
    const auto r = root.value;
    const auto x = j.value;
    return enter_[x] != kAbsent && enter_[r] <= enter_[x] && enter_[x] < exit_[r];
  }

 private:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  std::vector<AgentId> parent_;
  std::vector<std::vector<AgentId>> children_;
  std::vector<AgentId> roots_;
  std::vector<std::uint32_t> enter_;
  std::vector<std::uint32_t> exit_;
};

class EffectiveMarket {
 public:
  EffectiveMarket() = default;

  const std::vector<AgentId>& participants() const { return participants_; }
  bool contains(AgentId id) const {
    return id.value < rank_.size() && rank_[id.value] != kAbsent;
  }
  // Edges between participants in the order the seller, then each
  // participant in priority order, declares them.
  const std::vector<DiffusionEdge>& diffusion_edges() const { return edges_; }
  const PriorityOrder& priority() const { return priority_; }
  std::uint32_t rank(AgentId id) const { return rank_.at(id.value); }
  const DominationTree& idt() const { return idt_; }
  std::size_t agent_count() const { return rank_.size(); }

 private:
  friend EffectiveMarket build_effective_market(const Scenario&, const ReportProfile&);
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  std::vector<AgentId> participants_;
  std::vector<DiffusionEdge> edges_;
  PriorityOrder priority_;
  std::vector<std::uint32_t> rank_;
  DominationTree idt_;
};

EffectiveMarket build_effective_market(const Scenario& scenario,
                                       const ReportProfile& reports);

// FIFO breadth-first search over the market's edges; invitees are enqueued
// in declared order.
PriorityOrder bfs_priority(const EffectiveMarket& market);

// Dominator tree of the seller-rooted digraph formed by the market's edges.
DominationTree build_idt(const EffectiveMarket& market);

// Sorted ascending. Throws UnknownAgent if i is not in the tree.
std::vector<AgentId> subtree(const DominationTree& idt, AgentId i);

}  // namespace netauction

#endif  // NETAUCTION_MARKET_HPP_
