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

#include "netauction/market.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "netauction/errors.hpp"

namespace netauction {

std::string_view to_string(Mode mode) {
  return mode == Mode::unit_demand ? "unit_demand" : "single_minded";
}

const std::string& Scenario::name(AgentId id) const {
  if (id == kSeller) return seller_;
  if (id.value >= names_.size()) {
    throw UnknownAgent("no agent with index " + std::to_string(id.value));
  }
  return names_[id.value];
}

std::optional<AgentId> Scenario::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return AgentId{static_cast<std::uint32_t>(it - names_.begin())};
}

AgentId Scenario::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw UnknownAgent("unknown agent '" + std::string(name) + "'");
}

const std::vector<AgentId>& Scenario::neighbors(AgentId id) const {
  if (id == kSeller) return seller_neighbors_;
  if (id.value >= neighbors_.size()) {
    throw UnknownAgent("no agent with index " + std::to_string(id.value));
  }
  return neighbors_[id.value];
}

bool Scenario::is_neighbor(AgentId from, AgentId to) const {
  const auto& list = neighbors(from);
  return std::find(list.begin(), list.end(), to) != list.end();
}

std::size_t Scenario::bundle_size(AgentId id) const {
  return static_cast<std::size_t>(__builtin_popcountll(bundles_.at(id.value)));
}

Scenario::Builder& Scenario::Builder::unit_demand(std::size_t unit_count) {
  mode_ = Mode::unit_demand;
  unit_count_ = unit_count;
  return *this;
}

Scenario::Builder& Scenario::Builder::single_minded(std::vector<std::string> items) {
  mode_ = Mode::single_minded;
  items_ = std::move(items);
  return *this;
}

Scenario::Builder& Scenario::Builder::seller_neighbors(std::vector<std::string> names) {
  seller_neighbors_ = std::move(names);
  return *this;
}

Scenario::Builder& Scenario::Builder::agent(std::string name, Rational bid,
                                            std::vector<std::string> neighbors,
                                            std::vector<std::string> bundle) {
  agents_.push_back({std::move(name), std::move(bid), std::move(neighbors),
                     std::move(bundle)});
  return *this;
}

Scenario Scenario::Builder::build() const {
  if (!mode_) throw ValidationError("scenario mode not set");
  if (seller_.empty()) throw ValidationError("seller id is empty");
  Scenario out;
  out.seller_ = seller_;
  out.mode_ = *mode_;
  for (const auto& a : agents_) {
    if (a.name.empty()) throw ValidationError("agent id is empty");
    if (a.name == seller_) {
      throw ValidationError("agent id '" + a.name + "' collides with the seller");
    }
    out.names_.push_back(a.name);
  }
  std::sort(out.names_.begin(), out.names_.end());
  if (auto dup = std::adjacent_find(out.names_.begin(), out.names_.end());
      dup != out.names_.end()) {
    throw ValidationError("duplicate agent id '" + *dup + "'");
  }
  const std::size_t n = out.names_.size();
  out.neighbors_.resize(n);
  out.bids_.resize(n);
  out.bundles_.assign(n, 0);

  std::map<std::string, std::size_t> item_index;
  if (out.mode_ == Mode::unit_demand) {
    if (unit_count_ < 1) throw ValidationError("unit count must be at least 1");
    out.unit_count_ = unit_count_;
  } else {
    if (items_.empty()) throw ValidationError("single-minded scenario has no items");
    if (items_.size() > kMaxItems) {
      throw ValidationError("at most " + std::to_string(kMaxItems) + " items are supported");
    }
    for (const auto& item : items_) {
      if (!item_index.emplace(item, item_index.size()).second) {
        throw ValidationError("duplicate item '" + item + "'");
      }
    }
    out.items_ = items_;
  }

  auto resolve_list = [&](const std::string& owner, const std::vector<std::string>& names) {
    std::vector<AgentId> ids;
    std::set<std::string> seen;
    for (const auto& nb : names) {
      if (nb == owner) throw ValidationError("self-loop on '" + owner + "'");
      if (!seen.insert(nb).second) {
        throw ValidationError("duplicate edge " + owner + " -> " + nb);
      }
      if (nb == seller_) continue;
      auto id = out.find(nb);
      if (!id) {
        throw ValidationError("'" + owner + "' lists unknown neighbor '" + nb + "'");
      }
      ids.push_back(*id);
    }
    return ids;
  };

  out.seller_neighbors_ = resolve_list(seller_, seller_neighbors_);
  for (const auto& a : agents_) {
    const AgentId id = *out.find(a.name);
    if (sgn(a.bid) < 0) throw ValidationError("negative bid for '" + a.name + "'");
    out.bids_[id.value] = a.bid;
    out.neighbors_[id.value] = resolve_list(a.name, a.neighbors);
    if (out.mode_ == Mode::unit_demand) {
      if (!a.bundle.empty()) {
        throw ValidationError("bundle given for '" + a.name + "' in unit-demand mode");
      }
      continue;
    }
    if (a.bundle.empty()) throw ValidationError("agent '" + a.name + "' has no bundle");
    Bundle mask = 0;
    for (const auto& item : a.bundle) {
      auto it = item_index.find(item);
      if (it == item_index.end()) {
        throw ValidationError("bundle of '" + a.name + "' has unknown item '" + item + "'");
      }
      const Bundle bit = Bundle{1} << it->second;
      if (mask & bit) {
        throw ValidationError("bundle of '" + a.name + "' repeats item '" + item + "'");
      }
      mask |= bit;
    }
    out.bundles_[id.value] = mask;
  }
  return out;
}

ReportProfile ReportProfile::truthful(const Scenario& scenario) {
  ReportProfile out;
  out.bids = scenario.bids();
  out.invites.resize(scenario.agent_count());
  for (std::uint32_t i = 0; i < scenario.agent_count(); ++i) {
    out.invites[i] = scenario.neighbors(AgentId{i});
    std::sort(out.invites[i].begin(), out.invites[i].end());
  }
  return out;
}

ReportProfile ReportProfile::with_bid(AgentId agent, Rational bid) const {
  ReportProfile out(*this);
  out.bids.at(agent.value) = std::move(bid);
  return out;
}

ReportProfile ReportProfile::with_invites(AgentId agent, std::vector<AgentId> invites) const {
  ReportProfile out(*this);
  std::sort(invites.begin(), invites.end());
  out.invites.at(agent.value) = std::move(invites);
  return out;
}

void validate(const Scenario& scenario, const ReportProfile& reports) {
  const std::size_t n = scenario.agent_count();
  if (reports.bids.size() != n || reports.invites.size() != n) {
    throw UnknownAgent("report profile covers " + std::to_string(reports.bids.size()) +
                       " agents, scenario has " + std::to_string(n));
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (sgn(reports.bids[i]) < 0) {
      throw InvalidReport("negative bid reported by '" + scenario.name(AgentId{i}) + "'");
    }
    for (AgentId j : reports.invites[i]) {
      if (j.value >= n) {
        throw UnknownAgent("'" + scenario.name(AgentId{i}) + "' invites unknown agent index " +
                           std::to_string(j.value));
      }
      if (!scenario.is_neighbor(AgentId{i}, j)) {
        throw InvalidReport("'" + scenario.name(AgentId{i}) + "' invites non-neighbor '" +
                            scenario.name(j) + "'");
      }
    }
  }
}

EffectiveMarket build_effective_market(const Scenario& scenario,
                                       const ReportProfile& reports) {
  validate(scenario, reports);
  const std::size_t n = scenario.agent_count();
  EffectiveMarket market;
  market.rank_.assign(n, EffectiveMarket::kAbsent);

  std::vector<char> seen(n, 0);
  std::deque<AgentId> queue;
  auto expand = [&](AgentId from, const std::vector<AgentId>& declared,
                    const std::vector<AgentId>* reported) {
    for (AgentId to : declared) {
      if (reported != nullptr &&
          !std::binary_search(reported->begin(), reported->end(), to)) {
        continue;
      }
      market.edges_.push_back({from, to});
      if (!seen[to.value]) {
        seen[to.value] = 1;
        queue.push_back(to);
      }
    }
  };
  expand(kSeller, scenario.seller_neighbors(), nullptr);
  while (!queue.empty()) {
    AgentId u = queue.front();
    queue.pop_front();
    market.participants_.push_back(u);
    expand(u, scenario.neighbors(u), &reports.invites[u.value]);
  }
  std::sort(market.participants_.begin(), market.participants_.end());

  market.priority_ = bfs_priority(market);
  for (std::uint32_t r = 0; r < market.priority_.sequence.size(); ++r) {
    market.rank_[market.priority_.sequence[r].value] = r;
  }
  market.idt_ = build_idt(market);
  return market;
}

PriorityOrder bfs_priority(const EffectiveMarket& market) {
  const std::size_t n = market.agent_count();
  std::vector<std::vector<AgentId>> out_edges(n);
  std::vector<AgentId> from_seller;
  for (const auto& e : market.diffusion_edges()) {
    (e.from == kSeller ? from_seller : out_edges[e.from.value]).push_back(e.to);
  }
  PriorityOrder order;
  std::vector<char> seen(n, 0);
  std::deque<std::pair<AgentId, std::uint32_t>> queue;
  auto visit = [&](const std::vector<AgentId>& next, std::uint32_t depth) {
    for (AgentId v : next) {
      if (!seen[v.value]) {
        seen[v.value] = 1;
        queue.emplace_back(v, depth);
      }
    }
  };
  visit(from_seller, 1);
  while (!queue.empty()) {
    auto [u, d] = queue.front();
    queue.pop_front();
    order.sequence.push_back(u);
    order.depth.push_back(d);
    visit(out_edges[u.value], d + 1);
  }
  return order;
}

DominationTree build_idt(const EffectiveMarket& market) {
  // Iterative dominator computation (Cooper, Harvey, Kennedy). Node 0 is the
  // seller; participants get indices by reverse postorder.
  const std::size_t n = market.agent_count();
  std::vector<std::vector<AgentId>> succ(n);
  std::vector<AgentId> seller_succ;
  for (const auto& e : market.diffusion_edges()) {
    (e.from == kSeller ? seller_succ : succ[e.from.value]).push_back(e.to);
  }

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> post(n, kNone);
  std::vector<AgentId> by_post;  // postorder; seller appended last
  std::vector<char> visited(n, 0);
  {
    struct Frame {
      const std::vector<AgentId>* next;
      std::size_t pos;
      AgentId node;
    };
    std::vector<Frame> stack{{&seller_succ, 0, kSeller}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.pos < top.next->size()) {
        AgentId v = (*top.next)[top.pos++];
        if (!visited[v.value]) {
          visited[v.value] = 1;
          stack.push_back({&succ[v.value], 0, v});
        }
        continue;
      }
      if (top.node != kSeller) {
        post[top.node.value] = static_cast<std::uint32_t>(by_post.size());
        by_post.push_back(top.node);
      }
      stack.pop_back();
    }
  }
  const auto seller_post = static_cast<std::uint32_t>(by_post.size());
  auto post_of = [&](AgentId a) { return a == kSeller ? seller_post : post[a.value]; };

  std::vector<std::vector<AgentId>> preds(n);
  for (const auto& e : market.diffusion_edges()) preds[e.to.value].push_back(e.from);

  // idom indexed by postorder number; seller dominates itself.
  std::vector<std::uint32_t> idom(seller_post + 1, kNone);
  idom[seller_post] = seller_post;
  auto intersect = [&](std::uint32_t a, std::uint32_t b) {
    while (a != b) {
      while (a < b) a = idom[a];
      while (b < a) b = idom[b];
    }
    return a;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t p = seller_post; p-- > 0;) {
      AgentId node = by_post[p];
      std::uint32_t best = kNone;
      for (AgentId pr : preds[node.value]) {
        std::uint32_t q = post_of(pr);
        if (idom[q] == kNone) continue;
        best = best == kNone ? q : intersect(q, best);
      }
      if (best != idom[p]) {
        idom[p] = best;
        changed = true;
      }
    }
  }

  std::vector<AgentId> parent(n, kSeller);
  for (std::uint32_t p = 0; p < seller_post; ++p) {
    parent[by_post[p].value] = idom[p] == seller_post ? kSeller : by_post[idom[p]];
  }
  return DominationTree(n, market.participants(), std::move(parent));
}

DominationTree::DominationTree(std::size_t agent_count,
                               std::span<const AgentId> participants,
                               std::vector<AgentId> parent)
    : parent_(std::move(parent)),
      children_(agent_count),
      enter_(agent_count, kAbsent),
      exit_(agent_count, kAbsent) {
  for (AgentId a : participants) {
    AgentId p = parent_[a.value];
    (p == kSeller ? roots_ : children_[p.value]).push_back(a);
  }
  std::uint32_t clock = 0;
  std::vector<std::pair<AgentId, std::size_t>> stack;
  for (AgentId root : roots_) {
    enter_[root.value] = clock++;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [node, pos] = stack.back();
      if (pos < children_[node.value].size()) {
        AgentId c = children_[node.value][pos++];
        enter_[c.value] = clock++;
        stack.emplace_back(c, 0);
      } else {
        exit_[node.value] = clock;
        stack.pop_back();
      }
    }
  }
}

AgentId DominationTree::parent(AgentId id) const {
  if (!contains(id)) throw UnknownAgent("agent is not in the domination tree");
  return parent_[id.value];
}

const std::vector<AgentId>& DominationTree::children(AgentId id) const {
  if (id == kSeller) return roots_;
  if (!contains(id)) throw UnknownAgent("agent is not in the domination tree");
  return children_[id.value];
}

bool DominationTree::contains(AgentId id) const {
  return id != kSeller && id.value < enter_.size() && enter_[id.value] != kAbsent;
}

std::vector<AgentId> subtree(const DominationTree& idt, AgentId i) {
  if (!idt.contains(i)) throw UnknownAgent("agent is not a participant");
  std::vector<AgentId> out{i};
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    for (AgentId c : idt.children(out[pos])) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace netauction
