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

#include "netauction/bid_engine.hpp"

#include "netauction/allocation.hpp"
#include "netauction/errors.hpp"

namespace netauction {

const Real& CriticalBid::value() const {
  if (!bounded_) throw UnboundedPayment("critical bid is unbounded");
  return value_;
}

std::string CriticalBid::to_string() const {
  if (!bounded_) return "unbounded";
  return value_.to_string() + (attained_ ? " (attained)" : " (not attained)");
}

AgentProbe::AgentProbe(const AllocationRule& rule, const Scenario& scenario,
                       const ReportProfile& reports, AgentId agent)
    : rule_(rule), scenario_(scenario), agent_(agent) {
  rule.require_mode(scenario);
  if (agent.value >= scenario.agent_count()) throw UnknownAgent("probe agent out of range");
  market_ = build_effective_market(scenario, reports);
  bids_ = to_bid_points(reports.bids);
}

std::vector<char> AgentProbe::allocate(const BidPoint& bid) {
  bids_[agent_.value] = bid;
  return rule_.allocate(AllocationContext(scenario_, market_, bids_)).won;
}

bool AgentProbe::wins(const BidPoint& bid) {
  if (!participates()) return false;
  return allocate(bid)[agent_.value] != 0;
}

std::vector<Real> AgentProbe::candidates() const {
  std::vector<Real> out{Real(0)};
  const bool ranked = scenario_.mode() == Mode::single_minded;
  for (AgentId j : market_.participants()) {
    if (j == agent_) continue;
    const Real& v = bids_[j.value].value;
    out.push_back(v);
    if (ranked) {
      const auto si = scenario_.bundle_size(agent_);
      const auto sj = scenario_.bundle_size(j);
      if (si != sj) out.push_back(v * Real::sqrt_ratio(si, sj));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CriticalBid AgentProbe::critical_bid() {
  if (!rule_.comparison_based()) {
    throw NotComparisonBased(std::string(rule_.name()) + " is not comparison-based");
  }
  if (!participates()) return CriticalBid::unbounded();
  for (const Real& c : candidates()) {
    if (wins(BidPoint{c, false})) return CriticalBid::at(c, true);
    if (wins(BidPoint{c, true})) return CriticalBid::at(c, false);
  }
  return CriticalBid::unbounded();
}

CriticalBid critical_bid_exact(const AllocationRule& rule, const Scenario& scenario,
                               const ReportProfile& reports, AgentId i,
                               std::span<const AgentId> invite_action) {
  AgentProbe probe(rule, scenario,
                   reports.with_invites(i, {invite_action.begin(), invite_action.end()}), i);
  return probe.critical_bid();
}

Rational critical_bid_bisect(const AllocationRule& rule, const Scenario& scenario,
                             const ReportProfile& reports, AgentId i,
                             std::span<const AgentId> invite_action,
                             const Rational& hi, const Rational& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("critical_bid_bisect: tol must be positive");
  AgentProbe probe(rule, scenario,
                   reports.with_invites(i, {invite_action.begin(), invite_action.end()}), i);
  auto wins = [&](const Rational& b) { return probe.wins(BidPoint{Real(b), false}); };
  Rational lo = 0;
  if (wins(lo)) return lo;
  Rational top = hi;
  if (!wins(top)) throw NoWinningBid("agent still loses at the upper bound");
  while (top - lo > tol) {
    Rational mid = (lo + top) / 2;
    if (wins(mid)) {
      top = mid;
    } else {
      lo = mid;
    }
  }
  return top;
}

}  // namespace netauction
