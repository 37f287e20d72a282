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

#ifndef NETAUCTION_BID_ENGINE_HPP_
#define NETAUCTION_BID_ENGINE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "netauction/market.hpp"
#include "netauction/number.hpp"

namespace netauction {

class AllocationRule;

// A bid, or a bid plus an infinitesimal when nudged is set. Ordered
// lexicographically, so (c, nudged) sits above c and below every real d > c.
struct BidPoint {
  Real value;
  bool nudged = false;

  friend bool operator==(const BidPoint&, const BidPoint&) = default;
  friend std::strong_ordering operator<=>(const BidPoint& a, const BidPoint& b) {
    if (auto c = a.value <=> b.value; c != 0) return c;
    return a.nudged <=> b.nudged;
  }
};

// k-th largest with multiplicity; T{} when there are fewer than k values.
template <class T>
T kth_highest(std::span<const T> values, std::size_t k) {
  if (k == 0) throw std::invalid_argument("kth_highest: k must be positive");
  if (values.size() < k) return T{};
  std::vector<T> copy(values.begin(), values.end());
  std::nth_element(copy.begin(), copy.begin() + static_cast<std::ptrdiff_t>(k - 1),
                   copy.end(), std::greater<>());
  return copy[k - 1];
}

inline Rational kth_highest(std::span<const Rational> values, std::size_t k) {
  return kth_highest<Rational>(values, k);
}

// Infimum winning bid under a fixed invitation action.
class CriticalBid {
 public:
  static CriticalBid unbounded() { return CriticalBid(); }
  static CriticalBid at(Real value, bool attained) {
    CriticalBid out;
    out.bounded_ = true;
    out.value_ = std::move(value);
    out.attained_ = attained;
    return out;
  }

  bool is_unbounded() const { return !bounded_; }
  // Throws UnboundedPayment.
  const Real& value() const;
  bool attained() const { return attained_; }
  std::string to_string() const;

  friend bool operator==(const CriticalBid&, const CriticalBid&) = default;

 private:
  bool bounded_ = false;
  Real value_;
  bool attained_ = false;
};

// Evaluates one agent's allocation as her bid varies while every report,
// her own invitations included, stays fixed. The market is built once.
class AgentProbe {
 public:
  AgentProbe(const AllocationRule& rule, const Scenario& scenario,
             const ReportProfile& reports, AgentId agent);

  bool participates() const { return market_.contains(agent_); }
  const EffectiveMarket& market() const { return market_; }

  bool wins(const BidPoint& bid);
  std::vector<char> allocate(const BidPoint& bid);

  // Ascending, distinct: 0, the other participants' bids and, for sqrt-k
  // ranked scenarios, the bids that tie another participant's score.
  std::vector<Real> candidates() const;

  CriticalBid critical_bid();

 private:
  const AllocationRule& rule_;
  const Scenario& scenario_;
  AgentId agent_;
  EffectiveMarket market_;
  std::vector<BidPoint> bids_;
};

// Throws NotComparisonBased.
CriticalBid critical_bid_exact(const AllocationRule& rule, const Scenario& scenario,
                               const ReportProfile& reports, AgentId i,
                               std::span<const AgentId> invite_action);

// Bisection on [0, hi]. Returns a winning bid within tol of the infimum.
// Throws NoWinningBid when the agent loses at hi.
Rational critical_bid_bisect(const AllocationRule& rule, const Scenario& scenario,
                             const ReportProfile& reports, AgentId i,
                             std::span<const AgentId> invite_action,
                             const Rational& hi, const Rational& tol);

}  // namespace netauction

#endif  // NETAUCTION_BID_ENGINE_HPP_
