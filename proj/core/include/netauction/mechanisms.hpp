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

#ifndef NETAUCTION_MECHANISMS_HPP_
#define NETAUCTION_MECHANISMS_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netauction/allocation.hpp"
#include "netauction/bid_engine.hpp"
#include "netauction/market.hpp"

namespace netauction {

struct Outcome {
  Mode mode = Mode::unit_demand;
  std::vector<char> allocation;   // indexed by AgentId
  std::vector<Bundle> granted;    // single-minded only; 0 for losers
  std::vector<Real> payments;     // indexed by AgentId
  std::vector<AgentId> winners;   // priority order
  std::vector<AgentId> priority;  // the market's priority order
  Real social_welfare;            // true values of the winners
  Real revenue;

  bool won(AgentId a) const { return allocation.at(a.value) != 0; }
  const Real& payment(AgentId a) const { return payments.at(a.value); }
};

struct AgentResult {
  bool won = false;
  Real payment;
};

// nullopt marks an unbounded entry.
struct PaymentDecomposition {
  std::vector<std::optional<Real>> winning;
  std::vector<std::optional<Real>> losing;
};

enum class MonotoneClass { id, ip };

// Critical-bid payments, with v* = v*(r_i) and v0 = v*(empty):
//   id: winning = gamma v0 - alpha v* - beta v*^2
//   ip: winning = gamma v0 + alpha v* + beta v*^2
// and losing = winning - v* in both classes.
struct PaymentFormula {
  MonotoneClass cls = MonotoneClass::ip;
  Rational alpha;
  Rational beta;
  Rational gamma;

  static PaymentFormula id_mon_rm() { return {MonotoneClass::id, 0, 0, 1}; }
  static PaymentFormula ip_mon_rm() { return {MonotoneClass::ip, 1, 0, 0}; }
};

struct AgentPayments {
  std::optional<Real> winning;
  std::optional<Real> losing;
};

// v_empty is only consulted when gamma != 0.
AgentPayments apply_formula(const PaymentFormula& formula, const CriticalBid& v_report,
                            const CriticalBid& v_empty);

class Mechanism {
 public:
  virtual ~Mechanism() = default;
  virtual std::string_view id() const = 0;
  virtual Mode mode() const = 0;
  virtual const AllocationRule& allocation_rule() const = 0;

  // Throws ModeMismatch, InvalidReport, UnknownAgent, UnboundedPayment.
  virtual Outcome run(const Scenario& scenario, const ReportProfile& reports) const = 0;

  // The agent's allocation and payment at each bid; every other report,
  // including her invitations, as in reports.
  virtual std::vector<AgentResult> evaluate_agent(const Scenario& scenario,
                                                  const ReportProfile& reports,
                                                  AgentId agent,
                                                  std::span<const Rational> bids) const;

  void require_mode(const Scenario& scenario) const;
};

struct MechanismOptions {
  std::size_t exploratory_rank = 2;
};

// Ids: dna-mu, dna-mu-r, vcg, vcg-rm, net-sqrt-k-apm, nsa, exploratory-1,
// exploratory-2. Throws std::invalid_argument for anything else.
std::unique_ptr<Mechanism> make_mechanism(std::string_view id,
                                          const MechanismOptions& options = {});
const std::vector<std::string>& mechanism_ids();

// The allocation rule behind a mechanism id.
std::unique_ptr<AllocationRule> make_allocation_rule(std::string_view id,
                                                    const MechanismOptions& options = {});

std::unique_ptr<Mechanism> make_critical_payment_mechanism(
    std::string id, std::unique_ptr<AllocationRule> rule, PaymentFormula formula);

Outcome run_dna_mu(const Scenario& scenario, const ReportProfile& reports);
Outcome run_dna_mu_r(const Scenario& scenario, const ReportProfile& reports);
Outcome run_vcg(const Scenario& scenario, const ReportProfile& reports);
Outcome run_vcg_rm(const Scenario& scenario, const ReportProfile& reports);
Outcome run_net_sqrt_k_apm(const Scenario& scenario, const ReportProfile& reports);
Outcome run_nsa(const Scenario& scenario, const ReportProfile& reports);

// Throws UnboundedPayment when some participant's v*(r_i) is unbounded.
PaymentDecomposition id_mon_rm_payment(const AllocationRule& rule, const Scenario& scenario,
                                       const ReportProfile& reports);
// Throws UnboundedPayment when a winner's v*(r_i) is unbounded.
PaymentDecomposition ip_mon_rm_payment(const AllocationRule& rule, const Scenario& scenario,
                                       const ReportProfile& reports);
// Throws as id_mon_rm_payment in the id class and as ip_mon_rm_payment in
// the ip class; other unbounded entries stay nullopt.
PaymentDecomposition polynomial_payment_family(const AllocationRule& rule,
                                               const Scenario& scenario,
                                               const ReportProfile& reports,
                                               const Rational& alpha, const Rational& beta,
                                               const Rational& gamma, MonotoneClass cls);

}  // namespace netauction

#endif  // NETAUCTION_MECHANISMS_HPP_
