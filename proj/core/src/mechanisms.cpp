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

#include "netauction/mechanisms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "netauction/errors.hpp"

namespace netauction {
namespace {

Outcome make_outcome(const Scenario& scenario, const EffectiveMarket& market,
                     std::vector<char> won, std::vector<Real> payments) {
  Outcome out;
  out.mode = scenario.mode();
  out.allocation = std::move(won);
  out.payments = std::move(payments);
  out.priority = market.priority().sequence;
  out.granted.assign(scenario.agent_count(), 0);
  for (AgentId a : out.priority) {
    if (!out.allocation[a.value]) continue;
    out.winners.push_back(a);
    out.social_welfare += Real(scenario.bid(a));
    if (scenario.mode() == Mode::single_minded) out.granted[a.value] = scenario.bundle(a);
  }
  for (const auto& p : out.payments) out.revenue += p;
  return out;
}

// Sum of the k highest reported bids among participants that pass keep().
template <class Keep>
Rational top_k_sum(const EffectiveMarket& market, const std::vector<Rational>& bids,
                   std::size_t k, Keep keep) {
  std::vector<Rational> pool;
  for (AgentId a : market.participants()) {
    if (keep(a)) pool.push_back(bids[a.value]);
  }
  std::sort(pool.begin(), pool.end(), std::greater<>());
  Rational sum = 0;
  for (std::size_t i = 0; i < std::min(k, pool.size()); ++i) sum += pool[i];
  return sum;
}

template <class Keep>
Rational kth_reported(const EffectiveMarket& market, const std::vector<Rational>& bids,
                      std::size_t k, Keep keep) {
  std::vector<Rational> pool;
  for (AgentId a : market.participants()) {
    if (keep(a)) pool.push_back(bids[a.value]);
  }
  return kth_highest(std::span<const Rational>(pool), k);
}

bool winning_needs_report(const PaymentFormula& f) {
  return sgn(f.alpha) != 0 || sgn(f.beta) != 0;
}
bool losing_needs_report(const PaymentFormula& f) {
  return f.cls == MonotoneClass::id || f.alpha != 1 || sgn(f.beta) != 0;
}
bool needs_empty(const PaymentFormula& f) { return sgn(f.gamma) != 0; }

std::optional<Real> winning_side(const PaymentFormula& f, const std::function<const CriticalBid&()>& vr,
                                 const std::function<const CriticalBid&()>& v0) {
  Real out;
  if (needs_empty(f)) {
    if (v0().is_unbounded()) return std::nullopt;
    out += Real(f.gamma) * v0().value();
  }
  if (winning_needs_report(f)) {
    if (vr().is_unbounded()) return std::nullopt;
    const Real& v = vr().value();
    Real poly = Real(f.alpha) * v + Real(f.beta) * v * v;
    if (f.cls == MonotoneClass::id) {
      out -= poly;
    } else {
      out += poly;
    }
  }
  return out;
}

std::optional<Real> losing_side(const PaymentFormula& f, const std::function<const CriticalBid&()>& vr,
                                const std::function<const CriticalBid&()>& v0) {
  Real out;
  if (needs_empty(f)) {
    if (v0().is_unbounded()) return std::nullopt;
    out += Real(f.gamma) * v0().value();
  }
  if (losing_needs_report(f)) {
    if (vr().is_unbounded()) return std::nullopt;
    const Real& v = vr().value();
    if (f.cls == MonotoneClass::id) {
      out -= Real(f.alpha + 1) * v + Real(f.beta) * v * v;
    } else {
      out += Real(f.alpha - 1) * v + Real(f.beta) * v * v;
    }
  }
  return out;
}

// Computes critical bids on first use.
class LazyCriticalBids {
 public:
  LazyCriticalBids(AgentProbe& probe, const AllocationRule& rule, const Scenario& scenario,
                   const ReportProfile& reports, AgentId agent)
      : probe_(probe), rule_(rule), scenario_(scenario), reports_(reports), agent_(agent) {}

  const CriticalBid& at_report() {
    if (!report_) report_ = probe_.critical_bid();
    return *report_;
  }
  const CriticalBid& at_empty() {
    if (!empty_) empty_ = critical_bid_exact(rule_, scenario_, reports_, agent_, {});
    return *empty_;
  }
  std::function<const CriticalBid&()> report_fn() {
    return [this]() -> const CriticalBid& { return at_report(); };
  }
  std::function<const CriticalBid&()> empty_fn() {
    return [this]() -> const CriticalBid& { return at_empty(); };
  }

 private:
  AgentProbe& probe_;
  const AllocationRule& rule_;
  const Scenario& scenario_;
  const ReportProfile& reports_;
  AgentId agent_;
  std::optional<CriticalBid> report_;
  std::optional<CriticalBid> empty_;
};

Real charged(const std::optional<Real>& side, const Scenario& scenario, AgentId agent,
             std::string_view mechanism) {
  if (!side) {
    throw UnboundedPayment(std::string(mechanism) + ": payment of '" + scenario.name(agent) +
                           "' needs an unbounded critical bid");
  }
  return *side;
}

class DnaMuMechanism final : public Mechanism {
 public:
  DnaMuMechanism() : rule_(make_dna_mu_allocation()) {}
  std::string_view id() const override { return "dna-mu"; }
  Mode mode() const override { return Mode::unit_demand; }
  const AllocationRule& allocation_rule() const override { return *rule_; }
  Outcome run(const Scenario& scenario, const ReportProfile& reports) const override {
    require_mode(scenario);
    const auto market = build_effective_market(scenario, reports);
    const auto bids = to_bid_points(reports.bids);
    DnaMuRun loop = run_dna_mu_loop(AllocationContext(scenario, market, bids));
    std::vector<Real> payments(scenario.agent_count());
    for (AgentId w : loop.allocation.selection) payments[w.value] = loop.threshold[w.value];
    return make_outcome(scenario, market, std::move(loop.allocation.won), std::move(payments));
  }

 private:
  std::unique_ptr<AllocationRule> rule_;
};

class VcgMechanism final : public Mechanism {
 public:
  VcgMechanism() : rule_(make_efficient_allocation()) {}
  std::string_view id() const override { return "vcg"; }
  Mode mode() const override { return Mode::unit_demand; }
  const AllocationRule& allocation_rule() const override { return *rule_; }
  Outcome run(const Scenario& scenario, const ReportProfile& reports) const override {
    require_mode(scenario);
    const auto market = build_effective_market(scenario, reports);
    const auto bids = to_bid_points(reports.bids);
    Allocation alloc = rule_->allocate(AllocationContext(scenario, market, bids));
    const std::size_t k = scenario.unit_count();
    const auto& idt = market.idt();
    const Rational total = top_k_sum(market, reports.bids, k, [](AgentId) { return true; });
    std::vector<Real> payments(scenario.agent_count());
    for (AgentId i : market.participants()) {
      const Rational without =
          top_k_sum(market, reports.bids, k, [&](AgentId j) { return !idt.in_subtree(i, j); });
      Rational others = total;
      if (alloc.won[i.value]) others -= reports.bids[i.value];
      payments[i.value] = Real(without - others);
    }
    return make_outcome(scenario, market, std::move(alloc.won), std::move(payments));
  }

 private:
  std::unique_ptr<AllocationRule> rule_;
};

class VcgRmMechanism final : public Mechanism {
 public:
  VcgRmMechanism() : rule_(make_efficient_allocation()) {}
  std::string_view id() const override { return "vcg-rm"; }
  Mode mode() const override { return Mode::unit_demand; }
  const AllocationRule& allocation_rule() const override { return *rule_; }
  Outcome run(const Scenario& scenario, const ReportProfile& reports) const override {
    require_mode(scenario);
    const auto market = build_effective_market(scenario, reports);
    const auto bids = to_bid_points(reports.bids);
    Allocation alloc = rule_->allocate(AllocationContext(scenario, market, bids));
    const std::size_t k = scenario.unit_count();
    const auto& idt = market.idt();
    const Rational all = kth_reported(market, reports.bids, k, [](AgentId) { return true; });
    std::vector<Real> payments(scenario.agent_count());
    for (AgentId i : market.participants()) {
      Rational outside =
          kth_reported(market, reports.bids, k, [&](AgentId j) { return !idt.in_subtree(i, j); });
      payments[i.value] = Real(alloc.won[i.value] ? outside : Rational(outside - all));
    }
    return make_outcome(scenario, market, std::move(alloc.won), std::move(payments));
  }

 private:
  std::unique_ptr<AllocationRule> rule_;
};

class CriticalPaymentMechanism final : public Mechanism {
 public:
  CriticalPaymentMechanism(std::string id, std::unique_ptr<AllocationRule> rule,
                           PaymentFormula formula)
      : id_(std::move(id)), rule_(std::move(rule)), formula_(std::move(formula)) {}

  std::string_view id() const override { return id_; }
  Mode mode() const override { return rule_->mode(); }
  const AllocationRule& allocation_rule() const override { return *rule_; }

  Outcome run(const Scenario& scenario, const ReportProfile& reports) const override {
    require_mode(scenario);
    const auto market = build_effective_market(scenario, reports);
    const auto bids = to_bid_points(reports.bids);
    Allocation alloc = rule_->allocate(AllocationContext(scenario, market, bids));
    std::vector<Real> payments(scenario.agent_count());
    for (AgentId i : market.participants()) {
      AgentProbe probe(*rule_, scenario, reports, i);
      LazyCriticalBids crit(probe, *rule_, scenario, reports, i);
      const bool won = alloc.won[i.value] != 0;
      auto side = won ? winning_side(formula_, crit.report_fn(), crit.empty_fn())
                      : losing_side(formula_, crit.report_fn(), crit.empty_fn());
      payments[i.value] = charged(side, scenario, i, id_);
    }
    return make_outcome(scenario, market, std::move(alloc.won), std::move(payments));
  }

  std::vector<AgentResult> evaluate_agent(const Scenario& scenario, const ReportProfile& reports,
                                          AgentId agent,
                                          std::span<const Rational> bids) const override {
    require_mode(scenario);
    std::vector<AgentResult> out(bids.size());
    AgentProbe probe(*rule_, scenario, reports, agent);
    if (!probe.participates()) return out;
    LazyCriticalBids crit(probe, *rule_, scenario, reports, agent);
    std::optional<std::optional<Real>> win_pay;
    std::optional<std::optional<Real>> lose_pay;
    for (std::size_t b = 0; b < bids.size(); ++b) {
      out[b].won = probe.wins(BidPoint{Real(bids[b]), false});
    }
    for (std::size_t b = 0; b < bids.size(); ++b) {
      if (out[b].won) {
        if (!win_pay) win_pay = winning_side(formula_, crit.report_fn(), crit.empty_fn());
        out[b].payment = charged(*win_pay, scenario, agent, id_);
      } else {
        if (!lose_pay) lose_pay = losing_side(formula_, crit.report_fn(), crit.empty_fn());
        out[b].payment = charged(*lose_pay, scenario, agent, id_);
      }
    }
    return out;
  }

 private:
  std::string id_;
  std::unique_ptr<AllocationRule> rule_;
  PaymentFormula formula_;
};

PaymentDecomposition decompose(const AllocationRule& rule, const Scenario& scenario,
                               const ReportProfile& reports, const PaymentFormula& formula,
                               bool require_losing, bool require_winner_side) {
  rule.require_mode(scenario);
  const auto market = build_effective_market(scenario, reports);
  const auto bids = to_bid_points(reports.bids);
  const Allocation alloc = rule.allocate(AllocationContext(scenario, market, bids));
  PaymentDecomposition out;
  out.winning.assign(scenario.agent_count(), Real(0));
  out.losing.assign(scenario.agent_count(), Real(0));
  for (AgentId i : market.participants()) {
    AgentProbe probe(rule, scenario, reports, i);
    LazyCriticalBids crit(probe, rule, scenario, reports, i);
    out.winning[i.value] = winning_side(formula, crit.report_fn(), crit.empty_fn());
    out.losing[i.value] = losing_side(formula, crit.report_fn(), crit.empty_fn());
    const bool won = alloc.won[i.value] != 0;
    if (require_losing && !out.losing[i.value]) {
      throw UnboundedPayment("losing payment of '" + scenario.name(i) + "' is unbounded");
    }
    if (require_winner_side && won) (void)charged(out.winning[i.value], scenario, i, rule.name());
  }
  return out;
}

}  // namespace

AgentPayments apply_formula(const PaymentFormula& formula, const CriticalBid& v_report,
                            const CriticalBid& v_empty) {
  auto vr = [&]() -> const CriticalBid& { return v_report; };
  auto v0 = [&]() -> const CriticalBid& { return v_empty; };
  return {winning_side(formula, vr, v0), losing_side(formula, vr, v0)};
}

std::vector<AgentResult> Mechanism::evaluate_agent(const Scenario& scenario,
                                                   const ReportProfile& reports, AgentId agent,
                                                   std::span<const Rational> bids) const {
  std::vector<AgentResult> out;
  out.reserve(bids.size());
  ReportProfile probe = reports;
  for (const auto& b : bids) {
    probe.bids.at(agent.value) = b;
    Outcome o = run(scenario, probe);
    out.push_back({o.won(agent), o.payment(agent)});
  }
  return out;
}

void Mechanism::require_mode(const Scenario& scenario) const {
  if (scenario.mode() != mode()) {
    throw ModeMismatch(std::string(id()) + " needs a " + std::string(to_string(mode())) +
                       " scenario, got " + std::string(to_string(scenario.mode())));
  }
}

const std::vector<std::string>& mechanism_ids() {
  static const std::vector<std::string> ids = {
      "dna-mu", "dna-mu-r", "vcg", "vcg-rm", "net-sqrt-k-apm", "nsa", "exploratory-1",
      "exploratory-2"};
  return ids;
}

std::unique_ptr<Mechanism> make_critical_payment_mechanism(
    std::string id, std::unique_ptr<AllocationRule> rule, PaymentFormula formula) {
  return std::make_unique<CriticalPaymentMechanism>(std::move(id), std::move(rule),
                                                    std::move(formula));
}

std::unique_ptr<AllocationRule> make_allocation_rule(std::string_view id,
                                                    const MechanismOptions& options) {
  if (id == "dna-mu") return make_dna_mu_allocation();
  if (id == "dna-mu-r") return make_dna_mu_r_allocation();
  if (id == "vcg" || id == "vcg-rm") return make_efficient_allocation();
  if (id == "net-sqrt-k-apm") return make_greedy_sqrt_k_allocation();
  if (id == "nsa") return make_nsa_allocation();
  if (id == "exploratory-1") return make_exploratory_i_allocation();
  if (id == "exploratory-2") return make_exploratory_ii_allocation(options.exploratory_rank);
  throw std::invalid_argument("unknown mechanism '" + std::string(id) + "'");
}

std::unique_ptr<Mechanism> make_mechanism(std::string_view id, const MechanismOptions& options) {
  if (id == "dna-mu") return std::make_unique<DnaMuMechanism>();
  if (id == "dna-mu-r") {
    return make_critical_payment_mechanism("dna-mu-r", make_dna_mu_r_allocation(),
                                           PaymentFormula::ip_mon_rm());
  }
  if (id == "vcg") return std::make_unique<VcgMechanism>();
  if (id == "vcg-rm") return std::make_unique<VcgRmMechanism>();
  if (id == "net-sqrt-k-apm") {
    return make_critical_payment_mechanism("net-sqrt-k-apm", make_greedy_sqrt_k_allocation(),
                                           PaymentFormula::id_mon_rm());
  }
  if (id == "nsa") {
    return make_critical_payment_mechanism("nsa", make_nsa_allocation(),
                                           PaymentFormula::ip_mon_rm());
  }
  if (id == "exploratory-1") {
    return make_critical_payment_mechanism("exploratory-1", make_exploratory_i_allocation(),
                                           PaymentFormula::ip_mon_rm());
  }
  if (id == "exploratory-2") {
    return make_critical_payment_mechanism(
        "exploratory-2", make_exploratory_ii_allocation(options.exploratory_rank),
        PaymentFormula::ip_mon_rm());
  }
  throw std::invalid_argument("unknown mechanism '" + std::string(id) + "'");
}

Outcome run_dna_mu(const Scenario& s, const ReportProfile& r) {
  return make_mechanism("dna-mu")->run(s, r);
}
Outcome run_dna_mu_r(const Scenario& s, const ReportProfile& r) {
  return make_mechanism("dna-mu-r")->run(s, r);
}
Outcome run_vcg(const Scenario& s, const ReportProfile& r) {
  return make_mechanism("vcg")->run(s, r);
}
Outcome run_vcg_rm(const Scenario& s, const ReportProfile& r) {
  return make_mechanism("vcg-rm")->run(s, r);
}
Outcome run_net_sqrt_k_apm(const Scenario& s, const ReportProfile& r) {
  return make_mechanism("net-sqrt-k-apm")->run(s, r);
}
Outcome run_nsa(const Scenario& s, const ReportProfile& r) {
  return make_mechanism("nsa")->run(s, r);
}

PaymentDecomposition id_mon_rm_payment(const AllocationRule& rule, const Scenario& scenario,
                                       const ReportProfile& reports) {
  return decompose(rule, scenario, reports, PaymentFormula::id_mon_rm(), true, false);
}

PaymentDecomposition ip_mon_rm_payment(const AllocationRule& rule, const Scenario& scenario,
                                       const ReportProfile& reports) {
  return decompose(rule, scenario, reports, PaymentFormula::ip_mon_rm(), false, true);
}

PaymentDecomposition polynomial_payment_family(const AllocationRule& rule,
                                               const Scenario& scenario,
                                               const ReportProfile& reports,
                                               const Rational& alpha, const Rational& beta,
                                               const Rational& gamma, MonotoneClass cls) {
  if (sgn(alpha) < 0 || sgn(beta) < 0 || sgn(gamma) < 0) {
    throw std::invalid_argument("payment coefficients must be nonnegative");
  }
  const PaymentFormula formula{cls, alpha, beta, gamma};
  return decompose(rule, scenario, reports, formula, cls == MonotoneClass::id,
                   cls == MonotoneClass::ip);
}

}  // namespace netauction
