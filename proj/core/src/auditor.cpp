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

#include "netauction/auditor.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "netauction/errors.hpp"

namespace netauction {
namespace {

bool proper_subset(const std::vector<AgentId>& a, const std::vector<AgentId>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool shorter_then_lexicographic(const std::vector<AgentId>& a, const std::vector<AgentId>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Real> real_candidates(const Scenario& scenario, AgentId agent) {
  std::vector<Real> out{Real(0), Real(scenario.bid(agent))};
  const bool ranked = scenario.mode() == Mode::single_minded;
  for (std::uint32_t j = 0; j < scenario.agent_count(); ++j) {
    if (j == agent.value) continue;
    const Real v(scenario.bid(AgentId{j}));
    out.push_back(v);
    if (ranked) {
      const auto si = scenario.bundle_size(agent);
      const auto sj = scenario.bundle_size(AgentId{j});
      if (si != sj) out.push_back(v * Real::sqrt_ratio(si, sj));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string scope_label(const AuditConfig& config) {
  if (config.opponent_samples == 0) return "truthful opponents";
  return "truthful opponents + " + std::to_string(config.opponent_samples) +
         " sampled opponent profiles";
}

Real utility(const Scenario& scenario, AgentId agent, const AgentResult& r) {
  Real u = -r.payment;
  if (r.won) u += Real(scenario.bid(agent));
  return u;
}

std::string describe_invites(const Scenario& scenario, const std::vector<AgentId>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += scenario.name(set[i]);
  }
  return out + "}";
}

std::string show(const std::optional<Real>& v) { return v ? v->to_string() : "unbounded"; }

struct Plan {
  AgentId agent;
  std::vector<ReportProfile> opponents;
  DeviationSpace space;
};

struct Planned {
  std::vector<Plan> plans;
  Coverage coverage = Coverage::certified;
};

// evaluations_per_space estimates the mechanism calls one (opponent, space)
// pair costs.
Planned make_plans(const Scenario& scenario, const AuditConfig& config,
                   const std::function<std::size_t(const DeviationSpace&)>& evaluations_per_space) {
  Planned out;
  std::size_t total = 0;
  for (AgentId a : audit_order(scenario)) {
    Plan p{a, opponent_profiles(scenario, a, config), build_deviation_space(scenario, a, config)};
    if (!p.space.exhaustive) out.coverage = Coverage::sampled;
    total += p.opponents.size() * evaluations_per_space(p.space);
    if (total > config.budget) {
      throw SpaceTooLarge("deviation space needs more than " + std::to_string(config.budget) +
                          " evaluations");
    }
    out.plans.push_back(std::move(p));
  }
  return out;
}

std::size_t full_product(const DeviationSpace& s) {
  return s.invite_candidates.size() * (s.bid_candidates.size() + 1);
}
std::size_t invites_only(const DeviationSpace& s) { return s.invite_candidates.size(); }
std::size_t invites_plus_bids(const DeviationSpace& s) {
  return s.invite_candidates.size() + s.bid_candidates.size();
}

AuditVerdict start(Axiom axiom, const Planned& planned, const AuditConfig& config) {
  AuditVerdict v;
  v.axiom = axiom;
  v.coverage = planned.coverage;
  v.opponent_scope = scope_label(config);
  return v;
}

void fail(AuditVerdict& v, Witness w) {
  v.pass = false;
  v.witness = std::move(w);
}

// Truthful bid first, then the grid.
std::vector<Rational> bids_with_truth_first(const Scenario& scenario, AgentId agent,
                                            const DeviationSpace& space) {
  std::vector<Rational> out{scenario.bid(agent)};
  for (const auto& b : space.bid_candidates) {
    if (b != scenario.bid(agent)) out.push_back(b);
  }
  return out;
}

// Allocation table f[invite set][bid] for one opponent profile.
std::vector<std::vector<char>> allocation_table(const AllocationRule& rule,
                                                const Scenario& scenario,
                                                const ReportProfile& profile, AgentId agent,
                                                const DeviationSpace& space,
                                                const std::vector<Rational>& bids) {
  std::vector<std::vector<char>> table;
  for (const auto& r : space.invite_candidates) {
    AgentProbe probe(rule, scenario, profile.with_invites(agent, r), agent);
    std::vector<char> row;
    row.reserve(bids.size());
    for (const auto& b : bids) row.push_back(probe.wins(BidPoint{Real(b), false}) ? 1 : 0);
    table.push_back(std::move(row));
  }
  return table;
}

// Finds b < b' in ascending order where the agent wins at b and loses at b'.
std::optional<std::pair<std::size_t, std::size_t>> monotonicity_break(
    const std::vector<char>& wins_ascending) {
  for (std::size_t w = 0; w < wins_ascending.size(); ++w) {
    if (!wins_ascending[w]) continue;
    for (std::size_t l = w + 1; l < wins_ascending.size(); ++l) {
      if (!wins_ascending[l]) return std::make_pair(w, l);
    }
    break;
  }
  return std::nullopt;
}

AuditVerdict audit_invitation_monotone(Axiom axiom, const AllocationRule& rule,
                                       const Scenario& scenario, const AuditConfig& config) {
  rule.require_mode(scenario);
  Planned planned = make_plans(scenario, config, full_product);
  AuditVerdict verdict = start(axiom, planned, config);
  const bool depressed = axiom == Axiom::id_mon;
  for (const Plan& plan : planned.plans) {
    const AgentId a = plan.agent;
    const auto& sets = plan.space.invite_candidates;
    // Index 0 is the truthful bid; the rest follow the ascending grid.
    const auto bids = bids_with_truth_first(scenario, a, plan.space);
    for (const ReportProfile& opp : plan.opponents) {
      const auto table = allocation_table(rule, scenario, opp, a, plan.space, bids);
      verdict.checks += sets.size() * bids.size();
      for (std::size_t b = 0; b < bids.size(); ++b) {
        for (std::size_t s1 = 0; s1 < sets.size(); ++s1) {
          for (std::size_t s2 = 0; s2 < sets.size(); ++s2) {
            if (!proper_subset(sets[s1], sets[s2])) continue;
            const int f1 = table[s1][b];
            const int f2 = table[s2][b];
            if (depressed ? f1 >= f2 : f1 <= f2) continue;
            Witness w;
            w.agent = a;
            w.reference = opp.with_invites(a, sets[s1]).with_bid(a, bids[b]);
            w.deviation = opp.with_invites(a, sets[s2]).with_bid(a, bids[b]);
            w.reference_value = Real(f1);
            w.deviation_value = Real(f2);
            w.description = scenario.name(a) + " at bid " + format_rational(bids[b]) +
                            ": f(" + describe_invites(scenario, sets[s1]) + ") = " +
                            std::to_string(f1) + ", f(" +
                            describe_invites(scenario, sets[s2]) + ") = " + std::to_string(f2);
            fail(verdict, std::move(w));
            return verdict;
          }
        }
      }
      // Value monotonicity on the ascending part of the grid.
      for (std::size_t s = 0; s < sets.size(); ++s) {
        std::vector<char> ascending;
        std::vector<Rational> grid;
        for (const auto& g : plan.space.bid_candidates) {
          const auto pos = std::find(bids.begin(), bids.end(), g) - bids.begin();
          ascending.push_back(table[s][static_cast<std::size_t>(pos)]);
          grid.push_back(g);
        }
        if (auto br = monotonicity_break(ascending)) {
          Witness w;
          w.agent = a;
          w.reference = opp.with_invites(a, sets[s]).with_bid(a, grid[br->first]);
          w.deviation = opp.with_invites(a, sets[s]).with_bid(a, grid[br->second]);
          w.reference_value = Real(1);
          w.deviation_value = Real(0);
          w.description = scenario.name(a) + " wins at " + format_rational(grid[br->first]) +
                          " but loses at " + format_rational(grid[br->second]);
          fail(verdict, std::move(w));
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::ir: return "IR";
    case Axiom::sp: return "SP";
    case Axiom::wbb: return "WBB";
    case Axiom::value_mon: return "VALUE_MON";
    case Axiom::inv_mon_payment: return "INV_MON_PAYMENT";
    case Axiom::bid_indep: return "BID_INDEP";
    case Axiom::id_mon: return "ID_MON";
    case Axiom::ip_mon: return "IP_MON";
    case Axiom::degenerated: return "DEGENERATED";
    case Axiom::thm1_cond3: return "THM1_COND3";
    case Axiom::thm1_cond4: return "THM1_COND4";
  }
  return "?";
}

std::string_view to_string(Coverage coverage) {
  return coverage == Coverage::certified ? "certified" : "sampled";
}

AuditConfig AuditConfig::from_environment() {
  AuditConfig config;
  if (const char* env = std::getenv("NETAUCTION_AUDIT_BUDGET"); env != nullptr && *env) {
    try {
      config.budget = static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("NETAUCTION_AUDIT_BUDGET is not a number: " + std::string(env));
    }
  }
  return config;
}

DeviationSpace build_deviation_space(const Scenario& scenario, AgentId agent,
                                     const AuditConfig& config) {
  DeviationSpace space;
  space.agent = agent;

  const auto candidates = real_candidates(scenario, agent);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (candidates[c].is_rational()) space.bid_candidates.push_back(candidates[c].rational_part());
    if (c + 1 < candidates.size()) {
      space.bid_candidates.push_back(rational_between(candidates[c], candidates[c + 1]));
    }
  }
  space.bid_candidates.push_back(rational_above(candidates.back()));
  std::sort(space.bid_candidates.begin(), space.bid_candidates.end());
  space.bid_candidates.erase(
      std::unique(space.bid_candidates.begin(), space.bid_candidates.end()),
      space.bid_candidates.end());

  std::vector<AgentId> nbrs = scenario.neighbors(agent);
  std::sort(nbrs.begin(), nbrs.end());
  const std::size_t d = nbrs.size();
  auto pick = [&](std::uint64_t mask) {
    std::vector<AgentId> out;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1U) out.push_back(nbrs[i]);
    }
    return out;
  };
  if (d <= config.full_enumeration_degree) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      space.invite_candidates.push_back(pick(mask));
    }
  } else {
    space.exhaustive = false;
    std::set<std::vector<AgentId>> chosen{nbrs, {}};
    for (std::size_t skip = 0; skip < d; ++skip) {
      std::vector<AgentId> s = nbrs;
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(skip));
      chosen.insert(std::move(s));
    }
    std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ULL * (agent.value + 1)));
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < config.sampled_invite_sets; ++i) {
      std::vector<AgentId> s;
      for (AgentId n : nbrs) {
        if (coin(rng)) s.push_back(n);
      }
      chosen.insert(std::move(s));
    }
    space.invite_candidates.assign(chosen.begin(), chosen.end());
  }
  std::sort(space.invite_candidates.begin(), space.invite_candidates.end(),
            shorter_then_lexicographic);
  return space;
}

std::vector<ReportProfile> opponent_profiles(const Scenario& scenario, AgentId agent,
                                             const AuditConfig& config) {
  const ReportProfile truthful = ReportProfile::truthful(scenario);
  std::vector<ReportProfile> out{truthful};
  std::mt19937_64 rng(config.seed + 7919 * (agent.value + 1));
  std::bernoulli_distribution keep(0.7);
  for (std::size_t s = 0; s < config.opponent_samples; ++s) {
    ReportProfile p = truthful;
    for (std::uint32_t j = 0; j < scenario.agent_count(); ++j) {
      if (j == agent.value) continue;
      std::vector<AgentId> kept;
      for (AgentId n : p.invites[j]) {
        if (keep(rng)) kept.push_back(n);
      }
      p.invites[j] = std::move(kept);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<AgentId> audit_order(const Scenario& scenario) {
  const auto market = build_effective_market(scenario, ReportProfile::truthful(scenario));
  std::vector<AgentId> out = market.priority().sequence;
  for (std::uint32_t j = 0; j < scenario.agent_count(); ++j) {
    if (!market.contains(AgentId{j})) out.push_back(AgentId{j});
  }
  return out;
}

AuditVerdict audit_ir(const Mechanism& mechanism, const Scenario& scenario,
                      const AuditConfig& config) {
  mechanism.require_mode(scenario);
  Planned planned = make_plans(scenario, config, invites_only);
  AuditVerdict verdict = start(Axiom::ir, planned, config);
  for (const Plan& plan : planned.plans) {
    const AgentId a = plan.agent;
    const Rational truth[] = {scenario.bid(a)};
    for (const ReportProfile& opp : plan.opponents) {
      for (const auto& r : plan.space.invite_candidates) {
        const ReportProfile prof = opp.with_invites(a, r);
        const auto res = mechanism.evaluate_agent(scenario, prof, a, truth);
        ++verdict.checks;
        const Real u = utility(scenario, a, res[0]);
        if (u.sign() >= 0) continue;
        Witness w;
        w.agent = a;
        w.reference = opp;
        w.deviation = prof;
        w.reference_value = Real(0);
        w.deviation_value = u;
        w.description = scenario.name(a) + " bids truthfully, invites " +
                        describe_invites(scenario, r) + ", utility " + u.to_string();
        fail(verdict, std::move(w));
        return verdict;
      }
    }
  }
  return verdict;
}

AuditVerdict audit_sp(const Mechanism& mechanism, const Scenario& scenario,
                      const AuditConfig& config) {
  mechanism.require_mode(scenario);
  Planned planned = make_plans(scenario, config, full_product);
  AuditVerdict verdict = start(Axiom::sp, planned, config);
  for (const Plan& plan : planned.plans) {
    const AgentId a = plan.agent;
    const auto bids = bids_with_truth_first(scenario, a, plan.space);
    const Rational truth[] = {scenario.bid(a)};
    for (const ReportProfile& opp : plan.opponents) {
      const Real u0 = utility(scenario, a, mechanism.evaluate_agent(scenario, opp, a, truth)[0]);
      for (const auto& r : plan.space.invite_candidates) {
        const ReportProfile prof = opp.with_invites(a, r);
        const auto res = mechanism.evaluate_agent(scenario, prof, a, bids);
        verdict.checks += res.size();
        for (std::size_t b = 0; b < res.size(); ++b) {
          const Real u = utility(scenario, a, res[b]);
          if (u <= u0) continue;
          Witness w;
          w.agent = a;
          w.reference = opp;
          w.deviation = prof.with_bid(a, bids[b]);
          w.reference_value = u0;
          w.deviation_value = u;
          w.description = scenario.name(a) + " reports bid " + format_rational(bids[b]) +
                          " and invites " + describe_invites(scenario, r) + ": utility " +
                          u0.to_string() + " -> " + u.to_string();
          fail(verdict, std::move(w));
          return verdict;
        }
      }
    }
  }
  return verdict;
}

AuditVerdict audit_wbb(const Mechanism& mechanism, const Scenario& scenario,
                       const AuditConfig& config) {
  mechanism.require_mode(scenario);
  Planned planned = make_plans(scenario, config, invites_plus_bids);
  AuditVerdict verdict = start(Axiom::wbb, planned, config);
  auto check = [&](const ReportProfile& prof, AgentId a, const std::string& what) {
    const Outcome o = mechanism.run(scenario, prof);
    ++verdict.checks;
    if (o.revenue.sign() >= 0) return false;
    Witness w;
    w.agent = a;
    w.reference = prof;
    w.deviation = prof;
    w.reference_value = Real(0);
    w.deviation_value = o.revenue;
    w.description = what + ": revenue " + o.revenue.to_string();
    fail(verdict, std::move(w));
    return true;
  };
  std::set<std::vector<std::vector<AgentId>>> seen_bases;
  for (const Plan& plan : planned.plans) {
    const AgentId a = plan.agent;
    for (const ReportProfile& opp : plan.opponents) {
      if (seen_bases.insert(opp.invites).second && check(opp, a, "reported profile")) {
        return verdict;
      }
      for (const auto& r : plan.space.invite_candidates) {
        if (r == opp.invites[a.value]) continue;
        if (check(opp.with_invites(a, r), a,
                  scenario.name(a) + " invites " + describe_invites(scenario, r))) {
          return verdict;
        }
      }
      for (const auto& b : plan.space.bid_candidates) {
        if (b == scenario.bid(a)) continue;
        if (check(opp.with_bid(a, b), a, scenario.name(a) + " bids " + format_rational(b))) {
          return verdict;
        }
      }
    }
  }
  return verdict;
}

AuditVerdict audit_value_monotone(const AllocationRule& rule, const Scenario& scenario,
                                  const AuditConfig& config) {
  rule.require_mode(scenario);
  Planned planned = make_plans(scenario, config, full_product);
  AuditVerdict verdict = start(Axiom::value_mon, planned, config);
  for (const Plan& plan : planned.plans) {
    const AgentId a = plan.agent;
    const auto& grid = plan.space.bid_candidates;
    for (const ReportProfile& opp : plan.opponents) {
      const auto table = allocation_table(rule, scenario, opp, a, plan.space, grid);
      verdict.checks += table.size() * grid.size();
      for (std::size_t s = 0; s < table.size(); ++s) {
        auto br = monotonicity_break(table[s]);
        if (!br) continue;
        const auto& r = plan.space.invite_candidates[s];
        Witness w;
        w.agent = a;
        w.reference = opp.with_invites(a, r).with_bid(a, grid[br->first]);
        w.deviation = opp.with_invites(a, r).with_bid(a, grid[br->second]);
        w.reference_value = Real(1);
        w.deviation_value = Real(0);
        w.description = scenario.name(a) + " wins at " + format_rational(grid[br->first]) +
                        " but loses at " + format_rational(grid[br->second]) +
                        " with invites " + describe_invites(scenario, r);
        fail(verdict, std::move(w));
        return verdict;
      }
    }
  }
  return verdict;
}

AuditVerdict audit_id_mon(const AllocationRule& rule, const Scenario& scenario,
                          const AuditConfig& config) {
  return audit_invitation_monotone(Axiom::id_mon, rule, scenario, config);
}

AuditVerdict audit_ip_mon(const AllocationRule& rule, const Scenario& scenario,
                          const AuditConfig& config) {
  return audit_invitation_monotone(Axiom::ip_mon, rule, scenario, config);
}

std::vector<AuditVerdict> audit_payment_axioms(const Mechanism& mechanism,
                                               const Scenario& scenario,
                                               const AuditConfig& config) {
  mechanism.require_mode(scenario);
  Planned planned = make_plans(scenario, config, full_product);
  AuditVerdict indep = start(Axiom::bid_indep, planned, config);
  AuditVerdict invmon = start(Axiom::inv_mon_payment, planned, config);
  AuditVerdict cond3 = start(Axiom::thm1_cond3, planned, config);
  AuditVerdict cond4 = start(Axiom::thm1_cond4, planned, config);

  for (const Plan& plan : planned.plans) {
    const AgentId a = plan.agent;
    const auto& grid = plan.space.bid_candidates;
    const auto& sets = plan.space.invite_candidates;
    for (const ReportProfile& opp : plan.opponents) {
      std::vector<std::optional<Real>> win_pay(sets.size());
      std::vector<std::optional<Real>> lose_pay(sets.size());
      for (std::size_t s = 0; s < sets.size(); ++s) {
        const ReportProfile prof = opp.with_invites(a, sets[s]);
        const auto res = mechanism.evaluate_agent(scenario, prof, a, grid);
        std::optional<std::size_t> first_win;
        std::optional<std::size_t> first_loss;
        for (std::size_t b = 0; b < res.size(); ++b) {
          auto& first = res[b].won ? first_win : first_loss;
          ++indep.checks;
          if (!first) {
            first = b;
            continue;
          }
          if (res[b].payment == res[*first].payment || !indep.pass) continue;
          Witness w;
          w.agent = a;
          w.reference = prof.with_bid(a, grid[*first]);
          w.deviation = prof.with_bid(a, grid[b]);
          w.reference_value = res[*first].payment;
          w.deviation_value = res[b].payment;
          w.description = scenario.name(a) + std::string(res[b].won ? " wins" : " loses") +
                          " at bids " + format_rational(grid[*first]) + " and " +
                          format_rational(grid[b]) + " but pays " +
                          res[*first].payment.to_string() + " vs " + res[b].payment.to_string();
          fail(indep, std::move(w));
        }
        const CriticalBid vstar =
            critical_bid_exact(mechanism.allocation_rule(), scenario, opp, a, sets[s]);
        if (first_win) win_pay[s] = res[*first_win].payment;
        if (first_loss) {
          lose_pay[s] = res[*first_loss].payment;
        } else if (win_pay[s] && !vstar.is_unbounded()) {
          // Never loses: the identity fixes the losing payment.
          lose_pay[s] = *win_pay[s] - vstar.value();
        }

        ++cond3.checks;
        bool holds;
        if (vstar.is_unbounded()) {
          holds = !win_pay[s].has_value();
        } else {
          holds = win_pay[s] && lose_pay[s] && *win_pay[s] - *lose_pay[s] == vstar.value();
        }
        if (!holds && cond3.pass) {
          Witness w;
          w.agent = a;
          w.reference = prof;
          w.deviation = prof;
          w.reference_value = win_pay[s] && lose_pay[s]
                                  ? std::optional<Real>(*win_pay[s] - *lose_pay[s])
                                  : std::nullopt;
          w.deviation_value =
              vstar.is_unbounded() ? std::nullopt : std::optional<Real>(vstar.value());
          w.description = scenario.name(a) + " with invites " +
                          describe_invites(scenario, sets[s]) + ": winning " +
                          show(win_pay[s]) + " minus losing " + show(lose_pay[s]) +
                          " differs from critical bid " + vstar.to_string();
          fail(cond3, std::move(w));
        }
        if (sets[s].empty()) {
          ++cond4.checks;
          if (lose_pay[s] && lose_pay[s]->sign() > 0 && cond4.pass) {
            Witness w;
            w.agent = a;
            w.reference = prof;
            w.deviation = prof;
            w.reference_value = Real(0);
            w.deviation_value = lose_pay[s];
            w.description = scenario.name(a) + " invites nobody and the losing payment is " +
                            lose_pay[s]->to_string();
            fail(cond4, std::move(w));
          }
        }
      }

      // Unbounded compares above everything.
      auto at_least = [](const std::optional<Real>& x, const std::optional<Real>& y) {
        if (!x) return true;
        if (!y) return false;
        return *x >= *y;
      };
      for (std::size_t s1 = 0; s1 < sets.size() && invmon.pass; ++s1) {
        for (std::size_t s2 = 0; s2 < sets.size() && invmon.pass; ++s2) {
          if (!proper_subset(sets[s1], sets[s2])) continue;
          ++invmon.checks;
          const bool win_ok = at_least(win_pay[s1], win_pay[s2]);
          const bool lose_ok = at_least(lose_pay[s1], lose_pay[s2]);
          if (win_ok && lose_ok) continue;
          const auto& p1 = win_ok ? lose_pay[s1] : win_pay[s1];
          const auto& p2 = win_ok ? lose_pay[s2] : win_pay[s2];
          Witness w;
          w.agent = a;
          w.reference = opp.with_invites(a, sets[s1]);
          w.deviation = opp.with_invites(a, sets[s2]);
          w.reference_value = p1;
          w.deviation_value = p2;
          w.description = std::string(win_ok ? "losing" : "winning") + " payment of " +
                          scenario.name(a) + ": " + show(p1) + " at " +
                          describe_invites(scenario, sets[s1]) + " vs " + show(p2) + " at " +
                          describe_invites(scenario, sets[s2]);
          fail(invmon, std::move(w));
        }
      }
    }
  }
  return {indep, invmon, cond3, cond4};
}

AuditVerdict audit_degenerated(const Mechanism& mechanism, const Scenario& scenario,
                               const AuditConfig& config) {
  mechanism.require_mode(scenario);
  Planned planned = make_plans(scenario, config, invites_only);
  AuditVerdict verdict = start(Axiom::degenerated, planned, config);
  for (const Plan& plan : planned.plans) {
    const AgentId a = plan.agent;
    const Rational truth[] = {scenario.bid(a)};
    for (const ReportProfile& opp : plan.opponents) {
      const Real u0 = utility(scenario, a, mechanism.evaluate_agent(scenario, opp, a, truth)[0]);
      for (const auto& r : plan.space.invite_candidates) {
        const ReportProfile prof = opp.with_invites(a, r);
        const Real u = utility(scenario, a, mechanism.evaluate_agent(scenario, prof, a, truth)[0]);
        ++verdict.checks;
        if (u == u0) continue;
        Witness w;
        w.agent = a;
        w.reference = opp;
        w.deviation = prof;
        w.reference_value = u0;
        w.deviation_value = u;
        w.description = scenario.name(a) + " utility " + u0.to_string() + " with reported invites, " +
                        u.to_string() + " with " + describe_invites(scenario, r);
        fail(verdict, std::move(w));
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace netauction
