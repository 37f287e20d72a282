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


// One PASS/FAIL line per acceptance criterion. Exits nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "netauction/allocation.hpp"
#include "netauction/auditor.hpp"
#include "netauction/bid_engine.hpp"
#include "netauction/errors.hpp"
#include "netauction/market.hpp"
#include "netauction/mechanisms.hpp"
#include "netauction/random_market.hpp"
#include "netauction/scenario_io.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "test_support.hpp"

namespace netauction {
namespace {

using testing::fixture;
using testing::payment_map;
using testing::winner_names;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kTraceSeconds = 1.0;
constexpr double kCertificationSeconds = 300.0;
constexpr std::size_t kRandomMarkets = 200;
constexpr std::size_t kRandomMaxAgents = 7;
constexpr std::uint64_t kUnitSeed = 1000;
constexpr std::uint64_t kSingleSeed = 5000;
constexpr std::size_t kPropertyCases = 500;
const Rational kBisectTol(1, 1024);

// Keeps the first failure and counts the rest.
struct Result {
  bool pass = true;
  std::size_t failures = 0;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
    ++failures;
  }

  std::string summary() const {
    if (pass || failures == 1) return detail;
    return std::to_string(failures) + " failures; first: " + detail;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out + "}";
}

struct Row {
  std::size_t left;
  std::vector<std::string> before;
  std::string agent;  // empty on the finished row
  bool won;
  Rational payment;
};

// Compares the rendered trace row by row.
void expect_trace(Result& res, const Scenario& s, const std::string& mechanism,
                  const ReportProfile& r, const std::vector<Row>& rows,
                  const std::vector<std::string>& winners,
                  const std::map<std::string, std::string>& payments) {
  const Outcome o = make_mechanism(mechanism)->run(s, r);
  const ResultReport report = make_report(s, mechanism, o);
  res.require(winner_names(s, o) == winners,
              mechanism + " winners " + join(winner_names(s, o)) + ", want " + join(winners));
  const auto got = payment_map(s, o);
  for (const auto& [name, p] : payments) {
    res.require(got.at(name) == p, mechanism + " payment of " + name + " is " + got.at(name) +
                                       ", want " + p);
  }
  for (const auto& [name, p] : got) {
    if (!payments.count(name)) res.require(p == "0", mechanism + " charges " + name + " " + p);
  }
  res.require(report.trace.size() == rows.size(),
              mechanism + " trace has " + std::to_string(report.trace.size()) + " rows, want " +
                  std::to_string(rows.size()));
  for (std::size_t i = 0; i < rows.size() && i < report.trace.size(); ++i) {
    const TraceRow& t = report.trace[i];
    const Row& want = rows[i];
    const std::string at = mechanism + " trace row " + std::to_string(i + 1);
    res.require(t.left == want.left, at + ": left");
    res.require(testing::names(s, t.winners) == want.before, at + ": W");
    res.require(t.finished == want.agent.empty(), at + ": finished flag");
    if (t.finished || want.agent.empty()) continue;
    res.require(s.name(t.agent) == want.agent, at + ": agent " + s.name(t.agent));
    res.require(t.won == want.won, at + ": f");
    res.require(t.payment == Real(want.payment), at + ": p " + t.payment.to_string());
  }
}

Result criterion1() {
  Result res;
  const auto t0 = Clock::now();
  const Scenario s = fixture("fig1");
  expect_trace(res, s, "dna-mu", ReportProfile::truthful(s),
               {{3, {}, "A", false, 0},
                {3, {}, "B", true, 0},
                {2, {"B"}, "F", true, 5},
                {1, {"B", "F"}, "C", true, 4},
                {0, {"B", "F", "C"}, "", false, 0}},
               {"B", "F", "C"}, {{"B", "0"}, {"F", "5"}, {"C", "4"}});
  expect_trace(res, s, "dna-mu", testing::without_invites(s, "D"),
               {{3, {}, "A", true, 4},
                {2, {"A"}, "B", true, 0},
                {1, {"A", "B"}, "F", false, 0},
                {1, {"A", "B"}, "C", false, 0},
                {1, {"A", "B"}, "D", true, 6},
                {0, {"A", "B", "D"}, "", false, 0}},
               {"A", "B", "D"}, {{"A", "4"}, {"B", "0"}, {"D", "6"}});
  const double t = seconds_since(t0);
  res.require(t < kTraceSeconds, "took " + std::to_string(t) + " s");
  if (res.pass) res.detail = "truthful and D-withholding traces match in " + std::to_string(t) + " s";
  return res;
}

Result criterion2() {
  Result res;
  const Scenario s = fixture("fig1");
  expect_trace(res, s, "dna-mu-r", ReportProfile::truthful(s),
               {{3, {}, "A", false, 0},
                {3, {}, "B", true, 0},
                {2, {"B"}, "F", true, 4},
                {1, {"B", "F"}, "C", true, 1},
                {0, {"B", "F", "C"}, "", false, 0}},
               {"B", "F", "C"}, {{"B", "0"}, {"F", "4"}, {"C", "1"}});
  expect_trace(res, s, "dna-mu-r", testing::without_invites(s, "D"),
               {{3, {}, "A", true, 4},
                {2, {"A"}, "B", true, 0},
                {1, {"A", "B"}, "F", true, 4},
                {0, {"A", "B", "F"}, "", false, 0}},
               {"A", "B", "F"}, {{"A", "4"}, {"B", "0"}, {"F", "4"}});
  if (res.pass) res.detail = "truthful and D-withholding traces match";
  return res;
}

void expect_sp_witness_d(Result& res, const Scenario& s, const std::string& label) {
  const AuditVerdict v = audit_sp(*make_mechanism("dna-mu"), s);
  res.require(!v.pass, label + ": SP passes");
  if (v.pass) return;
  const Witness& w = *v.witness;
  const AgentId d = s.id("D");
  res.require(w.agent == d, label + ": witness agent " + s.name(w.agent));
  res.require(w.deviation.invites[d.value].empty(), label + ": D still invites");
  res.require(w.deviation.bids == ReportProfile::truthful(s).bids, label + ": bids changed");
  res.require(w.reference == ReportProfile::truthful(s), label + ": reference not truthful");
  res.require(w.reference_value == Real(0) && w.deviation_value == Real(1),
              label + ": utilities " + w.description);
}

Result criterion3() {
  Result res;
  const Scenario base = fixture("fig1");
  expect_sp_witness_d(res, base, "k=3");
  for (std::size_t k : {4, 5, 6}) {
    expect_sp_witness_d(res, with_dummy_bidders(base, k, 8), "k=" + std::to_string(k));
  }
  if (res.pass) res.detail = "witness D, r'_D = {}, utility 0 -> 1 for k = 3..6";
  return res;
}

// SP and IR over fixtures and the random suites.
Result criterion4() {
  Result res;
  const auto t0 = Clock::now();
  std::size_t audits = 0;
  std::map<std::string, std::size_t> failed_by_mechanism;
  auto certify = [&](const std::string& id, const Scenario& s, const std::string& label) {
    const auto m = make_mechanism(id);
    for (const AuditVerdict& v : {audit_sp(*m, s), audit_ir(*m, s)}) {
      ++audits;
      failed_by_mechanism[id] += v.pass ? 0 : 1;
      res.require(v.coverage == Coverage::certified, id + " on " + label + ": sampled coverage");
      res.require(v.pass, id + " " + std::string(to_string(v.axiom)) + " fails on " + label +
                              ": " + (v.pass ? "" : v.witness->description));
    }
  };
  for (const char* f : {"fig1", "fig8"}) {
    for (const char* id : {"dna-mu-r", "vcg-rm"}) certify(id, fixture(f), f);
  }
  for (const char* f : {"fig10", "fig11"}) {
    for (const char* id : {"net-sqrt-k-apm", "nsa"}) certify(id, fixture(f), f);
  }
  const auto unit = property::random_suite(Mode::unit_demand, kRandomMarkets, kUnitSeed,
                                           kRandomMaxAgents);
  const auto single = property::random_suite(Mode::single_minded, kRandomMarkets, kSingleSeed,
                                             kRandomMaxAgents);
  for (std::size_t i = 0; i < kRandomMarkets; ++i) {
    const std::string u = "unit-demand market " + std::to_string(i);
    const std::string m = "single-minded market " + std::to_string(i);
    for (const char* id : {"dna-mu-r", "vcg-rm"}) certify(id, unit[i], u);
    for (const char* id : {"net-sqrt-k-apm", "nsa"}) certify(id, single[i], m);
  }
  const double t = seconds_since(t0);
  res.require(t < kCertificationSeconds, "took " + std::to_string(t) + " s");
  std::string tally;
  for (const auto& [id, n] : failed_by_mechanism) {
    tally += (tally.empty() ? "" : ", ") + id + " " + std::to_string(n);
  }
  if (res.pass) res.detail = std::to_string(audits) + " certified audits in " + std::to_string(t) + " s";
  res.detail += " (failed audits per mechanism: " + tally + ")";
  return res;
}

Result criterion5() {
  Result res;
  const Scenario s = fixture("fig8");
  const ReportProfile r = ReportProfile::truthful(s);
  struct Want {
    const char* id;
    Real sw;
    Real rev;
    std::vector<std::string> winners;
    std::map<std::string, std::string> payments;
  };
  const std::vector<Want> table = {
      {"vcg", 109, -203, {"D", "E", "I"},
       {{"A", "0"}, {"B", "-104"}, {"C", "-103"}, {"D", "-2"}, {"E", "3"}, {"H", "0"}, {"I", "3"}}},
      {"vcg-rm", 109, 1, {"D", "E", "I"},
       {{"A", "0"}, {"B", "-4"}, {"C", "-3"}, {"D", "2"}, {"E", "3"}, {"H", "0"}, {"I", "3"}}},
      {"dna-mu-r", 103, 4, {"B", "C", "D"},
       {{"A", "0"}, {"B", "0"}, {"C", "1"}, {"D", "3"}, {"E", "0"}, {"H", "0"}, {"I", "0"}}},
  };
  for (const Want& w : table) {
    const Outcome o = make_mechanism(w.id)->run(s, r);
    const std::string id = w.id;
    res.require(o.social_welfare == w.sw, id + " SW " + o.social_welfare.to_string());
    res.require(o.revenue == w.rev, id + " Rev " + o.revenue.to_string());
    auto got = winner_names(s, o);
    std::sort(got.begin(), got.end());
    res.require(got == w.winners, id + " winners " + join(got));
    res.require(payment_map(s, o) == w.payments, id + " payment vector differs");
  }
  if (res.pass) res.detail = "rows VCG, VCG-RM, DNA-MU-R match";
  return res;
}

Result criterion6() {
  Result res;
  const Scenario s = fixture("fig7");
  const auto rule = make_dna_mu_r_allocation();
  const ReportProfile r = ReportProfile::truthful(s);
  const AgentId d = s.id("D");
  const CriticalBid c = critical_bid_exact(*rule, s, r, d, r.invites[d.value]);
  res.require(!c.is_unbounded(), "critical bid unbounded");
  if (!res.pass) return res;
  res.require(c.value() == Real(3), "critical bid " + c.to_string());
  res.require(!c.attained(), "critical bid attained");
  const auto m = make_mechanism("dna-mu-r");
  const Rational bids[] = {Rational(4), Rational(7), Rational(301, 100)};
  for (const auto& row : m->evaluate_agent(s, r, d, bids)) {
    res.require(row.won && row.payment == Real(3),
                "D's winning payment " + row.payment.to_string());
  }
  const Outcome o = m->run(s, r);
  res.require(o.won(d) && o.payment(d) == Real(3), "truthful run charges D " +
                                                       o.payment(d).to_string());
  const Rational b = critical_bid_bisect(*rule, s, r, d, r.invites[d.value], 100, kBisectTol);
  res.require(b >= 3 && b - 3 <= kBisectTol, "bisection " + format_rational(b));
  if (res.pass) res.detail = "v*_D = 3 (not attained), payment 3, bisection " + format_rational(b);
  return res;
}

void expect_pass(Result& res, const AuditVerdict& v, const std::string& label) {
  res.require(v.pass, label + " fails: " + (v.pass ? "" : v.witness->description));
}

void expect_fail_at(Result& res, const Scenario& s, const AuditVerdict& v,
                    const std::string& agent, const std::string& label) {
  res.require(!v.pass, label + " passes, want failure with witness " + agent);
  if (v.pass) return;
  res.require(v.witness->agent == s.id(agent),
              label + " witness " + s.name(v.witness->agent) + ", want " + agent);
}

Result criterion7() {
  Result res;
  const auto efficient = make_efficient_allocation();
  const auto greedy = make_greedy_sqrt_k_allocation();
  for (const char* f : {"fig1", "fig7", "fig8", "chain2"}) {
    expect_pass(res, audit_id_mon(*efficient, fixture(f)), std::string("ID-MON efficient ") + f);
    expect_pass(res, audit_ip_mon(*make_dna_mu_r_allocation(), fixture(f)),
                std::string("IP-MON dna-mu-r ") + f);
  }
  for (const char* f : {"fig10", "fig11", "single_item_chain"}) {
    expect_pass(res, audit_id_mon(*greedy, fixture(f)), std::string("ID-MON greedy ") + f);
    expect_pass(res, audit_ip_mon(*make_nsa_allocation(), fixture(f)),
                std::string("IP-MON nsa ") + f);
  }
  const Scenario fig10 = fixture("fig10");
  expect_fail_at(res, fig10, audit_ip_mon(*make_exploratory_i_allocation(), fig10), "B",
                 "IP-MON exploratory-1 fig10");
  const Scenario fig11 = fixture("fig11");
  expect_fail_at(res, fig11,
                 audit_ip_mon(*make_allocation_rule("exploratory-2"), fig11), "B",
                 "IP-MON exploratory-2 fig11");
  const Scenario chain = fixture("chain2");
  expect_fail_at(res, chain, audit_ip_mon(*efficient, chain), "A", "IP-MON efficient chain2");
  if (res.pass) res.detail = "all classifications and witnesses match";
  return res;
}

Result criterion8() {
  Result res;
  const Scenario s = fixture("fig1");
  const auto verdicts = audit_payment_axioms(*make_mechanism("dna-mu"), s);
  const AuditVerdict* inv = nullptr;
  for (const auto& v : verdicts) {
    if (v.axiom == Axiom::inv_mon_payment) inv = &v;
  }
  res.require(inv != nullptr, "no INV_MON_PAYMENT verdict");
  if (!res.pass) return res;
  res.require(!inv->pass, "INV_MON_PAYMENT passes");
  if (!res.pass) return res;
  const Witness& w = *inv->witness;
  const AgentId d = s.id("D");
  res.require(w.agent == d, "witness " + s.name(w.agent));
  res.require(w.reference.invites[d.value].empty(), "reference invites");
  res.require(w.deviation.invites[d.value] == std::vector<AgentId>{s.id("H")},
              "deviation invites");
  res.require(w.reference_value == Real(6), "reference payment");
  res.require(!w.deviation_value.has_value(), "deviation payment bounded");
  if (res.pass) res.detail = w.description;
  return res;
}

Result criterion9() {
  Result res;
  for (const char* f : {"fig1", "fig7", "fig8", "chain2", "empty"}) {
    expect_pass(res, audit_wbb(*make_mechanism("dna-mu-r"), fixture(f)),
                std::string("WBB dna-mu-r ") + f);
  }
  for (const char* f : {"fig10", "fig11", "single_item_chain", "rule2_counterexample"}) {
    expect_pass(res, audit_wbb(*make_mechanism("nsa"), fixture(f)), std::string("WBB nsa ") + f);
  }
  const auto unit = property::random_suite(Mode::unit_demand, kRandomMarkets, kUnitSeed,
                                           kRandomMaxAgents);
  const auto single = property::random_suite(Mode::single_minded, kRandomMarkets, kSingleSeed,
                                             kRandomMaxAgents);
  for (std::size_t i = 0; i < kRandomMarkets; ++i) {
    expect_pass(res, audit_wbb(*make_mechanism("dna-mu-r"), unit[i]),
                "WBB dna-mu-r random " + std::to_string(i));
    expect_pass(res, audit_wbb(*make_mechanism("nsa"), single[i]),
                "WBB nsa random " + std::to_string(i));
  }
  const AuditVerdict vcg = audit_wbb(*make_mechanism("vcg"), fixture("fig8"));
  res.require(!vcg.pass && vcg.witness->deviation_value == Real(-203),
              "VCG on fig8 does not report revenue -203");
  const AuditVerdict apm = audit_wbb(*make_mechanism("net-sqrt-k-apm"), fixture("single_item_chain"));
  res.require(!apm.pass && apm.witness->deviation_value->sign() < 0,
              "Net-sqrt-k-APM on the shared-bundle chain does not run a deficit");
  if (res.pass) {
    res.detail = "VCG fig8 revenue -203, Net-sqrt-k-APM chain revenue " +
                 apm.witness->deviation_value->to_string();
  }
  return res;
}

Result criterion10() {
  Result res;
  for (const char* f : {"fig10", "fig11"}) {
    expect_pass(res, audit_degenerated(*make_mechanism("nsa"), fixture(f)),
                std::string("degenerated nsa ") + f);
  }
  const auto single = property::random_suite(Mode::single_minded, kRandomMarkets, kSingleSeed,
                                             kRandomMaxAgents);
  for (std::size_t i = 0; i < kRandomMarkets; ++i) {
    expect_pass(res, audit_degenerated(*make_mechanism("nsa"), single[i]),
                "degenerated nsa random " + std::to_string(i));
  }
  // Both-monotone allocations paired with either revenue-maximizing payment.
  std::size_t both = 0;
  std::size_t undefined = 0;
  auto cross_check = [&](const Scenario& s, const std::string& label) {
    for (const auto& id : property::rules_for(s.mode())) {
      const auto rule = make_allocation_rule(id);
      if (!audit_id_mon(*rule, s).pass || !audit_ip_mon(*rule, s).pass) continue;
      ++both;
      for (const auto& [tag, formula] : {std::pair{"id-rm", PaymentFormula::id_mon_rm()},
                                         std::pair{"ip-rm", PaymentFormula::ip_mon_rm()}}) {
        const auto m = make_critical_payment_mechanism(id + "+" + tag, make_allocation_rule(id),
                                                       formula);
        try {
          expect_pass(res, audit_degenerated(*m, s), "degenerated " + id + "+" + tag + " " + label);
        } catch (const UnboundedPayment&) {
          // Some agent can never win, so the payment rule is undefined here.
          ++undefined;
        }
      }
    }
  };
  for (const char* f : {"fig1", "fig7", "fig8", "chain2", "empty", "fig10", "fig11",
                        "single_item_chain", "rule2_counterexample"}) {
    cross_check(fixture(f), f);
  }
  const auto unit = property::random_suite(Mode::unit_demand, kRandomMarkets, kUnitSeed,
                                           kRandomMaxAgents);
  for (std::size_t i = 0; i < kRandomMarkets; ++i) {
    cross_check(unit[i], "unit-demand random " + std::to_string(i));
    cross_check(single[i], "single-minded random " + std::to_string(i));
  }
  if (res.pass) {
    res.detail = "nsa degenerated everywhere; cross-check held on " + std::to_string(both) +
                 " both-monotone (rule, market) pairs; " + std::to_string(undefined) +
                 " pairings skipped because a payment needs an unbounded critical bid";
  }
  return res;
}

Result criterion11() {
  Result res;
  std::size_t cases = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;  // cases, violations
  auto note = [&](const char* suite, const property::Violation& v, const std::string& label) {
    ++cases;
    ++per_suite[suite].first;
    if (v) ++per_suite[suite].second;
    res.require(!v, label + ": " + v.value_or(""));
  };
  // Soundness: 100 markets per mode, every mechanism.
  for (Mode mode : {Mode::unit_demand, Mode::single_minded}) {
    const auto suite = property::random_suite(mode, 100, 20000 + 1000 * static_cast<int>(mode), 6);
    for (std::size_t i = 0; i < suite.size(); ++i) {
      for (const auto& id : property::mechanisms_for(mode)) {
        note("soundness", property::monotone_payments_imply_sp(*make_mechanism(id), suite[i]),
             "soundness " + id + " market " + std::to_string(i));
      }
    }
  }
  // Exact vs bisection: 100 markets per mode, every rule, up to 8 agents.
  for (Mode mode : {Mode::unit_demand, Mode::single_minded}) {
    const auto suite = property::random_suite(mode, 100, 30000 + 1000 * static_cast<int>(mode), 8);
    for (std::size_t i = 0; i < suite.size(); ++i) {
      for (const auto& id : property::rules_for(mode)) {
        note("exact-vs-bisect", property::exact_vs_bisect(*make_allocation_rule(id), suite[i], kBisectTol),
             "critical bids " + id + " market " + std::to_string(i));
      }
    }
  }
  // Efficiency: 150 markets with up to 10 agents, truthful and withheld.
  {
    std::mt19937_64 rng(40000);
    const auto suite = property::random_suite(Mode::unit_demand, 150, 40000, 10);
    for (std::size_t i = 0; i < suite.size(); ++i) {
      for (const ReportProfile& r :
           {ReportProfile::truthful(suite[i]), oracle::random_withholding(suite[i], rng)}) {
        for (const char* id : {"vcg", "vcg-rm"}) {
          note("efficiency", property::efficient_welfare(*make_mechanism(id), suite[i], r),
               std::string("efficiency ") + id + " market " + std::to_string(i));
        }
      }
    }
  }
  // sqrt-k bound: 150 markets with up to 10 agents and 8 items.
  {
    RandomMarketConfig config;
    config.mode = Mode::single_minded;
    config.max_agents = 10;
    config.max_items = 8;
    config.max_bundle = 4;
    for (std::size_t i = 0; i < 150; ++i) {
      std::mt19937_64 rng(50000 + i);
      const Scenario s = random_market(rng, config);
      note("sqrt-k", property::sqrt_k_bound(s, ReportProfile::truthful(s)),
           "sqrt-k market " + std::to_string(i));
    }
  }
  res.require(cases >= kPropertyCases, "only " + std::to_string(cases) + " cases");
  std::string tally;
  for (const auto& [suite, counts] : per_suite) {
    tally += (tally.empty() ? "" : ", ") + suite + " " + std::to_string(counts.second) + "/" +
             std::to_string(counts.first);
  }
  if (res.pass) res.detail = std::to_string(cases) + " cases, zero violations";
  res.detail += " (violations per suite: " + tally + ")";
  return res;
}

}  // namespace
}  // namespace netauction

int main() {
  using netauction::Result;
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"DNA-MU golden traces", netauction::criterion1},
      {"DNA-MU-R golden traces", netauction::criterion2},
      {"SP refutation of DNA-MU", netauction::criterion3},
      {"SP and IR certification", netauction::criterion4},
      {"fig8 comparison rows", netauction::criterion5},
      {"critical-bid infimum", netauction::criterion6},
      {"monotonicity classifications", netauction::criterion7},
      {"payment-axiom refutation", netauction::criterion8},
      {"weak budget balance", netauction::criterion9},
      {"degeneracy", netauction::criterion10},
      {"property suites", netauction::criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = netauction::Clock::now();
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    if (!res.pass) ++failed;
    std::printf("%s criterion %zu (%s) [%.2f s]: %s\n", res.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, netauction::seconds_since(t0), res.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
