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

#include "netauction/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "netauction/auditor.hpp"
#include "netauction/errors.hpp"
#include "netauction/random_market.hpp"
#include "netauction/scenario_io.hpp"

namespace netauction {
namespace {

using json = nlohmann::ordered_json;

struct RunArgs {
  std::string mechanism;
  std::string scenario;
  std::string reports;
  std::string format = "table";
  std::string payment = "native";
  std::size_t rank = 2;
};

struct AuditArgs {
  std::string mechanism;
  std::string scenario;
  std::vector<std::string> axioms;
  std::optional<std::size_t> budget;
  std::size_t opponent_samples = 0;
  std::string payment = "native";
  std::size_t rank = 2;
};

struct CompareArgs {
  std::string scenario;
  std::vector<std::string> mechanisms;
  std::string format = "table";
  std::size_t rank = 2;
};

struct DummyArgs {
  std::string base;
  std::size_t units = 4;
  std::string dummy_bid = "8";
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::unique_ptr<Mechanism> mechanism_or_usage(const std::string& id, std::size_t rank) {
  const auto& ids = mechanism_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw UsageError("unknown mechanism '" + id + "'");
  }
  return make_mechanism(id, MechanismOptions{rank});
}

// "native" keeps the mechanism's own payments; id-rm and ip-rm pair its
// allocation rule with the revenue-maximizing critical-bid payments.
std::unique_ptr<Mechanism> mechanism_with_payment(const std::string& id, std::size_t rank,
                                                  const std::string& payment) {
  auto mech = mechanism_or_usage(id, rank);
  if (payment == "native") return mech;
  const PaymentFormula formula =
      payment == "id-rm" ? PaymentFormula::id_mon_rm() : PaymentFormula::ip_mon_rm();
  return make_critical_payment_mechanism(id + "+" + payment,
                                         make_allocation_rule(id, MechanismOptions{rank}), formula);
}

int do_run(const RunArgs& a, std::ostream& out) {
  auto mech = mechanism_with_payment(a.mechanism, a.rank, a.payment);
  const Scenario scenario = parse_scenario(a.scenario);
  const ReportProfile reports =
      a.reports.empty() ? ReportProfile::truthful(scenario) : parse_reports(scenario, a.reports);
  const Outcome outcome = mech->run(scenario, reports);
  const ResultReport report = make_report(scenario, mech->id(), outcome);
  out << (a.format == "json" ? render_json(scenario, report) : render_table(scenario, report));
  return kExitOk;
}

int do_audit(const AuditArgs& a, std::ostream& out) {
  auto mech = mechanism_with_payment(a.mechanism, a.rank, a.payment);
  const Scenario scenario = parse_scenario(a.scenario);
  AuditConfig config = AuditConfig::from_environment();
  if (a.budget) config.budget = *a.budget;
  config.opponent_samples = a.opponent_samples;

  using Runner = std::function<std::vector<AuditVerdict>()>;
  auto one = [](std::function<AuditVerdict()> f) -> Runner {
    return [f]() { return std::vector<AuditVerdict>{f()}; };
  };
  auto payment_only = [&](Axiom axiom) -> Runner {
    return [&, axiom]() {
      for (auto& v : audit_payment_axioms(*mech, scenario, config)) {
        if (v.axiom == axiom) return std::vector<AuditVerdict>{v};
      }
      return std::vector<AuditVerdict>{};
    };
  };
  const std::map<std::string, Runner> runners = {
      {"ir", one([&] { return audit_ir(*mech, scenario, config); })},
      {"sp", one([&] { return audit_sp(*mech, scenario, config); })},
      {"wbb", one([&] { return audit_wbb(*mech, scenario, config); })},
      {"value-mon", one([&] { return audit_value_monotone(mech->allocation_rule(), scenario, config); })},
      {"id-mon", one([&] { return audit_id_mon(mech->allocation_rule(), scenario, config); })},
      {"ip-mon", one([&] { return audit_ip_mon(mech->allocation_rule(), scenario, config); })},
      {"degenerated", one([&] { return audit_degenerated(*mech, scenario, config); })},
      {"payment", [&] { return audit_payment_axioms(*mech, scenario, config); }},
      {"bid-indep", payment_only(Axiom::bid_indep)},
      {"inv-mon-payment", payment_only(Axiom::inv_mon_payment)},
      {"thm1-cond3", payment_only(Axiom::thm1_cond3)},
      {"thm1-cond4", payment_only(Axiom::thm1_cond4)},
  };
  for (const auto& name : a.axioms) {
    if (!runners.count(name)) throw UsageError("unknown axiom '" + name + "'");
  }
  json verdicts = json::array();
  bool all_pass = true;
  for (const auto& name : a.axioms) {
    for (const auto& v : runners.at(name)()) {
      all_pass = all_pass && v.pass;
      verdicts.push_back(verdict_json(scenario, v));
    }
  }
  json doc;
  doc["mechanism"] = std::string(mech->id());
  doc["scenario"] = a.scenario;
  doc["pass"] = all_pass;
  doc["verdicts"] = std::move(verdicts);
  out << doc.dump(2) << "\n";
  return all_pass ? kExitOk : kExitAuditFailed;
}

int do_compare(const CompareArgs& a, std::ostream& out) {
  std::vector<std::unique_ptr<Mechanism>> mechs;
  for (const auto& id : a.mechanisms) mechs.push_back(mechanism_or_usage(id, a.rank));
  const Scenario scenario = parse_scenario(a.scenario);
  const ReportProfile reports = ReportProfile::truthful(scenario);
  std::vector<ResultReport> rows;
  for (const auto& m : mechs) rows.push_back(make_report(scenario, m->id(), m->run(scenario, reports)));
  if (a.format == "json") {
    out << comparison_json(scenario, rows).dump(2) << "\n";
  } else {
    out << render_comparison(scenario, rows);
  }
  return kExitOk;
}

int do_dummy(const DummyArgs& a, std::ostream& out) {
  const Scenario base = parse_scenario(a.base);
  out << emit_scenario(with_dummy_bidders(base, a.units, parse_rational(a.dummy_bid)));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diffusion auction engine and axiom auditor", "netauction"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "json"};
  const std::vector<std::string> payments{"native", "id-rm", "ip-rm"};

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a mechanism on a scenario");
  run_cmd->add_option("--mechanism", run.mechanism, "Mechanism id")->required();
  run_cmd->add_option("--scenario", run.scenario, "Scenario JSON file")->required();
  run_cmd->add_option("--reports", run.reports, "Report overlay JSON file");
  run_cmd->add_option("--format", run.format, "table or json")->check(CLI::IsMember(formats));
  run_cmd->add_option("--payment", run.payment, "native, id-rm or ip-rm")
      ->check(CLI::IsMember(payments));
  run_cmd->add_option("--rank", run.rank, "Rank cutoff of exploratory-2")->check(CLI::PositiveNumber);

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Audit axioms of a mechanism on a scenario");
  audit_cmd->add_option("--mechanism", audit.mechanism, "Mechanism id")->required();
  audit_cmd->add_option("--scenario", audit.scenario, "Scenario JSON file")->required();
  audit_cmd->add_option("--axioms", audit.axioms,
                        "ir,sp,wbb,value-mon,id-mon,ip-mon,payment,bid-indep,"
                        "inv-mon-payment,thm1-cond3,thm1-cond4,degenerated")
      ->required()
      ->delimiter(',');
  audit_cmd->add_option("--budget", audit.budget,
                        "Evaluation budget; overrides NETAUCTION_AUDIT_BUDGET");
  audit_cmd->add_option("--opponent-samples", audit.opponent_samples,
                        "Sampled opponent profiles besides the truthful one");
  audit_cmd->add_option("--payment", audit.payment, "native, id-rm or ip-rm")
      ->check(CLI::IsMember(payments));
  audit_cmd->add_option("--rank", audit.rank, "Rank cutoff of exploratory-2")->check(CLI::PositiveNumber);

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Compare mechanisms on one scenario");
  compare_cmd->add_option("--scenario", compare.scenario, "Scenario JSON file")->required();
  compare_cmd->add_option("--mechanisms", compare.mechanisms, "Comma-separated ids")
      ->required()
      ->delimiter(',');
  compare_cmd->add_option("--format", compare.format, "table or json")->check(CLI::IsMember(formats));
  compare_cmd->add_option("--rank", compare.rank, "Rank cutoff of exploratory-2")->check(CLI::PositiveNumber);

  DummyArgs dummy;
  auto* dummy_cmd = app.add_subcommand("dummy-market",
                                       "Print a scenario padded with high-bidding dummy agents");
  dummy_cmd->add_option("--base", dummy.base, "Unit-demand scenario JSON file")->required();
  dummy_cmd->add_option("--units", dummy.units, "Unit count of the result")->required();
  dummy_cmd->add_option("--dummy-bid", dummy.dummy_bid, "Bid of every dummy agent");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*run_cmd) return do_run(run, out);
    if (*audit_cmd) return do_audit(audit, out);
    if (*compare_cmd) return do_compare(compare, out);
    if (*dummy_cmd) return do_dummy(dummy, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnboundedPayment& e) {
    err << "unbounded payment: " << e.what() << "\n";
    return kExitUnbounded;
  } catch (const SpaceTooLarge& e) {
    err << "deviation space too large: " << e.what() << "\n";
    return kExitSpaceTooLarge;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace netauction
