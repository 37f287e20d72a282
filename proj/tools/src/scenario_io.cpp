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

#include "netauction/scenario_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

#include "netauction/errors.hpp"

namespace netauction {
namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError(std::string(origin) + ":" + std::to_string(line) + ": malformed JSON");
  }
}

[[noreturn]] void field_error(std::string_view origin, const std::string& field,
                              const std::string& what) {
  throw ParseError(std::string(origin) + ": " + field + ": " + what);
}

const json& require(const json& obj, const char* key, std::string_view origin,
                    const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) field_error(origin, where + key, "missing");
  return obj.at(key);
}

std::string get_string(const json& v, std::string_view origin, const std::string& field) {
  if (!v.is_string()) field_error(origin, field, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> get_strings(const json& v, std::string_view origin,
                                     const std::string& field) {
  if (!v.is_array()) field_error(origin, field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(get_string(v[i], origin, field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Rational get_bid(const json& v, std::string_view origin, const std::string& field) {
  if (v.is_number_integer()) {
    return Rational(v.dump());
  }
  if (!v.is_string()) field_error(origin, field, "expected a decimal or p/q string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    field_error(origin, field, e.what());
  }
}

void check_schema(const json& doc, std::string_view origin) {
  const json& version = require(doc, "schema_version", origin, "");
  if (!version.is_number_integer() || version.get<long long>() != kSchemaVersion) {
    throw SchemaMismatch(std::string(origin) + ": unsupported schema_version " + version.dump() +
                         " (expected " + std::to_string(kSchemaVersion) + ")");
  }
}

std::string set_text(const Scenario& s, const std::vector<AgentId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += s.name(ids[i]);
  }
  return out + "}";
}

json names_json(const Scenario& s, const std::vector<AgentId>& ids) {
  json out = json::array();
  for (AgentId id : ids) out.push_back(s.name(id));
  return out;
}

std::vector<std::string> bundle_items(const Scenario& s, Bundle mask) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < s.items().size(); ++j) {
    if (mask >> j & 1U) out.push_back(s.items()[j]);
  }
  return out;
}

std::size_t capacity(const Scenario& s) {
  return s.mode() == Mode::unit_demand ? s.unit_count() : s.items().size();
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string payments_text(const Scenario& s, const Outcome& o) {
  std::string out;
  for (std::uint32_t i = 0; i < s.agent_count(); ++i) {
    if (i) out += ",";
    out += s.name(AgentId{i}) + "(" + o.payments[i].to_string() + ")";
  }
  return out;
}

}  // namespace

Scenario parse_scenario(const std::filesystem::path& path) {
  return parse_scenario_text(read_file(path), path.string());
}

Scenario parse_scenario_text(std::string_view text, std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object()) throw ParseError(std::string(origin) + ": top level must be an object");
  check_schema(doc, origin);

  const std::string mode = get_string(require(doc, "mode", origin, ""), origin, "mode");
  Scenario::Builder b(get_string(require(doc, "seller", origin, ""), origin, "seller"));
  if (mode == "unit_demand") {
    const json& k = require(doc, "k", origin, "");
    if (!k.is_number_unsigned()) field_error(origin, "k", "expected a positive integer");
    b.unit_demand(k.get<std::size_t>());
  } else if (mode == "single_minded") {
    b.single_minded(get_strings(require(doc, "items", origin, ""), origin, "items"));
  } else {
    throw SchemaMismatch(std::string(origin) + ": unknown mode '" + mode + "'");
  }
  if (doc.contains("seller_neighbors")) {
    b.seller_neighbors(get_strings(doc.at("seller_neighbors"), origin, "seller_neighbors"));
  }
  const json& agents = require(doc, "agents", origin, "");
  if (!agents.is_array()) field_error(origin, "agents", "expected an array");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "].";
    const json& a = agents[i];
    if (!a.is_object()) field_error(origin, "agents[" + std::to_string(i) + "]", "expected an object");
    std::vector<std::string> neighbors;
    if (a.contains("neighbors")) neighbors = get_strings(a.at("neighbors"), origin, where + "neighbors");
    std::vector<std::string> bundle;
    if (a.contains("bundle")) bundle = get_strings(a.at("bundle"), origin, where + "bundle");
    b.agent(get_string(require(a, "id", origin, where), origin, where + "id"),
            get_bid(require(a, "bid", origin, where), origin, where + "bid"), std::move(neighbors),
            std::move(bundle));
  }
  try {
    return b.build();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(origin) + ": " + e.what());
  }
}

std::string emit_scenario(const Scenario& s) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["mode"] = std::string(to_string(s.mode()));
  doc["seller"] = s.seller_name();
  doc["seller_neighbors"] = names_json(s, s.seller_neighbors());
  if (s.mode() == Mode::unit_demand) {
    doc["k"] = s.unit_count();
  } else {
    doc["items"] = s.items();
  }
  json agents = json::array();
  for (std::uint32_t i = 0; i < s.agent_count(); ++i) {
    const AgentId id{i};
    json a;
    a["id"] = s.name(id);
    a["bid"] = format_rational(s.bid(id));
    a["neighbors"] = names_json(s, s.neighbors(id));
    if (s.mode() == Mode::single_minded) a["bundle"] = bundle_items(s, s.bundle(id));
    agents.push_back(std::move(a));
  }
  doc["agents"] = std::move(agents);
  return doc.dump(2) + "\n";
}

ReportProfile parse_reports(const Scenario& scenario, const std::filesystem::path& path) {
  return parse_reports_text(scenario, read_file(path), path.string());
}

ReportProfile parse_reports_text(const Scenario& scenario, std::string_view text,
                                 std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object()) throw ParseError(std::string(origin) + ": top level must be an object");
  check_schema(doc, origin);
  ReportProfile out = ReportProfile::truthful(scenario);
  const json& reports = require(doc, "reports", origin, "");
  if (!reports.is_object()) field_error(origin, "reports", "expected an object");
  for (const auto& [name, entry] : reports.items()) {
    const AgentId id = scenario.id(name);
    const std::string where = "reports." + name + ".";
    if (!entry.is_object()) field_error(origin, "reports." + name, "expected an object");
    if (entry.contains("bid")) out.bids[id.value] = get_bid(entry.at("bid"), origin, where + "bid");
    if (entry.contains("invites")) {
      std::vector<AgentId> inv;
      for (const auto& n : get_strings(entry.at("invites"), origin, where + "invites")) {
        inv.push_back(scenario.id(n));
      }
      out = out.with_invites(id, std::move(inv));
    }
  }
  validate(scenario, out);
  return out;
}

nlohmann::ordered_json reports_json(const Scenario& scenario, const ReportProfile& reports) {
  const ReportProfile truthful = ReportProfile::truthful(scenario);
  json doc;
  doc["schema_version"] = kSchemaVersion;
  json entries = json::object();
  for (std::uint32_t i = 0; i < scenario.agent_count(); ++i) {
    json e = json::object();
    if (reports.bids[i] != truthful.bids[i]) e["bid"] = format_rational(reports.bids[i]);
    if (reports.invites[i] != truthful.invites[i]) e["invites"] = names_json(scenario, reports.invites[i]);
    if (!e.empty()) entries[scenario.name(AgentId{i})] = std::move(e);
  }
  doc["reports"] = std::move(entries);
  return doc;
}

std::string emit_reports(const Scenario& scenario, const ReportProfile& reports) {
  return reports_json(scenario, reports).dump(2) + "\n";
}

ResultReport make_report(const Scenario& s, std::string_view mechanism, const Outcome& o) {
  ResultReport report{std::string(mechanism), o, {}};
  std::vector<AgentId> winners;
  std::size_t left = capacity(s);
  const auto& order = o.priority;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (left == 0) {
      const bool quiet = std::all_of(order.begin() + static_cast<std::ptrdiff_t>(pos), order.end(),
                                     [&](AgentId a) { return !o.won(a) && o.payment(a).sign() == 0; });
      if (quiet) break;
    }
    const AgentId a = order[pos];
    report.trace.push_back({left, winners, false, a, o.won(a), o.payment(a)});
    if (o.won(a)) {
      winners.push_back(a);
      left -= s.mode() == Mode::unit_demand ? 1 : s.bundle_size(a);
    }
  }
  TraceRow done;
  done.left = left;
  done.winners = winners;
  done.finished = true;
  report.trace.push_back(std::move(done));
  return report;
}

Outcome replay_trace(const Scenario& s, const std::vector<TraceRow>& trace) {
  Outcome o;
  o.mode = s.mode();
  o.allocation.assign(s.agent_count(), 0);
  o.granted.assign(s.agent_count(), 0);
  o.payments.assign(s.agent_count(), Real(0));
  for (const auto& row : trace) {
    if (row.finished) continue;
    o.priority.push_back(row.agent);
    o.payments[row.agent.value] = row.payment;
    if (!row.won) continue;
    o.allocation[row.agent.value] = 1;
    o.winners.push_back(row.agent);
    o.social_welfare += Real(s.bid(row.agent));
    if (s.mode() == Mode::single_minded) o.granted[row.agent.value] = s.bundle(row.agent);
  }
  for (const auto& p : o.payments) o.revenue += p;
  return o;
}

std::string render_table(const Scenario& s, const ResultReport& r) {
  const std::string left_head = s.mode() == Mode::unit_demand ? "Left Units" : "Left Items";
  std::vector<std::array<std::string, 3>> rows;
  for (const auto& row : r.trace) {
    std::string fp = "Finished";
    if (!row.finished) {
      const std::string& n = s.name(row.agent);
      fp = "f_" + n + "=" + (row.won ? "1" : "0") + ", p_" + n + "=" + row.payment.to_string();
    }
    rows.push_back({std::to_string(row.left), set_text(s, row.winners), fp});
  }
  std::size_t w0 = left_head.size();
  std::size_t w1 = 1;
  for (const auto& row : rows) {
    w0 = std::max(w0, row[0].size());
    w1 = std::max(w1, row[1].size());
  }
  std::ostringstream out;
  out << "mechanism: " << r.mechanism << "\n";
  out << pad(left_head, w0) << " | " << pad("W", w1) << " | (f,p)\n";
  for (const auto& row : rows) {
    out << pad(row[0], w0) << " | " << pad(row[1], w1) << " | " << row[2] << "\n";
  }
  out << "winners: " << set_text(s, r.outcome.winners) << "\n";
  out << "payments: " << payments_text(s, r.outcome) << "\n";
  out << "social welfare: " << r.outcome.social_welfare.to_string() << "\n";
  out << "revenue: " << r.outcome.revenue.to_string() << "\n";
  return out.str();
}

nlohmann::ordered_json report_json(const Scenario& s, const ResultReport& r) {
  json doc;
  doc["mechanism"] = r.mechanism;
  doc["mode"] = std::string(to_string(s.mode()));
  doc["winners"] = names_json(s, r.outcome.winners);
  if (s.mode() == Mode::single_minded) {
    json grants = json::object();
    for (AgentId w : r.outcome.winners) grants[s.name(w)] = bundle_items(s, r.outcome.granted[w.value]);
    doc["allocation"] = std::move(grants);
  }
  json pay = json::object();
  for (std::uint32_t i = 0; i < s.agent_count(); ++i) {
    pay[s.name(AgentId{i})] = r.outcome.payments[i].to_string();
  }
  doc["payments"] = std::move(pay);
  doc["social_welfare"] = r.outcome.social_welfare.to_string();
  doc["revenue"] = r.outcome.revenue.to_string();
  json trace = json::array();
  for (const auto& row : r.trace) {
    json t;
    t["left"] = row.left;
    t["W"] = names_json(s, row.winners);
    if (row.finished) {
      t["finished"] = true;
    } else {
      t["agent"] = s.name(row.agent);
      t["f"] = row.won ? 1 : 0;
      t["p"] = row.payment.to_string();
    }
    trace.push_back(std::move(t));
  }
  doc["trace"] = std::move(trace);
  return doc;
}

std::string render_json(const Scenario& s, const ResultReport& r) {
  return report_json(s, r).dump(2) + "\n";
}

std::string render_comparison(const Scenario& s, const std::vector<ResultReport>& reports) {
  std::vector<std::array<std::string, 5>> rows{{"Mechanism", "SW", "Rev", "Winner", "Payment"}};
  for (const auto& r : reports) {
    rows.push_back({r.mechanism, r.outcome.social_welfare.to_string(),
                    r.outcome.revenue.to_string(), set_text(s, r.outcome.winners),
                    payments_text(s, r.outcome)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 5; ++c) {
      out << (c == 4 ? row[c] : pad(row[c], width[c]) + " | ");
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json comparison_json(const Scenario& s, const std::vector<ResultReport>& reports) {
  json rows = json::array();
  for (const auto& r : reports) {
    json row = report_json(s, r);
    row.erase("trace");
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json verdict_json(const Scenario& s, const AuditVerdict& v) {
  json doc;
  doc["axiom"] = std::string(to_string(v.axiom));
  doc["pass"] = v.pass;
  doc["coverage"] = std::string(to_string(v.coverage));
  doc["opponents"] = v.opponent_scope;
  doc["checks"] = v.checks;
  if (v.witness) {
    const Witness& w = *v.witness;
    json wj;
    wj["agent"] = w.agent == kSeller ? std::string() : s.name(w.agent);
    wj["description"] = w.description;
    auto value = [](const std::optional<Real>& x) { return x ? x->to_string() : "unbounded"; };
    wj["reference_value"] = value(w.reference_value);
    wj["deviation_value"] = value(w.deviation_value);
    wj["reference_reports"] = reports_json(s, w.reference);
    wj["deviation_reports"] = reports_json(s, w.deviation);
    doc["witness"] = std::move(wj);
  }
  return doc;
}

}  // namespace netauction
