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

#ifndef NETAUCTION_SCENARIO_IO_HPP_
#define NETAUCTION_SCENARIO_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "netauction/auditor.hpp"
#include "netauction/market.hpp"
#include "netauction/mechanisms.hpp"

namespace netauction {

inline constexpr int kSchemaVersion = 1;

// Throws ParseError, SchemaMismatch or ValidationError.
Scenario parse_scenario(const std::filesystem::path& path);
Scenario parse_scenario_text(std::string_view text, std::string_view origin = "<input>");
std::string emit_scenario(const Scenario& scenario);

// Overlay on the truthful profile:
//   {"schema_version": 1, "reports": {"D": {"invites": []}, "A": {"bid": "5"}}}
ReportProfile parse_reports(const Scenario& scenario, const std::filesystem::path& path);
ReportProfile parse_reports_text(const Scenario& scenario, std::string_view text,
                                 std::string_view origin = "<input>");
nlohmann::ordered_json reports_json(const Scenario& scenario, const ReportProfile& reports);
std::string emit_reports(const Scenario& scenario, const ReportProfile& reports);

struct TraceRow {
  std::size_t left = 0;          // units, or unallocated items
  std::vector<AgentId> winners;  // W before this row
  bool finished = false;
  AgentId agent = kSeller;       // unset on the finished row
  bool won = false;
  Real payment;
};

struct ResultReport {
  std::string mechanism;
  Outcome outcome;
  std::vector<TraceRow> trace;
};

ResultReport make_report(const Scenario& scenario, std::string_view mechanism,
                         const Outcome& outcome);
// Rebuilds allocation and payments from the trace rows alone.
Outcome replay_trace(const Scenario& scenario, const std::vector<TraceRow>& trace);

std::string render_table(const Scenario& scenario, const ResultReport& report);
nlohmann::ordered_json report_json(const Scenario& scenario, const ResultReport& report);
std::string render_json(const Scenario& scenario, const ResultReport& report);

// One row per mechanism: SW, revenue, winners, payments.
std::string render_comparison(const Scenario& scenario, const std::vector<ResultReport>& reports);
nlohmann::ordered_json comparison_json(const Scenario& scenario,
                                       const std::vector<ResultReport>& reports);

nlohmann::ordered_json verdict_json(const Scenario& scenario, const AuditVerdict& verdict);

}  // namespace netauction

#endif  // NETAUCTION_SCENARIO_IO_HPP_
