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


#ifndef NETAUCTION_TESTS_TEST_SUPPORT_HPP_
#define NETAUCTION_TESTS_TEST_SUPPORT_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "netauction/market.hpp"
#include "netauction/mechanisms.hpp"
#include "netauction/number.hpp"
#include "netauction/scenario_io.hpp"

namespace netauction::testing {

inline std::filesystem::path fixture_path(std::string_view name) {
  return std::filesystem::path(NETAUCTION_FIXTURE_DIR) / std::string(name);
}

inline Scenario fixture(std::string_view stem) {
  return parse_scenario(fixture_path(std::string(stem) + ".json"));
}

inline Rational q(std::string_view text) { return parse_rational(text); }

inline AgentId id(const Scenario& s, std::string_view name) { return s.id(name); }

inline std::vector<AgentId> ids(const Scenario& s, const std::vector<std::string>& names) {
  std::vector<AgentId> out;
  for (const auto& n : names) out.push_back(s.id(n));
  return out;
}

inline std::vector<std::string> names(const Scenario& s, const std::vector<AgentId>& agents) {
  std::vector<std::string> out;
  for (AgentId a : agents) out.push_back(s.name(a));
  return out;
}

// Winners of an outcome by name, in priority order.
inline std::vector<std::string> winner_names(const Scenario& s, const Outcome& o) {
  return names(s, o.winners);
}

// Payments keyed by agent name, rendered exactly.
inline std::map<std::string, std::string> payment_map(const Scenario& s, const Outcome& o) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < s.agent_count(); ++i) {
    const AgentId a{static_cast<std::uint32_t>(i)};
    out[s.name(a)] = o.payment(a).to_string();
  }
  return out;
}

inline ReportProfile without_invites(const Scenario& s, std::string_view agent) {
  return ReportProfile::truthful(s).with_invites(s.id(agent), {});
}

}  // namespace netauction::testing

#endif  // NETAUCTION_TESTS_TEST_SUPPORT_HPP_
