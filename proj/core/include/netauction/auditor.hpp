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

#ifndef NETAUCTION_AUDITOR_HPP_
#define NETAUCTION_AUDITOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netauction/allocation.hpp"
#include "netauction/market.hpp"
#include "netauction/mechanisms.hpp"

namespace netauction {

enum class Axiom {
  ir,
  sp,
  wbb,
  value_mon,
  inv_mon_payment,
  bid_indep,
  id_mon,
  ip_mon,
  degenerated,
  thm1_cond3,
  thm1_cond4,
};

std::string_view to_string(Axiom axiom);

enum class Coverage { certified, sampled };

std::string_view to_string(Coverage coverage);

// Two report profiles that replay the failure. Values are utilities,
// revenues, allocations or payments depending on the axiom; nullopt stands
// for an unbounded payment.
struct Witness {
  AgentId agent = kSeller;
  ReportProfile reference;
  ReportProfile deviation;
  std::optional<Real> reference_value;
  std::optional<Real> deviation_value;
  std::string description;
};

struct AuditVerdict {
  Axiom axiom = Axiom::ir;
  bool pass = true;
  Coverage coverage = Coverage::certified;
  std::string opponent_scope;
  std::size_t checks = 0;
  std::optional<Witness> witness;
};

struct AuditConfig {
  // Agents with at most this many neighbors get every invite subset.
  std::size_t full_enumeration_degree = 10;
  // Extra random subsets for agents above the cap.
  std::size_t sampled_invite_sets = 64;
  // Opponent profiles besides the truthful one; each withholds a random
  // subset of every opponent's invitations.
  std::size_t opponent_samples = 0;
  std::uint64_t seed = 0x6e657461;
  // Upper bound on mechanism evaluations per audit.
  std::size_t budget = 20'000'000;

  // Reads NETAUCTION_AUDIT_BUDGET when set.
  static AuditConfig from_environment();
};

struct DeviationSpace {
  AgentId agent;
  std::vector<Rational> bid_candidates;  // ascending
  std::vector<std::vector<AgentId>> invite_candidates;  // by size, then lexicographic
  bool exhaustive = true;
};

DeviationSpace build_deviation_space(const Scenario& scenario, AgentId agent,
                                     const AuditConfig& config = {});

// Truthful profile first, then config.opponent_samples sampled ones. The
// agent herself is truthful in all of them.
std::vector<ReportProfile> opponent_profiles(const Scenario& scenario, AgentId agent,
                                             const AuditConfig& config = {});

// Participants in priority order, then everybody else by id.
std::vector<AgentId> audit_order(const Scenario& scenario);

AuditVerdict audit_ir(const Mechanism& mechanism, const Scenario& scenario,
                      const AuditConfig& config = {});
// Throws SpaceTooLarge.
AuditVerdict audit_sp(const Mechanism& mechanism, const Scenario& scenario,
                      const AuditConfig& config = {});
AuditVerdict audit_wbb(const Mechanism& mechanism, const Scenario& scenario,
                       const AuditConfig& config = {});
AuditVerdict audit_value_monotone(const AllocationRule& rule, const Scenario& scenario,
                                  const AuditConfig& config = {});
AuditVerdict audit_id_mon(const AllocationRule& rule, const Scenario& scenario,
                          const AuditConfig& config = {});
AuditVerdict audit_ip_mon(const AllocationRule& rule, const Scenario& scenario,
                          const AuditConfig& config = {});
// BID_INDEP, INV_MON_PAYMENT, THM1_COND3, THM1_COND4, in that order.
std::vector<AuditVerdict> audit_payment_axioms(const Mechanism& mechanism,
                                               const Scenario& scenario,
                                               const AuditConfig& config = {});
AuditVerdict audit_degenerated(const Mechanism& mechanism, const Scenario& scenario,
                               const AuditConfig& config = {});

}  // namespace netauction

#endif  // NETAUCTION_AUDITOR_HPP_
