// Copyright 2026 The gradual Authors.
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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gradual/checkers.hpp"
#include "gradual/mechanism.hpp"

namespace gradual {

/// Agent i additionally chooses between part1 and part2 at the terminals
/// following `action` at `info_set`.
struct Spl {
  AgentId agent = 0;
  int info_set = 0;
  TypeSet action = 0;
  TypeSet part1 = 0;
  TypeSet part2 = 0;
};

/// Moves the actions of `successor` up into `info_set`, replacing `action`.
struct Coa {
  AgentId agent = 0;
  int info_set = 0;
  int successor = 0;
  TypeSet action = 0;
};

/// Splits `info_set` into the two node lists (and its successors accordingly).
struct Ill {
  AgentId agent = 0;
  int info_set = 0;
  std::vector<NodeId> part1;
  std::vector<NodeId> part2;
};

/// Merges two sibling information sets and the successors they induce.
struct InverseIll {
  AgentId agent = 0;
  int first = 0;
  int second = 0;
};

/// Inverse of a coalescing: at `info_set` the actions in `group` are merged
/// into their union, and a new step lets the agent choose among them.
struct Uncoalesce {
  AgentId agent = 0;
  int info_set = 0;
  std::vector<TypeSet> group;
};

using Transformation = std::variant<Spl, Coa, Ill, InverseIll, Uncoalesce>;

enum class Kind { spl, coa, ill, inverse_ill, uncoalesce };

Kind kind_of(const Transformation& t);
std::string kind_name(Kind k);

Mechanism apply_spl(const Mechanism& gm, const Spl& t);
Mechanism apply_coa(const Mechanism& gm, const Coa& t);
Mechanism apply_ill(const Mechanism& gm, const Ill& t);
Mechanism apply_inverse_ill(const Mechanism& gm, const InverseIll& t);
Mechanism apply_uncoalesce(const Mechanism& gm, const Uncoalesce& t);
Mechanism apply(const Mechanism& gm, const Transformation& t);

/// Terminals whose Theta_i equals `action`, preceded by the information set
/// through that action.
std::vector<NodeId> spl_terminals(const Mechanism& gm, AgentId i, int info_set, TypeSet action);

/// Whether the ILL on gm (the mechanism before illuminating) leaves every
/// other agent's truth-telling incentive intact.
Verdict is_incentive_preserving(const Mechanism& gm, const Ill& t, const ScfTable& f);

struct OpportunityLimits {
  int max_ill_set_size = 16;  // larger sets are skipped when enumerating ILL partitions
  int max_spl_action_size = 12;
};

/// Applicable transformations of one kind in canonical (agent, information
/// set, parameter) order.
std::vector<Transformation> find_opportunities(const Mechanism& gm, Kind kind, const OpportunityLimits& limits = {});

/// One applicable COA, or nullopt (first in canonical order).
std::optional<Coa> first_coa(const Mechanism& gm);

struct ChainStep {
  Transformation step;
  std::uint64_t fingerprint = 0;  // of the mechanism after the step
  std::optional<Ill> forward_ill;  // inverse ILLs: the ILL on the merged mechanism
  std::optional<bool> preserving;
};

struct ReductionChain {
  std::vector<ChainStep> steps;
  std::shared_ptr<const Mechanism> result;
};

/// SPLs until every terminal carries one type profile, then COAs (preferred)
/// and inverse ILLs until the mechanism is static.
ReductionChain reduce_to_direct(const Mechanism& gm, const ScfTable& f);

bool theorem1_verdict(const ReductionChain& chain);

std::string describe(const Mechanism& gm, const Transformation& t);

}  // namespace gradual
