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

#include <optional>
#include <string>

#include "gradual/mechanism.hpp"
#include "gradual/strategy.hpp"

namespace gradual {

/// A concrete violation: type profile theta1 (reaching terminal z1) should
/// weakly prefer, for `harmed`'s type theta1[harmed], the outcome of z1 over
/// that of z2, but does not.
struct Witness {
  std::string kind;  // "ic", "rp", "irp" or "ill"
  AgentId harmed = 0;
  std::optional<AgentId> reactor;  // RP/IRP/ILL: the agent holding the sibling sets
  std::optional<int> info_set1;    // local ids of the reactor's sets
  std::optional<int> info_set2;
  NodeId node1 = kNoNode;  // members h1, h2 (RP/IRP)
  NodeId node2 = kNoNode;
  NodeId z1 = kNoNode;
  NodeId z2 = kNoNode;
  TypeProfile theta1;
  TypeProfile theta2;
  OutcomeId x1 = 0;
  OutcomeId x2 = 0;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  explicit operator bool() const { return holds; }
};

/// Throws GradualError unless gm validates against f.
void require_valid(const Mechanism& gm, const ScfTable& f);

/// Truth-telling is weakly dominant for every agent (terminal-pair test).
Verdict is_ic(const Mechanism& gm, const ScfTable& f);

/// Reaction-proofness; `relaxed` skips history pairs where a third agent
/// already sits in different information sets before h1 and h2.
Verdict is_rp(const Mechanism& gm, const ScfTable& f, bool relaxed = false);

/// Indifference reaction-proofness. The witness names the two member
/// histories; z1, z2 are a consistent pair of terminal extensions.
Verdict is_irp(const Mechanism& gm, const ScfTable& f, bool relaxed = false);

/// Re-checks a failed verdict's witness from scratch.
bool witness_is_genuine(const Mechanism& gm, const ScfTable& f, const Witness& w);

std::string describe(const Mechanism& gm, const Witness& w);

namespace detail {
/// First type of j in Theta_j(z1) strictly preferring X(z2) to X(z1).
std::optional<int> harmful_type(const Mechanism& gm, AgentId j, NodeId z1, NodeId z2);
Witness pair_witness(const Mechanism& gm, std::string kind, AgentId j, int t, NodeId z1, NodeId z2);
}  // namespace detail

}  // namespace gradual
