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

#include <functional>
#include <optional>
#include <vector>

#include "gradual/mechanism.hpp"

namespace gradual {

/// Pure strategies for a subset of agents: `choices[i]` holds one action per
/// information set of agent i (indexed by local id), or is empty when agent
/// i is not covered.
struct PartialStrategyProfile {
  std::vector<std::optional<std::vector<TypeSet>>> choices;

  explicit PartialStrategyProfile(int agents = 0) : choices(static_cast<std::size_t>(agents)) {}

  bool covers(AgentId i) const { return choices[static_cast<std::size_t>(i)].has_value(); }
  TypeSet choice(AgentId i, int info_set) const {
    return (*choices[static_cast<std::size_t>(i)])[static_cast<std::size_t>(info_set)];
  }
  /// Overlays the covered agents of `other` onto this profile.
  void merge(const PartialStrategyProfile& other);
};

/// Strategy of agent i that picks the action containing `type` wherever the
/// type is still possible and the first available action elsewhere.
PartialStrategyProfile unconditional_strategy(const Mechanism& gm, AgentId i, int type);

/// Profile of unconditional strategies for a complete type profile.
PartialStrategyProfile truthful_profile(const Mechanism& gm, const TypeProfile& theta);

NodeId truthful_terminal(const Mechanism& gm, const TypeProfile& theta);

/// Follows a complete strategy profile from the root. Throws GradualError if
/// a choice is not available or an agent is uncovered.
NodeId play(const Mechanism& gm, const PartialStrategyProfile& s);

/// True iff some pure strategy profile of the agents outside `excluded` is
/// consistent with both terminals. Throws if `excluded` holds every agent.
bool common_strategy_exists(const Mechanism& gm, NodeId z1, NodeId z2, AgentSet excluded);

/// Same test without the all-agents guard, for hot loops.
bool consistent_pair(const Mechanism& gm, NodeId z1, NodeId z2, AgentSet excluded);

/// Calls `fn(z1, z2)` for every ordered terminal pair passing the common
/// strategy test with excluded = {i} or {i, j}.
void consistent_profile_pairs(const Mechanism& gm, AgentId i, std::optional<AgentId> j,
                              const std::function<void(NodeId, NodeId)>& fn);

}  // namespace gradual
