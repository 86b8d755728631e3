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

#include "gradual/strategy.hpp"

#include <string>

namespace gradual {

void PartialStrategyProfile::merge(const PartialStrategyProfile& other) {
  for (std::size_t i = 0; i < other.choices.size(); ++i) {
    if (other.choices[i]) choices[i] = other.choices[i];
  }
}

PartialStrategyProfile unconditional_strategy(const Mechanism& gm, AgentId i, int type) {
  PartialStrategyProfile s(gm.agent_count());
  std::vector<TypeSet> plan;
  for (const auto& set : gm.info_sets(i)) {
    const auto acts = gm.actions(set.nodes.front(), i);
    TypeSet pick = acts.empty() ? 0 : acts.front();
    for (TypeSet a : acts) {
      if (contains(a, type)) pick = a;
    }
    plan.push_back(pick);
  }
  s.choices[static_cast<std::size_t>(i)] = std::move(plan);
  return s;
}

PartialStrategyProfile truthful_profile(const Mechanism& gm, const TypeProfile& theta) {
  PartialStrategyProfile s(gm.agent_count());
  for (int i = 0; i < gm.agent_count(); ++i) s.merge(unconditional_strategy(gm, i, theta[static_cast<std::size_t>(i)]));
  return s;
}

NodeId truthful_terminal(const Mechanism& gm, const TypeProfile& theta) {
  return gm.truthful_terminal(gm.model().encode(theta));
}

NodeId play(const Mechanism& gm, const PartialStrategyProfile& s) {
  NodeId h = gm.root();
  const auto n = static_cast<std::size_t>(gm.agent_count());
  while (!gm.is_terminal(h)) {
    Profile want(n, 0);
    for (int i = 0; i < gm.agent_count(); ++i) {
      if (!gm.is_active(h, i)) continue;
      if (!s.covers(i)) throw GradualError("strategy profile does not cover agent " + gm.model().agent_name(i));
      want[static_cast<std::size_t>(i)] = s.choice(i, gm.info_set_of(h, i));
    }
    NodeId next = kNoNode;
    for (NodeId c : gm.children(h)) {
      if (gm.move(c) == want) {
        next = c;
        break;
      }
    }
    if (next == kNoNode) throw GradualError("strategy chooses an unavailable action at node " + std::to_string(h));
    h = next;
  }
  return h;
}

bool consistent_pair(const Mechanism& gm, NodeId z1, NodeId z2, AgentSet excluded) {
  if (z1 == z2) return true;
  const auto a = gm.decisions(z1);
  const auto b = gm.decisions(z2);
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < a.size() && q < b.size()) {
    if (a[p].info_set < b[q].info_set) {
      ++p;
    } else if (b[q].info_set < a[p].info_set) {
      ++q;
    } else {
      if ((excluded & agent_bit(a[p].agent)) == 0 && a[p].action != b[q].action) return false;
      ++p;
      ++q;
    }
  }
  return true;
}

bool common_strategy_exists(const Mechanism& gm, NodeId z1, NodeId z2, AgentSet excluded) {
  const int n = gm.agent_count();
  const AgentSet everyone = n >= kMaxAgents ? ~AgentSet{0} : (AgentSet{1} << n) - 1;
  if ((excluded & everyone) == everyone) throw GradualError("excluding every agent leaves nothing to test");
  if (!gm.is_terminal(z1) || !gm.is_terminal(z2)) throw GradualError("common strategy test needs terminal histories");
  return consistent_pair(gm, z1, z2, excluded);
}

void consistent_profile_pairs(const Mechanism& gm, AgentId i, std::optional<AgentId> j,
                              const std::function<void(NodeId, NodeId)>& fn) {
  AgentSet excluded = agent_bit(i);
  if (j) excluded |= agent_bit(*j);
  for (NodeId z1 : gm.terminals()) {
    for (NodeId z2 : gm.terminals()) {
      if (consistent_pair(gm, z1, z2, excluded)) fn(z1, z2);
    }
  }
}

}  // namespace gradual
