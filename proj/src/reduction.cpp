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

#include "gradual/transform.hpp"

namespace gradual {

namespace {

std::optional<Spl> next_split(const Mechanism& gm) {
  for (NodeId z : gm.terminals()) {
    for (AgentId i = 0; i < gm.agent_count(); ++i) {
      const TypeSet a = gm.theta(z, i);
      if (size_of(a) < 2) continue;
      NodeId own = kNoNode;
      for (NodeId u = gm.parent(z); u != kNoNode; u = gm.parent(u)) {
        if (gm.is_active(u, i)) {
          own = u;
          break;
        }
      }
      if (own == kNoNode) continue;
      const int local = gm.info_set_of(own, i);
      const auto bar = spl_terminals(gm, i, local, a);
      bool ok = !bar.empty();
      for (NodeId w : bar) {
        NodeId last = kNoNode;
        for (NodeId u = gm.parent(w); u != kNoNode; u = gm.parent(u)) {
          if (gm.is_active(u, i)) {
            last = u;
            break;
          }
        }
        if (gm.info_set_of(last, i) != local) ok = false;
      }
      if (!ok) continue;
      const TypeSet low = singleton(lowest(a));
      return Spl{i, local, a, low, a & ~low};
    }
  }
  return std::nullopt;
}

bool all_singletons(const Mechanism& gm) {
  for (NodeId z : gm.terminals()) {
    for (AgentId i = 0; i < gm.agent_count(); ++i) {
      if (size_of(gm.theta(z, i)) != 1) return false;
    }
  }
  return true;
}

}  // namespace

ReductionChain reduce_to_direct(const Mechanism& gm, const ScfTable& f) {
  require_valid(gm, f);
  ReductionChain chain;
  auto cur = std::make_shared<const Mechanism>(gm);
  auto push = [&](Transformation t, Mechanism next) {
    cur = std::make_shared<const Mechanism>(std::move(next));
    chain.steps.push_back(ChainStep{std::move(t), cur->fingerprint(), std::nullopt, std::nullopt});
  };
  while (!all_singletons(*cur)) {
    auto t = next_split(*cur);
    if (!t) throw GradualError("internal: no splitting opportunity although some terminal carries several profiles");
    push(*t, apply_spl(*cur, *t));
  }
  while (!cur->is_static()) {
    if (auto c = first_coa(*cur)) {
      push(*c, apply_coa(*cur, *c));
      continue;
    }
    bool done = false;
    for (const auto& sp : siblings_same_action(*cur)) {
      const InverseIll t{sp.agent, sp.first, sp.second};
      std::optional<Mechanism> merged;
      try {
        merged.emplace(apply_inverse_ill(*cur, t));
      } catch (const GradualError&) {
        continue;
      }
      const auto& h1 = cur->info_set(sp.agent, sp.first).nodes;
      const auto& h2 = cur->info_set(sp.agent, sp.second).nodes;
      std::vector<NodeId> both = h1;
      both.insert(both.end(), h2.begin(), h2.end());
      const Ill forward{sp.agent, *merged->find_info_set(sp.agent, both), h1, h2};
      const bool preserving = is_incentive_preserving(*merged, forward, f).holds;
      push(t, std::move(*merged));
      chain.steps.back().forward_ill = forward;
      chain.steps.back().preserving = preserving;
      done = true;
      break;
    }
    if (!done) throw GradualError("internal: no coalescing or inverse illuminating opportunity on a dynamic mechanism");
  }
  chain.result = cur;
  return chain;
}

bool theorem1_verdict(const ReductionChain& chain) {
  for (const auto& s : chain.steps) {
    if (s.preserving && !*s.preserving) return false;
  }
  return true;
}

}  // namespace gradual
