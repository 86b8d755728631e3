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

#include "oracles.hpp"

#include <algorithm>

namespace oracle {

std::vector<std::vector<TypeSet>> pure_strategies(const Mechanism& gm, AgentId i) {
  std::vector<std::vector<TypeSet>> menus;
  for (const auto& s : gm.info_sets(i)) menus.push_back(gm.actions(s.nodes.front(), i));
  std::vector<std::vector<TypeSet>> out{{}};
  for (const auto& menu : menus) {
    std::vector<std::vector<TypeSet>> next;
    for (const auto& partial : out) {
      for (TypeSet a : menu) {
        next.push_back(partial);
        next.back().push_back(a);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::uint64_t profile_count(const Mechanism& gm, AgentSet excluded) {
  std::uint64_t total = 1;
  for (AgentId i = 0; i < gm.agent_count(); ++i) {
    if (excluded & agent_bit(i)) continue;
    for (const auto& s : gm.info_sets(i)) {
      total *= gm.actions(s.nodes.front(), i).size();
      if (total > (std::uint64_t{1} << 40)) return total;
    }
  }
  return total;
}

namespace {

// Calls fn(profile) for every pure strategy profile of the agents in `who`;
// stops when fn returns true.
template <class Fn>
bool for_each_profile(const Mechanism& gm, const std::vector<AgentId>& who, Fn&& fn) {
  std::vector<std::vector<std::vector<TypeSet>>> per;
  for (AgentId i : who) per.push_back(pure_strategies(gm, i));
  std::vector<std::vector<TypeSet>> s(static_cast<std::size_t>(gm.agent_count()));
  std::vector<std::size_t> digit(who.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < who.size(); ++k) s[static_cast<std::size_t>(who[k])] = per[k][digit[k]];
    if (fn(s)) return true;
    std::size_t k = 0;
    for (; k < who.size(); ++k) {
      if (++digit[k] < per[k].size()) break;
      digit[k] = 0;
    }
    if (k == who.size()) return false;
  }
}

bool follows(const Mechanism& gm, NodeId z, const std::vector<std::vector<TypeSet>>& s, const std::vector<AgentId>& who) {
  for (NodeId h = z; h != gm.root(); h = gm.parent(h)) {
    const NodeId u = gm.parent(h);
    for (AgentId i : who) {
      const int k = gm.info_set_of(u, i);
      if (k < 0) continue;
      if (s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != gm.move(h)[static_cast<std::size_t>(i)]) return false;
    }
  }
  return true;
}

OutcomeId outcome_of(const Mechanism& gm, const std::vector<std::vector<TypeSet>>& s) {
  NodeId h = gm.root();
  while (!gm.is_terminal(h)) {
    NodeId next = kNoNode;
    for (NodeId c : gm.children(h)) {
      bool match = true;
      for (AgentId i = 0; i < gm.agent_count() && match; ++i) {
        const int k = gm.info_set_of(h, i);
        if (k >= 0) match = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == gm.move(c)[static_cast<std::size_t>(i)];
      }
      if (match) next = c;
    }
    h = next;
  }
  return *gm.outcome(h);
}

// Theta_i at each information set, read off the last own action before it.
std::vector<TypeSet> reported_before(const Mechanism& gm, AgentId i) {
  std::vector<TypeSet> out;
  for (const auto& set : gm.info_sets(i)) {
    TypeSet t = gm.model().all_types(i);
    for (NodeId h = set.nodes.front(); h != gm.root(); h = gm.parent(h)) {
      const TypeSet a = gm.move(h)[static_cast<std::size_t>(i)];
      if (a) {
        t = a;
        break;
      }
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace

bool common_strategy(const Mechanism& gm, NodeId z1, NodeId z2, AgentSet excluded) {
  std::vector<AgentId> who;
  for (AgentId i = 0; i < gm.agent_count(); ++i) {
    if (!(excluded & agent_bit(i))) who.push_back(i);
  }
  return for_each_profile(gm, who, [&](const auto& s) { return follows(gm, z1, s, who) && follows(gm, z2, s, who); });
}

std::vector<std::vector<bool>> common_strategy_matrix(const Mechanism& gm, AgentSet excluded) {
  std::vector<AgentId> who;
  for (AgentId i = 0; i < gm.agent_count(); ++i) {
    if (!(excluded & agent_bit(i))) who.push_back(i);
  }
  const auto& zs = gm.terminals();
  std::vector<std::vector<bool>> out(zs.size(), std::vector<bool>(zs.size(), false));
  for_each_profile(gm, who, [&](const auto& s) {
    std::vector<std::size_t> hit;
    for (std::size_t k = 0; k < zs.size(); ++k) {
      if (follows(gm, zs[k], s, who)) hit.push_back(k);
    }
    for (std::size_t a : hit) {
      for (std::size_t b : hit) out[a][b] = true;
    }
    return false;
  });
  return out;
}

bool brute_force_ic(const Mechanism& gm, const ScfTable& f) {
  const auto& model = f.model();
  for (AgentId i = 0; i < gm.agent_count(); ++i) {
    const auto mine = pure_strategies(gm, i);
    const auto theta = reported_before(gm, i);
    std::vector<AgentId> others;
    for (AgentId k = 0; k < gm.agent_count(); ++k) {
      if (k != i) others.push_back(k);
    }
    for (int t = 0; t < model.type_count(i); ++t) {
      std::vector<std::size_t> unconditional;
      for (std::size_t k = 0; k < mine.size(); ++k) {
        bool ok = true;
        for (std::size_t h = 0; h < theta.size(); ++h) {
          if (contains(theta[h], t) && !contains(mine[k][h], t)) ok = false;
        }
        if (ok) unconditional.push_back(k);
      }
      const bool broken = for_each_profile(gm, others, [&](auto s) {
        std::vector<OutcomeId> truthful;
        for (std::size_t u : unconditional) {
          s[static_cast<std::size_t>(i)] = mine[u];
          truthful.push_back(outcome_of(gm, s));
        }
        for (const auto& dev : mine) {
          s[static_cast<std::size_t>(i)] = dev;
          const OutcomeId x = outcome_of(gm, s);
          for (OutcomeId y : truthful) {
            if (model.preference(i, t).strictly_prefers(x, y)) return true;
          }
        }
        return false;
      });
      if (broken) return false;
    }
  }
  return true;
}

bool brute_force_sp(const ScfTable& f) {
  const auto& model = f.model();
  for (ProfileIndex k = 0; k < model.profile_count(); ++k) {
    const auto truth = model.decode(k);
    for (AgentId i = 0; i < model.agent_count(); ++i) {
      for (int lie = 0; lie < model.type_count(i); ++lie) {
        auto dev = truth;
        dev[static_cast<std::size_t>(i)] = lie;
        const int t = truth[static_cast<std::size_t>(i)];
        if (model.preference(i, t).level(f(dev)) < model.preference(i, t).level(f(truth))) return false;
      }
    }
  }
  return true;
}

std::vector<int> ttc(const Priorities& p, const std::vector<std::vector<int>>& prefs) {
  const int n = static_cast<int>(prefs.size());
  std::vector<int> holds(static_cast<std::size_t>(n), -1);
  std::vector<bool> item_gone(static_cast<std::size_t>(n), false);
  int left = n;
  while (left > 0) {
    auto points_to_item = [&](int agent) {
      for (int x : prefs[static_cast<std::size_t>(agent)]) {
        if (!item_gone[static_cast<std::size_t>(x)]) return x;
      }
      return -1;
    };
    auto points_to_agent = [&](int item) {
      for (int a : p[static_cast<std::size_t>(item)]) {
        if (holds[static_cast<std::size_t>(a)] < 0) return a;
      }
      return -1;
    };
    // walk agent -> item -> agent until an agent repeats
    std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
    std::vector<int> walk;
    int a = 0;
    while (holds[static_cast<std::size_t>(a)] >= 0) ++a;
    while (seen_at[static_cast<std::size_t>(a)] < 0) {
      seen_at[static_cast<std::size_t>(a)] = static_cast<int>(walk.size());
      walk.push_back(a);
      a = points_to_agent(points_to_item(a));
    }
    for (std::size_t k = static_cast<std::size_t>(seen_at[static_cast<std::size_t>(a)]); k < walk.size(); ++k) {
      holds[static_cast<std::size_t>(walk[k])] = points_to_item(walk[k]);
    }
    for (std::size_t k = static_cast<std::size_t>(seen_at[static_cast<std::size_t>(a)]); k < walk.size(); ++k) {
      item_gone[static_cast<std::size_t>(holds[static_cast<std::size_t>(walk[k])])] = true;
      --left;
    }
  }
  return holds;
}

}  // namespace oracle
