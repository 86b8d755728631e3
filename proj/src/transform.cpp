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

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gradual {

namespace {

using Path = std::vector<Profile>;
using Sets = std::vector<std::vector<std::vector<NodeId>>>;

std::vector<RawNode> raw_nodes(const Mechanism& gm) {
  std::vector<RawNode> out;
  out.reserve(static_cast<std::size_t>(gm.node_count()));
  for (NodeId h = 0; h < gm.node_count(); ++h) {
    out.push_back(RawNode{gm.parent(h), h == 0 ? Profile{} : gm.move(h), gm.outcome(h)});
  }
  return out;
}

Sets raw_sets(const Mechanism& gm) {
  Sets out(static_cast<std::size_t>(gm.agent_count()));
  for (int i = 0; i < gm.agent_count(); ++i) {
    for (const auto& set : gm.info_sets(i)) out[static_cast<std::size_t>(i)].push_back(set.nodes);
  }
  return out;
}

std::vector<Path> all_paths(const Mechanism& gm) {
  std::vector<Path> out(static_cast<std::size_t>(gm.node_count()));
  for (NodeId h = 1; h < gm.node_count(); ++h) {
    out[static_cast<std::size_t>(h)] = out[static_cast<std::size_t>(gm.parent(h))];
    out[static_cast<std::size_t>(h)].push_back(gm.move(h));
  }
  return out;
}

struct ExtraSet {
  AgentId agent = 0;
  std::vector<Path> nodes;
};

// Builds a mechanism from histories given as paths, each mapped to the node
// of gm it inherits outcome and information sets from (kNoNode when the
// agents acting there are all covered by `extra`).
Mechanism rebuild(const Mechanism& gm, const std::map<Path, NodeId>& origin, const std::vector<ExtraSet>& extra) {
  std::map<Path, NodeId> id;
  std::vector<const Path*> by_id;
  for (const auto& [path, from] : origin) {
    id.emplace(path, static_cast<NodeId>(by_id.size()));
    by_id.push_back(&path);
  }
  if (by_id.empty() || !by_id.front()->empty()) throw GradualError("rebuilt tree has no root");
  const int n = gm.agent_count();
  std::vector<RawNode> raw(by_id.size());
  std::vector<AgentSet> active(by_id.size(), 0);
  for (std::size_t k = 1; k < by_id.size(); ++k) {
    const Path& p = *by_id[k];
    auto it = id.find(Path(p.begin(), p.end() - 1));
    if (it == id.end()) throw GradualError("rebuilt tree is not prefix closed");
    raw[k].parent = it->second;
    raw[k].move = p.back();
    for (int i = 0; i < n; ++i) {
      if (p.back()[static_cast<std::size_t>(i)] != 0) active[static_cast<std::size_t>(it->second)] |= agent_bit(i);
    }
  }
  std::set<std::pair<NodeId, AgentId>> covered;
  Sets sets(static_cast<std::size_t>(n));
  for (const auto& e : extra) {
    std::vector<NodeId> nodes;
    for (const Path& p : e.nodes) {
      const NodeId v = id.at(p);
      nodes.push_back(v);
      covered.emplace(v, e.agent);
    }
    sets[static_cast<std::size_t>(e.agent)].push_back(std::move(nodes));
  }
  std::map<std::pair<AgentId, int>, std::vector<NodeId>> groups;
  for (std::size_t k = 0; k < by_id.size(); ++k) {
    const NodeId from = origin.at(*by_id[k]);
    if (active[k] == 0) {
      if (from == kNoNode || !gm.outcome(from)) throw GradualError("rebuilt terminal has no outcome");
      raw[k].outcome = gm.outcome(from);
      continue;
    }
    for (int i = 0; i < n; ++i) {
      if ((active[k] & agent_bit(i)) == 0 || covered.contains({static_cast<NodeId>(k), i})) continue;
      const int local = from == kNoNode ? -1 : gm.info_set_of(from, i);
      if (local < 0) throw GradualError("rebuilt decision node has no information set");
      groups[{i, local}].push_back(static_cast<NodeId>(k));
    }
  }
  for (auto& [key, nodes] : groups) sets[static_cast<std::size_t>(key.first)].push_back(std::move(nodes));
  return Mechanism(gm.model_ptr(), std::move(raw), std::move(sets));
}

void check_info_set(const Mechanism& gm, AgentId i, int local) {
  if (i < 0 || i >= gm.agent_count()) throw GradualError("unknown agent");
  if (local < 0 || local >= static_cast<int>(gm.info_sets(i).size())) {
    throw GradualError("agent " + gm.model().agent_name(i) + " has no information set " + std::to_string(local));
  }
}

bool has_action(const Mechanism& gm, AgentId i, int local, TypeSet a) {
  const auto acts = gm.actions(gm.info_set(i, local).nodes.front(), i);
  return std::find(acts.begin(), acts.end(), a) != acts.end();
}

// The nearest ancestor of z (excluding z) where i is active.
NodeId last_own_node(const Mechanism& gm, AgentId i, NodeId z) {
  for (NodeId a = gm.parent(z); a != kNoNode; a = gm.parent(a)) {
    if (gm.is_active(a, i)) return a;
  }
  return kNoNode;
}

// Own-action sequence from the member of `from_set` on the path to h (inclusive) up to h (exclusive).
std::vector<TypeSet> own_actions_since(const Mechanism& gm, AgentId i, int from_set, NodeId h) {
  std::vector<TypeSet> out;
  NodeId below = h;
  for (NodeId a = gm.parent(h); a != kNoNode; below = a, a = gm.parent(a)) {
    if (!gm.is_active(a, i)) continue;
    out.push_back(gm.move(below)[static_cast<std::size_t>(i)]);
    if (gm.info_set_of(a, i) == from_set) {
      std::reverse(out.begin(), out.end());
      return out;
    }
  }
  return {};
}

// Whether some node of `set` precedes or equals h.
bool after_any(const Mechanism& gm, const std::vector<NodeId>& set, NodeId h) {
  for (NodeId a = h; a != kNoNode; a = gm.parent(a)) {
    if (std::binary_search(set.begin(), set.end(), a)) return true;
  }
  return false;
}

std::vector<NodeId> sorted(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_ill(const Mechanism& gm, const Ill& t) {
  check_info_set(gm, t.agent, t.info_set);
  if (t.part1.empty() || t.part2.empty()) throw GradualError("ILL parts must be non-empty");
  std::vector<NodeId> both = t.part1;
  both.insert(both.end(), t.part2.begin(), t.part2.end());
  both = sorted(both);
  if (std::adjacent_find(both.begin(), both.end()) != both.end()) throw GradualError("ILL parts overlap");
  if (both != gm.info_set(t.agent, t.info_set).nodes) throw GradualError("ILL parts do not partition the information set");
}

}  // namespace

Kind kind_of(const Transformation& t) { return static_cast<Kind>(t.index()); }

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::spl: return "SPL";
    case Kind::coa: return "COA";
    case Kind::ill: return "ILL";
    case Kind::inverse_ill: return "inverse-ILL";
    case Kind::uncoalesce: return "uncoalesce";
  }
  return "?";
}

std::vector<NodeId> spl_terminals(const Mechanism& gm, AgentId i, int info_set, TypeSet action) {
  const auto& set = gm.info_set(i, info_set).nodes;
  std::vector<NodeId> out;
  for (NodeId z : gm.terminals()) {
    if (gm.theta(z, i) != action) continue;
    for (NodeId h : set) {
      if (gm.precedes(h, z)) {
        out.push_back(z);
        break;
      }
    }
  }
  return out;
}

Mechanism apply_spl(const Mechanism& gm, const Spl& t) {
  check_info_set(gm, t.agent, t.info_set);
  const AgentId i = t.agent;
  if (!has_action(gm, i, t.info_set, t.action)) throw GradualError("SPL action is not available at the information set");
  if (t.part1 == 0 || t.part2 == 0 || (t.part1 & t.part2) != 0 || (t.part1 | t.part2) != t.action) {
    throw GradualError("SPL parts must partition the action into two non-empty sets");
  }
  const auto bar = spl_terminals(gm, i, t.info_set, t.action);
  if (bar.empty()) throw GradualError("SPL has no terminal histories to extend");
  for (NodeId z : bar) {
    if (gm.info_set_of(last_own_node(gm, i, z), i) != t.info_set) {
      throw GradualError("SPL agent makes a further decision after the action");
    }
  }
  auto raw = raw_nodes(gm);
  auto sets = raw_sets(gm);
  std::vector<NodeId> fresh;
  for (NodeId z : bar) {
    const auto x = raw[static_cast<std::size_t>(z)].outcome;
    raw[static_cast<std::size_t>(z)].outcome.reset();
    for (TypeSet part : {t.part1, t.part2}) {
      Profile move(static_cast<std::size_t>(gm.agent_count()), 0);
      move[static_cast<std::size_t>(i)] = part;
      raw.push_back(RawNode{z, move, x});
    }
    fresh.push_back(z);
  }
  sets[static_cast<std::size_t>(i)].push_back(fresh);
  return Mechanism(gm.model_ptr(), std::move(raw), std::move(sets));
}

Mechanism apply_coa(const Mechanism& gm, const Coa& t) {
  const AgentId i = t.agent;
  check_info_set(gm, i, t.info_set);
  check_info_set(gm, i, t.successor);
  const auto pred = own_predecessor(gm, i, t.successor);
  if (!pred || pred->info_set != t.info_set || pred->action != t.action) {
    throw GradualError("COA successor does not immediately follow the action at the information set");
  }
  const auto& top = gm.info_set(i, t.info_set).nodes;
  const auto& low = gm.info_set(i, t.successor).nodes;
  if (theta_others(gm, i, top) != theta_others(gm, i, low)) {
    throw GradualError("COA requires equal information about the other agents at both information sets");
  }
  const auto menu = gm.actions(low.front(), i);
  const auto paths = all_paths(gm);
  const auto ii = static_cast<std::size_t>(i);

  std::map<Path, NodeId> origin;
  std::vector<std::pair<Path, NodeId>> third;
  for (NodeId v = 0; v < gm.node_count(); ++v) {
    NodeId c = kNoNode;
    NodeId m = kNoNode;
    for (NodeId u = v; u != gm.root(); u = gm.parent(u)) {
      if (m == kNoNode && u != v && gm.info_set_of(u, i) == t.successor) m = u;
      if (std::binary_search(top.begin(), top.end(), gm.parent(u)) && gm.move(u)[ii] == t.action) {
        c = u;
        break;
      }
    }
    const Path& p = paths[static_cast<std::size_t>(v)];
    if (c == kNoNode) {
      origin.emplace(p, v);
      continue;
    }
    const auto sc = static_cast<std::size_t>(gm.depth(c) - 1);
    if (m == kNoNode) {
      for (TypeSet bar : menu) {
        Path q = p;
        q[sc][ii] = bar;
        origin.emplace(std::move(q), v);
      }
      continue;
    }
    const auto sm = static_cast<std::size_t>(gm.depth(m));
    Path q = paths[static_cast<std::size_t>(m)];
    q[sc][ii] = p[sm][ii];
    Profile step = p[sm];
    step[ii] = 0;
    if (std::any_of(step.begin(), step.end(), [](TypeSet a) { return a != 0; })) q.push_back(step);
    q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(sm) + 1, p.end());
    third.emplace_back(std::move(q), v);
  }
  for (auto& [q, v] : third) origin[q] = v;
  return rebuild(gm, origin, {});
}

Mechanism apply_ill(const Mechanism& gm, const Ill& t) {
  check_ill(gm, t);
  const AgentId i = t.agent;
  const auto part1 = sorted(t.part1);
  const auto whole = gm.info_set(i, t.info_set).nodes;
  auto sets = raw_sets(gm);
  auto& mine = sets[static_cast<std::size_t>(i)];
  Sets::value_type next;
  for (const auto& set : mine) {
    if (!after_any(gm, whole, set.front())) {
      next.push_back(set);
      continue;
    }
    std::vector<NodeId> a;
    std::vector<NodeId> b;
    for (NodeId h : set) (after_any(gm, part1, h) ? a : b).push_back(h);
    if (!a.empty()) next.push_back(std::move(a));
    if (!b.empty()) next.push_back(std::move(b));
  }
  mine = std::move(next);
  return Mechanism(gm.model_ptr(), raw_nodes(gm), std::move(sets));
}

Mechanism apply_inverse_ill(const Mechanism& gm, const InverseIll& t) {
  const AgentId i = t.agent;
  check_info_set(gm, i, t.first);
  check_info_set(gm, i, t.second);
  if (t.first == t.second) throw GradualError("inverse ILL needs two distinct information sets");
  const auto p1 = own_predecessor(gm, i, t.first);
  const auto p2 = own_predecessor(gm, i, t.second);
  if (!p1 || !p2 || p1->info_set != p2->info_set || p1->action != p2->action) {
    throw GradualError("inverse ILL information sets do not follow the same action");
  }
  const auto& h1 = gm.info_set(i, t.first).nodes;
  const auto& h2 = gm.info_set(i, t.second).nodes;
  if (gm.actions(h1.front(), i) != gm.actions(h2.front(), i)) {
    throw GradualError("inverse ILL information sets offer different actions");
  }
  // Successors on each side keyed by the agent's own actions since the split.
  std::map<std::vector<TypeSet>, std::vector<int>> side1;
  std::map<std::vector<TypeSet>, std::vector<int>> side2;
  std::vector<bool> touched(gm.info_sets(i).size(), false);
  for (int k = 0; k < static_cast<int>(gm.info_sets(i).size()); ++k) {
    const NodeId h = gm.info_set(i, k).nodes.front();
    if (k == t.first || k == t.second) continue;
    if (after_any(gm, h1, h)) {
      side1[own_actions_since(gm, i, t.first, h)].push_back(k);
      touched[static_cast<std::size_t>(k)] = true;
    } else if (after_any(gm, h2, h)) {
      side2[own_actions_since(gm, i, t.second, h)].push_back(k);
      touched[static_cast<std::size_t>(k)] = true;
    }
  }
  auto sets = raw_sets(gm);
  Sets::value_type next;
  for (int k = 0; k < static_cast<int>(gm.info_sets(i).size()); ++k) {
    if (!touched[static_cast<std::size_t>(k)] && k != t.first && k != t.second) next.push_back(gm.info_set(i, k).nodes);
  }
  auto merge = [&](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::vector<NodeId> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return sorted(out);
  };
  next.push_back(merge(h1, h2));
  std::set<std::vector<TypeSet>> keys;
  for (const auto& [key, v] : side1) keys.insert(key);
  for (const auto& [key, v] : side2) keys.insert(key);
  for (const auto& key : keys) {
    const auto a = side1.contains(key) ? side1[key] : std::vector<int>{};
    const auto b = side2.contains(key) ? side2[key] : std::vector<int>{};
    if (a.size() > 1 || b.size() > 1) throw GradualError("inverse ILL cannot pair the successor information sets");
    const std::vector<NodeId> none;
    next.push_back(merge(a.empty() ? none : gm.info_set(i, a[0]).nodes, b.empty() ? none : gm.info_set(i, b[0]).nodes));
  }
  sets[static_cast<std::size_t>(i)] = std::move(next);
  Mechanism merged(gm.model_ptr(), raw_nodes(gm), std::move(sets));
  if (!validate(merged).ok()) throw GradualError("inverse ILL breaks the game-form assumptions");
  const auto local = merged.find_info_set(i, merge(h1, h2));
  if (!local || !(apply_ill(merged, Ill{i, *local, h1, h2}) == gm)) {
    throw GradualError("inverse ILL is not undone by the corresponding ILL");
  }
  return merged;
}

Mechanism apply_uncoalesce(const Mechanism& gm, const Uncoalesce& t) {
  const AgentId i = t.agent;
  check_info_set(gm, i, t.info_set);
  if (t.group.size() < 2) throw GradualError("uncoalescing needs at least two actions");
  TypeSet coarse = 0;
  for (TypeSet a : t.group) {
    if (!has_action(gm, i, t.info_set, a)) throw GradualError("uncoalescing names an unavailable action");
    if ((coarse & a) != 0) throw GradualError("uncoalescing lists an action twice");
    coarse |= a;
  }
  const auto& top = gm.info_set(i, t.info_set).nodes;
  const auto paths = all_paths(gm);
  const auto ii = static_cast<std::size_t>(i);
  std::map<Path, NodeId> origin;
  std::set<Path> pooled;
  for (NodeId v = 0; v < gm.node_count(); ++v) {
    NodeId c = kNoNode;
    for (NodeId u = v; u != gm.root(); u = gm.parent(u)) {
      if (std::binary_search(top.begin(), top.end(), gm.parent(u)) && (gm.move(u)[ii] & coarse) != 0) {
        c = u;
        break;
      }
    }
    const Path& p = paths[static_cast<std::size_t>(v)];
    if (c == kNoNode) {
      origin.emplace(p, v);
      continue;
    }
    const auto sc = static_cast<std::size_t>(gm.depth(c) - 1);
    Path q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(sc) + 1);
    q[sc][ii] = coarse;
    pooled.insert(q);
    Profile step(static_cast<std::size_t>(gm.agent_count()), 0);
    step[ii] = p[sc][ii];
    q.push_back(step);
    q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(sc) + 1, p.end());
    origin.emplace(std::move(q), v);
  }
  for (const Path& q : pooled) origin.emplace(q, kNoNode);
  return rebuild(gm, origin, {ExtraSet{i, std::vector<Path>(pooled.begin(), pooled.end())}});
}

Mechanism apply(const Mechanism& gm, const Transformation& t) {
  return std::visit(
      [&](const auto& x) -> Mechanism {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Spl>) return apply_spl(gm, x);
        if constexpr (std::is_same_v<T, Coa>) return apply_coa(gm, x);
        if constexpr (std::is_same_v<T, Ill>) return apply_ill(gm, x);
        if constexpr (std::is_same_v<T, InverseIll>) return apply_inverse_ill(gm, x);
        if constexpr (std::is_same_v<T, Uncoalesce>) return apply_uncoalesce(gm, x);
      },
      t);
}

Verdict is_incentive_preserving(const Mechanism& gm, const Ill& t, const ScfTable& f) {
  require_valid(gm, f);
  check_ill(gm, t);
  const AgentId i = t.agent;
  std::vector<NodeId> below1;
  std::vector<NodeId> below2;
  const auto part1 = sorted(t.part1);
  const auto part2 = sorted(t.part2);
  for (NodeId z : gm.terminals()) {
    if (after_any(gm, part1, z)) below1.push_back(z);
    if (after_any(gm, part2, z)) below2.push_back(z);
  }
  for (AgentId j = 0; j < gm.agent_count(); ++j) {
    if (j == i) continue;
    const AgentSet excluded = agent_bit(i) | agent_bit(j);
    for (int order = 0; order < 2; ++order) {
      const auto& left = order == 0 ? below1 : below2;
      const auto& right = order == 0 ? below2 : below1;
      for (NodeId z1 : left) {
        for (NodeId z2 : right) {
          if (!consistent_pair(gm, z1, z2, excluded)) continue;
          if (auto ty = detail::harmful_type(gm, j, z1, z2)) {
            Witness w = detail::pair_witness(gm, "ill", j, *ty, z1, z2);
            w.reactor = i;
            w.info_set1 = t.info_set;
            w.info_set2 = t.info_set;
            return {false, std::move(w)};
          }
        }
      }
    }
  }
  return {};
}

std::optional<Coa> first_coa(const Mechanism& gm) {
  for (AgentId i = 0; i < gm.agent_count(); ++i) {
    const int count = static_cast<int>(gm.info_sets(i).size());
    for (int k = 0; k < count; ++k) {
      const auto pred = own_predecessor(gm, i, k);
      if (!pred) continue;
      if (theta_others(gm, i, gm.info_set(i, pred->info_set).nodes) == theta_others(gm, i, gm.info_set(i, k).nodes)) {
        return Coa{i, pred->info_set, k, pred->action};
      }
    }
  }
  return std::nullopt;
}

std::vector<Transformation> find_opportunities(const Mechanism& gm, Kind kind, const OpportunityLimits& limits) {
  std::vector<Transformation> out;
  for (AgentId i = 0; i < gm.agent_count(); ++i) {
    const int count = static_cast<int>(gm.info_sets(i).size());
    for (int k = 0; k < count; ++k) {
      const auto& nodes = gm.info_set(i, k).nodes;
      const auto acts = gm.actions(nodes.front(), i);
      switch (kind) {
        case Kind::spl:
          for (TypeSet a : acts) {
            if (size_of(a) < 2 || size_of(a) > limits.max_spl_action_size) continue;
            const auto bar = spl_terminals(gm, i, k, a);
            if (bar.empty()) continue;
            if (std::any_of(bar.begin(), bar.end(),
                            [&](NodeId z) { return gm.info_set_of(last_own_node(gm, i, z), i) != k; })) {
              continue;
            }
            const TypeSet low = singleton(lowest(a));
            const TypeSet rest = a & ~low;
            for (TypeSet sub = 0;; sub = (sub - rest) & rest) {
              if (sub != rest) out.push_back(Spl{i, k, a, low | sub, rest & ~sub});
              if (sub == rest) break;
            }
          }
          break;
        case Kind::coa: {
          const auto pred = own_predecessor(gm, i, k);
          if (pred && theta_others(gm, i, gm.info_set(i, pred->info_set).nodes) == theta_others(gm, i, nodes)) {
            out.push_back(Coa{i, pred->info_set, k, pred->action});
          }
          break;
        }
        case Kind::ill: {
          const int size = static_cast<int>(nodes.size());
          if (size < 2 || size > limits.max_ill_set_size) break;
          for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << (size - 1)); ++mask) {
            Ill t{i, k, {nodes[0]}, {}};
            for (int b = 1; b < size; ++b) {
              ((mask >> (b - 1)) & 1U ? t.part1 : t.part2).push_back(nodes[static_cast<std::size_t>(b)]);
            }
            out.push_back(std::move(t));
          }
          break;
        }
        case Kind::inverse_ill:
          break;
        case Kind::uncoalesce: {
          if (acts.size() < 2 || acts.size() > 6) break;
          const std::uint32_t full = (std::uint32_t{1} << acts.size()) - 1;
          for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (std::popcount(mask) < 2) continue;
            Uncoalesce t{i, k, {}};
            for (std::size_t b = 0; b < acts.size(); ++b) {
              if ((mask >> b) & 1U) t.group.push_back(acts[b]);
            }
            out.push_back(std::move(t));
          }
          break;
        }
      }
    }
  }
  if (kind == Kind::inverse_ill) {
    for (const auto& sp : siblings_same_action(gm)) {
      try {
        apply_inverse_ill(gm, InverseIll{sp.agent, sp.first, sp.second});
        out.push_back(InverseIll{sp.agent, sp.first, sp.second});
      } catch (const GradualError&) {
      }
    }
  }
  return out;
}

std::string describe(const Mechanism& gm, const Transformation& t) {
  const auto& model = gm.model();
  auto set_name = [&](AgentId i, TypeSet s) {
    std::string out = "{";
    bool first = true;
    for (int ty : members(s)) {
      if (!first) out += ",";
      first = false;
      out += model.type_name(i, ty);
    }
    return out + "}";
  };
  auto nodes_name = [](const std::vector<NodeId>& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out + "]";
  };
  std::ostringstream out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const std::string& who = model.agent_name(x.agent);
        if constexpr (std::is_same_v<T, Spl>) {
          out << "SPL agent " << who << " set " << x.info_set << " action " << set_name(x.agent, x.action) << " into "
              << set_name(x.agent, x.part1) << " + " << set_name(x.agent, x.part2);
        } else if constexpr (std::is_same_v<T, Coa>) {
          out << "COA agent " << who << " set " << x.successor << " into set " << x.info_set << " over action "
              << set_name(x.agent, x.action);
        } else if constexpr (std::is_same_v<T, Ill>) {
          out << "ILL agent " << who << " set " << x.info_set << " as " << nodes_name(x.part1) << " | "
              << nodes_name(x.part2);
        } else if constexpr (std::is_same_v<T, InverseIll>) {
          out << "inverse-ILL agent " << who << " sets " << x.first << " and " << x.second;
        } else {
          out << "uncoalesce agent " << who << " set " << x.info_set << " actions";
          for (TypeSet a : x.group) out << " " << set_name(x.agent, a);
        }
      },
      t);
  return out.str();
}

}  // namespace gradual
