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

#include "gradual/mechanism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gradual {

namespace {

std::string node_label(NodeId h) { return "node " + std::to_string(h); }

}  // namespace

Mechanism::Mechanism(std::shared_ptr<const TypeModel> model, std::vector<RawNode> nodes,
                     std::vector<std::vector<std::vector<NodeId>>> info_sets)
    : model_(std::move(model)) {
  if (!model_) throw GradualError("mechanism needs a type model");
  info_sets.resize(static_cast<std::size_t>(agent_count()));
  check_structure(nodes);
  for (const auto& per_agent : info_sets) {
    for (const auto& set : per_agent) {
      for (NodeId h : set) {
        if (h < 0 || h >= static_cast<NodeId>(nodes.size())) {
          structural_issues_.push_back("information set names unknown node " + std::to_string(h));
        }
      }
    }
  }
  info_sets_.resize(static_cast<std::size_t>(agent_count()));
  if (!well_formed()) {
    info_set_base_.assign(static_cast<std::size_t>(agent_count()) + 1, 0);
    truthful_.assign(model_->profile_count(), kNoNode);
    return;
  }
  canonicalize(std::move(nodes), std::move(info_sets));
  compute_caches();
}

void Mechanism::check_structure(const std::vector<RawNode>& raw) {
  const auto n = static_cast<NodeId>(raw.size());
  if (n == 0) {
    structural_issues_.emplace_back("mechanism has no root");
    return;
  }
  if (raw[0].parent != kNoNode) structural_issues_.emplace_back("node 0 must be the root");
  for (NodeId h = 1; h < n; ++h) {
    const auto& r = raw[static_cast<std::size_t>(h)];
    if (r.parent < 0 || r.parent >= n || r.parent == h) {
      structural_issues_.push_back(node_label(h) + " has dangling predecessor " + std::to_string(r.parent));
      continue;
    }
    if (static_cast<int>(r.move.size()) != agent_count()) {
      structural_issues_.push_back(node_label(h) + " has an action profile of the wrong width");
    }
  }
  if (!structural_issues_.empty()) return;
  // every node must reach the root
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 unknown, 1 reaches root
  state[0] = 1;
  for (NodeId h = 1; h < n; ++h) {
    std::vector<NodeId> trail;
    NodeId cur = h;
    while (state[static_cast<std::size_t>(cur)] == 0 && static_cast<NodeId>(trail.size()) <= n) {
      trail.push_back(cur);
      cur = raw[static_cast<std::size_t>(cur)].parent;
    }
    if (state[static_cast<std::size_t>(cur)] != 1) {
      structural_issues_.push_back(node_label(h) + " lies on a predecessor cycle");
      return;
    }
    for (NodeId t : trail) state[static_cast<std::size_t>(t)] = 1;
  }
}

void Mechanism::canonicalize(std::vector<RawNode> raw, std::vector<std::vector<std::vector<NodeId>>> sets) {
  const std::size_t n = raw.size();
  std::vector<std::vector<NodeId>> kids(n);
  for (std::size_t h = 1; h < n; ++h) kids[static_cast<std::size_t>(raw[h].parent)].push_back(static_cast<NodeId>(h));
  std::vector<NodeId> order;
  std::vector<NodeId> renumber(n, kNoNode);
  order.reserve(n);
  order.push_back(0);
  renumber[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    auto& ks = kids[static_cast<std::size_t>(order[head])];
    std::stable_sort(ks.begin(), ks.end(), [&](NodeId a, NodeId b) {
      return raw[static_cast<std::size_t>(a)].move < raw[static_cast<std::size_t>(b)].move;
    });
    for (NodeId k : ks) {
      renumber[static_cast<std::size_t>(k)] = static_cast<NodeId>(order.size());
      order.push_back(k);
    }
  }
  nodes_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto& src = raw[static_cast<std::size_t>(order[k])];
    auto& dst = nodes_[k];
    dst.parent = src.parent == kNoNode ? kNoNode : renumber[static_cast<std::size_t>(src.parent)];
    dst.move = std::move(src.move);
    dst.outcome = src.outcome;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto& set : sets[i]) {
      InfoSet info{static_cast<AgentId>(i), {}};
      for (NodeId h : set) info.nodes.push_back(renumber[static_cast<std::size_t>(h)]);
      std::sort(info.nodes.begin(), info.nodes.end());
      info_sets_[i].push_back(std::move(info));
    }
    std::sort(info_sets_[i].begin(), info_sets_[i].end(),
              [](const InfoSet& a, const InfoSet& b) { return a.nodes < b.nodes; });
  }
}

void Mechanism::compute_caches() {
  const int n = agent_count();
  const auto count = static_cast<std::size_t>(node_count());
  for (std::size_t h = 1; h < count; ++h) {
    auto& node = nodes_[h];
    auto& up = nodes_[static_cast<std::size_t>(node.parent)];
    up.children.push_back(static_cast<NodeId>(h));
    node.depth = up.depth + 1;
  }
  for (auto& node : nodes_) {
    if (node.children.empty()) continue;
    const Profile& first = nodes_[static_cast<std::size_t>(node.children.front())].move;
    for (int i = 0; i < n; ++i) {
      if (first[static_cast<std::size_t>(i)] != 0) node.active |= agent_bit(i);
    }
  }

  theta_.assign(count * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) theta_[static_cast<std::size_t>(i)] = model_->all_types(i);
  for (std::size_t h = 1; h < count; ++h) {
    const auto& node = nodes_[h];
    for (int i = 0; i < n; ++i) {
      const TypeSet m = node.move[static_cast<std::size_t>(i)];
      theta_[h * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
          m != 0 ? m
                 : theta_[static_cast<std::size_t>(node.parent) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(i)];
    }
  }

  info_set_of_.assign(count * static_cast<std::size_t>(n), -1);
  info_set_base_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const auto& sets = info_sets_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < sets.size(); ++k) {
      for (NodeId h : sets[k].nodes) {
        info_set_of_[static_cast<std::size_t>(h) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
            static_cast<int>(k);
      }
    }
    info_set_base_[static_cast<std::size_t>(i) + 1] =
        info_set_base_[static_cast<std::size_t>(i)] + static_cast<int>(sets.size());
  }

  dfs_in_.assign(count, 0);
  dfs_out_.assign(count, 0);
  int clock = 0;
  std::vector<std::pair<NodeId, std::size_t>> stack{{0, 0}};
  dfs_in_[0] = clock++;
  while (!stack.empty()) {
    auto& [h, next] = stack.back();
    const auto& kids = nodes_[static_cast<std::size_t>(h)].children;
    if (next < kids.size()) {
      const NodeId c = kids[next++];
      dfs_in_[static_cast<std::size_t>(c)] = clock++;
      stack.emplace_back(c, 0);
    } else {
      dfs_out_[static_cast<std::size_t>(h)] = clock;
      stack.pop_back();
    }
  }

  for (std::size_t h = 0; h < count; ++h) {
    if (nodes_[h].children.empty()) terminals_.push_back(static_cast<NodeId>(h));
  }

  decision_offset_.assign(count + 1, 0);
  for (NodeId z : terminals_) {
    const std::size_t start = decisions_.size();
    NodeId below = z;
    for (NodeId a = parent(z); a != kNoNode; below = a, a = parent(a)) {
      const AgentSet act = active(a);
      for (int i = 0; i < n; ++i) {
        if ((act & agent_bit(i)) == 0) continue;
        const int local = info_set_of(a, i);
        if (local < 0) continue;
        decisions_.push_back(Decision{global_id(i, local), i, a, move(below)[static_cast<std::size_t>(i)]});
      }
    }
    std::sort(decisions_.begin() + static_cast<std::ptrdiff_t>(start), decisions_.end(),
              [](const Decision& x, const Decision& y) {
                return x.info_set != y.info_set ? x.info_set < y.info_set : x.node < y.node;
              });
    decision_offset_[static_cast<std::size_t>(z)] = static_cast<int>(start);
    decision_offset_[static_cast<std::size_t>(z) + 1] = static_cast<int>(decisions_.size());
  }

  truthful_.assign(model_->profile_count(), kNoNode);
  for (NodeId z : terminals_) {
    model_->for_each_profile(theta(z), [&](ProfileIndex p) {
      if (truthful_[p] == kNoNode) truthful_[p] = z;
    });
  }
}

Profile Mechanism::theta(NodeId h) const {
  const auto n = static_cast<std::size_t>(agent_count());
  auto first = theta_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(h) * n);
  return Profile(first, first + static_cast<std::ptrdiff_t>(n));
}

std::vector<TypeSet> Mechanism::actions(NodeId h, AgentId i) const {
  std::vector<TypeSet> out;
  for (NodeId c : children(h)) {
    const TypeSet a = move(c)[static_cast<std::size_t>(i)];
    if (a != 0) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NodeId> Mechanism::path(NodeId h) const {
  std::vector<NodeId> out;
  for (NodeId a = h; a != kNoNode; a = parent(a)) out.push_back(a);
  std::reverse(out.begin(), out.end());
  return out;
}

NodeId Mechanism::child_toward(NodeId ancestor, NodeId descendant) const {
  NodeId cur = descendant;
  while (cur != kNoNode && parent(cur) != ancestor) cur = parent(cur);
  return cur;
}

AgentId Mechanism::agent_of_global(int gid) const {
  auto it = std::upper_bound(info_set_base_.begin(), info_set_base_.end(), gid);
  return static_cast<AgentId>(it - info_set_base_.begin()) - 1;
}

std::optional<int> Mechanism::find_info_set(AgentId i, std::vector<NodeId> nodes) const {
  if (i < 0 || i >= agent_count() || nodes.empty()) return std::nullopt;
  std::sort(nodes.begin(), nodes.end());
  if (nodes.front() < 0 || nodes.back() >= node_count()) return std::nullopt;
  const int local = info_set_of(nodes.front(), i);
  if (local < 0 || info_set(i, local).nodes != nodes) return std::nullopt;
  return local;
}

std::span<const Decision> Mechanism::decisions(NodeId z) const {
  const auto b = static_cast<std::size_t>(decision_offset_[static_cast<std::size_t>(z)]);
  const auto e = static_cast<std::size_t>(decision_offset_[static_cast<std::size_t>(z) + 1]);
  return std::span<const Decision>(decisions_.data() + b, e - b);
}

bool Mechanism::is_static() const {
  for (int i = 0; i < agent_count(); ++i) {
    const auto& sets = info_sets(i);
    if (sets.size() != 1 || sets[0].nodes != std::vector<NodeId>{root()}) return false;
  }
  return true;
}

bool operator==(const Mechanism& a, const Mechanism& b) {
  if (a.model_ != b.model_ && !(*a.model_ == *b.model_)) return false;
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t k = 0; k < a.nodes_.size(); ++k) {
    const auto& x = a.nodes_[k];
    const auto& y = b.nodes_[k];
    if (x.parent != y.parent || x.move != y.move || x.outcome != y.outcome) return false;
  }
  for (std::size_t i = 0; i < a.info_sets_.size(); ++i) {
    const auto& p = a.info_sets_[i];
    const auto& q = b.info_sets_[i];
    if (p.size() != q.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k].nodes != q[k].nodes) return false;
    }
  }
  return a.structural_issues_ == b.structural_issues_;
}

std::uint64_t Mechanism::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  mix(nodes_.size());
  for (const auto& node : nodes_) {
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(node.parent)));
    for (TypeSet a : node.move) mix(a);
    mix(node.outcome ? static_cast<std::uint64_t>(*node.outcome) : ~std::uint64_t{0});
  }
  for (const auto& sets : info_sets_) {
    mix(sets.size());
    for (const auto& set : sets) {
      mix(set.nodes.size());
      for (NodeId v : set.nodes) mix(static_cast<std::uint64_t>(v));
    }
  }
  return h;
}

MechanismBuilder::MechanismBuilder(std::shared_ptr<const TypeModel> model)
    : model_(std::move(model)), info_sets_(static_cast<std::size_t>(model_->agent_count())) {
  nodes_.push_back(RawNode{});
}

NodeId MechanismBuilder::add_child(NodeId parent, Profile move) {
  if (static_cast<int>(move.size()) != model_->agent_count()) {
    throw GradualError("action profile width does not match the agent count");
  }
  nodes_.push_back(RawNode{parent, std::move(move), std::nullopt});
  return static_cast<NodeId>(nodes_.size()) - 1;
}

void MechanismBuilder::set_outcome(NodeId h, OutcomeId x) { nodes_[static_cast<std::size_t>(h)].outcome = x; }

void MechanismBuilder::add_info_set(AgentId i, std::vector<NodeId> nodes) {
  info_sets_[static_cast<std::size_t>(i)].push_back(std::move(nodes));
}

void MechanismBuilder::singleton_info_sets(AgentId i) {
  std::set<NodeId> covered;
  for (const auto& set : info_sets_[static_cast<std::size_t>(i)]) covered.insert(set.begin(), set.end());
  std::set<NodeId> deciding;
  for (std::size_t h = 1; h < nodes_.size(); ++h) {
    if (nodes_[h].move[static_cast<std::size_t>(i)] != 0) deciding.insert(nodes_[h].parent);
  }
  for (NodeId h : deciding) {
    if (!covered.contains(h)) info_sets_[static_cast<std::size_t>(i)].push_back({h});
  }
}

Mechanism MechanismBuilder::build() const { return Mechanism(model_, nodes_, info_sets_); }

// ---------------------------------------------------------------------------

namespace {

/// Own experience of agent i at h: (information set, action) pairs at the
/// agent's earlier decision nodes.
std::vector<std::pair<int, TypeSet>> own_experience(const Mechanism& gm, NodeId h, AgentId i) {
  std::vector<std::pair<int, TypeSet>> out;
  NodeId below = h;
  for (NodeId a = gm.parent(h); a != kNoNode; below = a, a = gm.parent(a)) {
    if (gm.is_active(a, i)) out.emplace_back(gm.info_set_of(a, i), gm.move(below)[static_cast<std::size_t>(i)]);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

ValidationReport validate(const Mechanism& gm, const ScfTable* f) {
  ValidationReport report;
  auto add = [&](std::string rule, NodeId h, AgentId i, std::string message) {
    report.violations.push_back(Violation{std::move(rule), h, i, std::move(message)});
  };
  for (const auto& issue : gm.structural_issues()) add("structure", kNoNode, -1, issue);
  if (!gm.well_formed()) return report;

  const TypeModel& model = gm.model();
  const int n = gm.agent_count();
  const AgentSet everyone = n >= kMaxAgents ? ~AgentSet{0} : (AgentSet{1} << n) - 1;

  if (!gm.is_terminal(gm.root()) && gm.active(gm.root()) != everyone) {
    add("root-activity", gm.root(), -1, "every agent must be active at the initial history");
  }

  for (NodeId h = 0; h < gm.node_count(); ++h) {
    if (gm.is_terminal(h)) {
      const auto x = gm.outcome(h);
      if (!x) {
        add("outcome", h, -1, "terminal " + node_label(h) + " has no outcome");
      } else if (*x < 0 || *x >= model.outcome_count()) {
        add("outcome", h, -1, "terminal " + node_label(h) + " names an unknown outcome");
      }
      continue;
    }
    if (gm.outcome(h)) add("outcome", h, -1, node_label(h) + " is not terminal but carries an outcome");
    const AgentSet act = gm.active(h);
    if (act == 0) add("active-players", h, -1, node_label(h) + " has no active agent");
    for (NodeId c : gm.children(h)) {
      const Profile& m = gm.move(c);
      AgentSet here = 0;
      for (int i = 0; i < n; ++i) {
        const TypeSet a = m[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        here |= agent_bit(i);
        if ((a & ~model.all_types(i)) != 0) {
          add("action-types", c, i, "action on the edge into " + node_label(c) + " names unknown types");
        }
      }
      if (here != act) {
        add("active-players", c, -1, "edges leaving " + node_label(h) + " disagree on who moves");
      }
    }
    // product closure and no duplicate edges
    std::uint64_t expected = 1;
    for (int i = 0; i < n; ++i) {
      if ((act & agent_bit(i)) == 0) continue;
      const auto acts = gm.actions(h, i);
      expected *= acts.size();
      TypeSet seen = 0;
      TypeSet all = 0;
      for (TypeSet a : acts) {
        if ((seen & a) != 0) {
          add("disjoint-actions", h, i, "actions of agent " + model.agent_name(i) + " at " + node_label(h) + " overlap");
        }
        seen |= a;
        all |= a;
      }
      if (all != gm.theta(h, i)) {
        add("exhaustive-actions", h, i,
            "actions of agent " + model.agent_name(i) + " at " + node_label(h) + " do not cover its current types");
      }
    }
    std::set<Profile> moves;
    for (NodeId c : gm.children(h)) {
      if (!moves.insert(gm.move(c)).second) add("duplicate-edge", c, -1, "two edges leaving " + node_label(h) + " coincide");
    }
    if (moves.size() != expected) {
      add("product-closure", h, -1, "edges leaving " + node_label(h) + " are not the product of the agents' actions");
    }
  }

  // information sets
  for (int i = 0; i < n; ++i) {
    std::vector<int> hits(static_cast<std::size_t>(gm.node_count()), 0);
    const auto& sets = gm.info_sets(i);
    for (std::size_t k = 0; k < sets.size(); ++k) {
      const auto& nodes = sets[k].nodes;
      if (nodes.empty()) {
        add("info-set-member", kNoNode, i, "agent " + model.agent_name(i) + " has an empty information set");
        continue;
      }
      for (NodeId h : nodes) {
        ++hits[static_cast<std::size_t>(h)];
        if (gm.is_terminal(h) || !gm.is_active(h, i)) {
          add("info-set-member", h, i, "agent " + model.agent_name(i) + " does not move at " + node_label(h));
        }
      }
      const auto acts = gm.actions(nodes.front(), i);
      const auto recall = own_experience(gm, nodes.front(), i);
      for (std::size_t m = 1; m < nodes.size(); ++m) {
        if (gm.actions(nodes[m], i) != acts) {
          add("uniform-actions", nodes[m], i, "information set of agent " + model.agent_name(i) + " offers different actions at " + node_label(nodes[m]));
        }
        if (own_experience(gm, nodes[m], i) != recall) {
          add("perfect-recall", nodes[m], i, "agent " + model.agent_name(i) + " recalls a different past at " + node_label(nodes[m]));
        }
      }
    }
    for (NodeId h = 0; h < gm.node_count(); ++h) {
      const bool deciding = !gm.is_terminal(h) && gm.is_active(h, i);
      const int c = hits[static_cast<std::size_t>(h)];
      if (deciding && c != 1) {
        add("info-set-partition", h, i,
            "decision " + node_label(h) + " of agent " + model.agent_name(i) + " lies in " + std::to_string(c) + " information sets");
      }
    }
  }

  // terminal type sets partition the profile space
  std::uint64_t covered = 0;
  for (NodeId z : gm.terminals()) covered += model.product_size(gm.theta(z));
  bool all_reached = true;
  for (ProfileIndex p = 0; p < model.profile_count(); ++p) {
    if (gm.truthful_terminal(p) == kNoNode) {
      all_reached = false;
      break;
    }
  }
  if (covered != model.profile_count() || !all_reached) {
    add("terminal-partition", kNoNode, -1, "terminal type sets do not partition the type profiles");
  }

  if (f != nullptr) {
    for (NodeId z : gm.terminals()) {
      const auto x = gm.outcome(z);
      if (!x) continue;
      bool bad = false;
      model.for_each_profile(gm.theta(z), [&](ProfileIndex p) {
        if (!bad && (*f)(p) != *x) {
          bad = true;
          add("outcome-consistency", z, -1,
              "terminal " + node_label(z) + " assigns " + model.outcome_name(*x) + " but the rule gives " +
                  model.outcome_name((*f)(p)));
        }
      });
    }
  }
  return report;
}

std::vector<NodeId> terminals_below(const Mechanism& gm, NodeId h) {
  std::vector<NodeId> out;
  for (NodeId z : gm.terminals()) {
    if (gm.precedes_or_equal(h, z)) out.push_back(z);
  }
  return out;
}

TypeProfile sample_profile(const Mechanism& gm, NodeId h, std::optional<std::pair<AgentId, int>> fix) {
  TypeProfile out;
  for (int i = 0; i < gm.agent_count(); ++i) out.push_back(lowest(gm.theta(h, i)));
  if (fix) out[static_cast<std::size_t>(fix->first)] = fix->second;
  return out;
}

TypeSet theta_of_info_set(const Mechanism& gm, AgentId i, int local) {
  TypeSet out = 0;
  for (NodeId h : gm.info_set(i, local).nodes) out |= gm.theta(h, i);
  return out;
}

std::vector<ProfileIndex> theta_others(const Mechanism& gm, AgentId i, std::span<const NodeId> nodes) {
  std::vector<ProfileIndex> out;
  for (NodeId h : nodes) {
    Profile sets = gm.theta(h);
    sets[static_cast<std::size_t>(i)] = singleton(0);
    gm.model().for_each_profile(sets, [&](ProfileIndex p) { out.push_back(p); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<OwnPredecessor> own_predecessor(const Mechanism& gm, AgentId i, int local) {
  const NodeId h = gm.info_set(i, local).nodes.front();
  NodeId below = h;
  for (NodeId a = gm.parent(h); a != kNoNode; below = a, a = gm.parent(a)) {
    if (gm.is_active(a, i)) return OwnPredecessor{gm.info_set_of(a, i), gm.move(below)[static_cast<std::size_t>(i)]};
  }
  return std::nullopt;
}

std::vector<SiblingPair> siblings_same_action(const Mechanism& gm) {
  std::vector<SiblingPair> out;
  for (int i = 0; i < gm.agent_count(); ++i) {
    std::map<std::pair<int, TypeSet>, std::vector<int>> groups;
    const int count = static_cast<int>(gm.info_sets(i).size());
    for (int k = 0; k < count; ++k) {
      if (auto pred = own_predecessor(gm, i, k)) groups[{pred->info_set, pred->action}].push_back(k);
    }
    std::vector<SiblingPair> mine;
    for (const auto& [key, members] : groups) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) mine.push_back({i, members[a], members[b]});
      }
    }
    std::sort(mine.begin(), mine.end(), [](const SiblingPair& x, const SiblingPair& y) {
      return std::pair(x.first, x.second) < std::pair(y.first, y.second);
    });
    out.insert(out.end(), mine.begin(), mine.end());
  }
  return out;
}

}  // namespace gradual
