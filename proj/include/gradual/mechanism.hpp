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
#include <span>
#include <string>
#include <vector>

#include "gradual/preferences.hpp"
#include "gradual/types.hpp"

namespace gradual {

struct InfoSet {
  AgentId agent = 0;
  std::vector<NodeId> nodes;  // sorted
};

/// Node as supplied to the Mechanism constructor, before canonical numbering.
struct RawNode {
  NodeId parent = kNoNode;
  Profile move;  // action profile on the edge from the parent; empty at the root
  std::optional<OutcomeId> outcome;
};

/// One decision on a path: `agent` chose `action` at `node`, which lies in
/// the information set with global index `info_set`.
struct Decision {
  int info_set = 0;
  AgentId agent = 0;
  NodeId node = 0;
  TypeSet action = 0;
};

/// A finite dynamic game form whose actions are sets of the acting agent's
/// types. Immutable; nodes are numbered breadth-first with siblings ordered
/// by their action profile, so equal mechanisms compare equal.
class Mechanism {
 public:
  /// `info_sets[agent]` lists that agent's information sets by raw node id.
  /// Structural defects (dangling parents, cycles, bad ids) do not throw;
  /// they are kept and reported by validate().
  Mechanism(std::shared_ptr<const TypeModel> model, std::vector<RawNode> nodes,
            std::vector<std::vector<std::vector<NodeId>>> info_sets);

  const TypeModel& model() const { return *model_; }
  const std::shared_ptr<const TypeModel>& model_ptr() const { return model_; }
  int agent_count() const { return model_->agent_count(); }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  /// False when the raw input did not form a rooted tree; most queries are
  /// meaningless in that case.
  bool well_formed() const { return structural_issues_.empty(); }
  const std::vector<std::string>& structural_issues() const { return structural_issues_; }

  static constexpr NodeId root() { return 0; }
  NodeId parent(NodeId h) const { return node(h).parent; }
  const Profile& move(NodeId h) const { return node(h).move; }
  std::span<const NodeId> children(NodeId h) const { return node(h).children; }
  int depth(NodeId h) const { return node(h).depth; }
  bool is_terminal(NodeId h) const { return node(h).children.empty(); }
  std::optional<OutcomeId> outcome(NodeId h) const { return node(h).outcome; }

  /// Agents moving at `h` (read off the first child's action profile).
  AgentSet active(NodeId h) const { return node(h).active; }
  bool is_active(NodeId h, AgentId i) const { return (active(h) & agent_bit(i)) != 0; }

  /// The agent's last action on the way to `h`, or all its types.
  TypeSet theta(NodeId h, AgentId i) const {
    return theta_[static_cast<std::size_t>(h) * static_cast<std::size_t>(agent_count()) +
                  static_cast<std::size_t>(i)];
  }
  Profile theta(NodeId h) const;

  /// Distinct actions of `i` on the edges leaving `h`, increasing.
  std::vector<TypeSet> actions(NodeId h, AgentId i) const;

  /// Nodes on the path from the root to `h`, root first, `h` last.
  std::vector<NodeId> path(NodeId h) const;
  /// a strictly precedes b.
  bool precedes(NodeId a, NodeId b) const {
    return dfs_in_[static_cast<std::size_t>(a)] < dfs_in_[static_cast<std::size_t>(b)] &&
           dfs_out_[static_cast<std::size_t>(b)] <= dfs_out_[static_cast<std::size_t>(a)];
  }
  bool precedes_or_equal(NodeId a, NodeId b) const { return a == b || precedes(a, b); }
  /// The child of `ancestor` on the path to `descendant`.
  NodeId child_toward(NodeId ancestor, NodeId descendant) const;

  const std::vector<InfoSet>& info_sets(AgentId i) const {
    return info_sets_[static_cast<std::size_t>(i)];
  }
  const InfoSet& info_set(AgentId i, int local) const {
    return info_sets_[static_cast<std::size_t>(i)][static_cast<std::size_t>(local)];
  }
  /// Local information-set index of `h` for `i`, or -1 if `i` is inactive.
  int info_set_of(NodeId h, AgentId i) const {
    return info_set_of_[static_cast<std::size_t>(h) * static_cast<std::size_t>(agent_count()) +
                        static_cast<std::size_t>(i)];
  }
  /// Global numbering of information sets: agent-major, local order within.
  int global_id(AgentId i, int local) const { return info_set_base_[static_cast<std::size_t>(i)] + local; }
  AgentId agent_of_global(int gid) const;
  int local_of_global(int gid) const { return gid - info_set_base_[static_cast<std::size_t>(agent_of_global(gid))]; }
  int info_set_count() const { return info_set_base_.back(); }
  /// Looks up an information set of `i` by its exact member list.
  std::optional<int> find_info_set(AgentId i, std::vector<NodeId> nodes) const;

  /// Terminal histories in increasing id order.
  const std::vector<NodeId>& terminals() const { return terminals_; }
  /// Decisions strictly before terminal `z`, sorted by global information set.
  std::span<const Decision> decisions(NodeId z) const;

  /// The terminal z with theta in Theta(z); kNoNode when the type sets at
  /// the terminals do not cover the profile.
  NodeId truthful_terminal(ProfileIndex profile) const {
    return truthful_[profile];
  }

  /// Every agent has exactly one information set (the root).
  bool is_static() const;

  friend bool operator==(const Mechanism& a, const Mechanism& b);

  /// FNV-1a digest of the canonical tree, outcomes and information sets.
  std::uint64_t fingerprint() const;

 private:
  struct Node {
    NodeId parent = kNoNode;
    Profile move;
    std::optional<OutcomeId> outcome;
    std::vector<NodeId> children;
    int depth = 0;
    AgentSet active = 0;
  };

  const Node& node(NodeId h) const { return nodes_[static_cast<std::size_t>(h)]; }
  void check_structure(const std::vector<RawNode>& raw);
  void canonicalize(std::vector<RawNode> raw, std::vector<std::vector<std::vector<NodeId>>> sets);
  void compute_caches();

  std::shared_ptr<const TypeModel> model_;
  std::vector<Node> nodes_;
  std::vector<std::vector<InfoSet>> info_sets_;
  std::vector<std::string> structural_issues_;

  std::vector<TypeSet> theta_;
  std::vector<int> info_set_of_;
  std::vector<int> info_set_base_;
  std::vector<int> dfs_in_;
  std::vector<int> dfs_out_;
  std::vector<NodeId> terminals_;
  std::vector<int> decision_offset_;  // per node, into decisions_ (terminals only)
  std::vector<Decision> decisions_;
  std::vector<NodeId> truthful_;
};

/// Incremental construction with arbitrary node ids; build() canonicalizes.
class MechanismBuilder {
 public:
  explicit MechanismBuilder(std::shared_ptr<const TypeModel> model);

  NodeId root() const { return 0; }
  NodeId add_child(NodeId parent, Profile move);
  void set_outcome(NodeId h, OutcomeId x);
  void add_info_set(AgentId i, std::vector<NodeId> nodes);
  /// Puts every decision node of `i` not yet covered into its own set.
  void singleton_info_sets(AgentId i);
  const Profile& move(NodeId h) const { return nodes_[static_cast<std::size_t>(h)].move; }
  NodeId parent(NodeId h) const { return nodes_[static_cast<std::size_t>(h)].parent; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const TypeModel& model() const { return *model_; }

  Mechanism build() const;

 private:
  std::shared_ptr<const TypeModel> model_;
  std::vector<RawNode> nodes_;
  std::vector<std::vector<std::vector<NodeId>>> info_sets_;
};

struct Violation {
  std::string rule;  // short rule tag, e.g. "disjoint-actions"
  NodeId node = kNoNode;
  AgentId agent = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the gradual-mechanism axioms and the game-form assumptions; when
/// `f` is given also checks that every terminal outcome agrees with f on the
/// type profiles the terminal carries.
ValidationReport validate(const Mechanism& gm, const ScfTable* f = nullptr);

/// Terminals z with h preceding or equal to z, increasing.
std::vector<NodeId> terminals_below(const Mechanism& gm, NodeId h);

/// Some type profile in Theta(h), lowest type per agent unless overridden.
TypeProfile sample_profile(const Mechanism& gm, NodeId h, std::optional<std::pair<AgentId, int>> fix = std::nullopt);

/// Theta_i of an information set (common to all its members).
TypeSet theta_of_info_set(const Mechanism& gm, AgentId i, int local);

/// Theta_{-i} of an information set: the union over members of the product
/// of the other agents' type sets. Profiles are returned as sorted profile
/// indices with agent i's digit set to zero.
std::vector<ProfileIndex> theta_others(const Mechanism& gm, AgentId i, std::span<const NodeId> nodes);

/// The information set of `i` immediately preceding `local` together with
/// the action taken there; nullopt for the agent's root information set.
struct OwnPredecessor {
  int info_set = -1;
  TypeSet action = 0;
};
std::optional<OwnPredecessor> own_predecessor(const Mechanism& gm, AgentId i, int local);

struct SiblingPair {
  AgentId agent = 0;
  int first = 0;   // local information-set indices, first < second
  int second = 0;
};

/// Unordered pairs of distinct information sets of one agent that follow
/// the same action at a common immediately preceding information set, in
/// (agent, first, second) order.
std::vector<SiblingPair> siblings_same_action(const Mechanism& gm);

}  // namespace gradual
