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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradual/types.hpp"

namespace gradual {

/// A complete, transitive preference over outcomes stored as indifference
/// levels; level 0 is the most preferred.
class WeakOrder {
 public:
  WeakOrder() = default;
  /// Throws GradualError unless `levels` partitions {0, ..., outcome_count-1}
  /// into non-empty sets.
  WeakOrder(std::vector<std::vector<OutcomeId>> levels, int outcome_count);

  /// Builds the order from a score per outcome; higher scores are better and
  /// equal scores are indifferent.
  template <typename Score>
  static WeakOrder from_scores(const std::vector<Score>& scores);

  int level(OutcomeId x) const { return level_of_[static_cast<std::size_t>(x)]; }
  const std::vector<std::vector<OutcomeId>>& levels() const { return levels_; }
  int outcome_count() const { return static_cast<int>(level_of_.size()); }

  bool weakly_prefers(OutcomeId x, OutcomeId y) const { return level(x) <= level(y); }
  bool strictly_prefers(OutcomeId x, OutcomeId y) const { return level(x) < level(y); }
  bool indifferent(OutcomeId x, OutcomeId y) const { return level(x) == level(y); }

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;

 private:
  std::vector<std::vector<OutcomeId>> levels_;
  std::vector<int> level_of_;
};

template <typename Score>
WeakOrder WeakOrder::from_scores(const std::vector<Score>& scores) {
  std::vector<OutcomeId> order(scores.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<OutcomeId>(k);
  // stable insertion sort keeps ties in id order; outcome counts are small
  for (std::size_t a = 1; a < order.size(); ++a) {
    for (std::size_t b = a; b > 0 && scores[static_cast<std::size_t>(order[b - 1])] <
                                          scores[static_cast<std::size_t>(order[b])];
         --b) {
      std::swap(order[b - 1], order[b]);
    }
  }
  std::vector<std::vector<OutcomeId>> levels;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || scores[static_cast<std::size_t>(order[k - 1])] !=
                      scores[static_cast<std::size_t>(order[k])]) {
      levels.emplace_back();
    }
    levels.back().push_back(order[k]);
  }
  return WeakOrder(std::move(levels), static_cast<int>(scores.size()));
}

struct AgentTypes {
  std::string name;
  std::vector<std::string> type_names;
  std::vector<WeakOrder> preferences;  // one per type
};

/// Agents, their finite type spaces and a weak order over the shared outcome
/// set for every type.
class TypeModel {
 public:
  TypeModel(std::vector<AgentTypes> agents, std::vector<std::string> outcome_names);

  int agent_count() const { return static_cast<int>(agents_.size()); }
  int type_count(AgentId agent) const {
    return static_cast<int>(agents_[static_cast<std::size_t>(agent)].type_names.size());
  }
  TypeSet all_types(AgentId agent) const { return full_set(type_count(agent)); }
  int outcome_count() const { return static_cast<int>(outcome_names_.size()); }

  const AgentTypes& agent(AgentId agent) const { return agents_[static_cast<std::size_t>(agent)]; }
  const std::string& agent_name(AgentId agent) const { return this->agent(agent).name; }
  const std::string& type_name(AgentId agent, int type) const {
    return this->agent(agent).type_names[static_cast<std::size_t>(type)];
  }
  const std::string& outcome_name(OutcomeId x) const {
    return outcome_names_[static_cast<std::size_t>(x)];
  }
  const std::vector<std::string>& outcome_names() const { return outcome_names_; }
  const WeakOrder& preference(AgentId agent, int type) const {
    return this->agent(agent).preferences[static_cast<std::size_t>(type)];
  }

  std::optional<int> find_type(AgentId agent, const std::string& name) const;
  std::optional<OutcomeId> find_outcome(const std::string& name) const;
  std::optional<AgentId> find_agent(const std::string& name) const;

  /// Number of complete type profiles.
  ProfileIndex profile_count() const { return profile_count_; }
  ProfileIndex encode(const TypeProfile& profile) const;
  TypeProfile decode(ProfileIndex index) const;
  ProfileIndex stride(AgentId agent) const { return strides_[static_cast<std::size_t>(agent)]; }

  /// Calls `fn(index)` for every complete profile whose agent-k type lies in
  /// `sets[k]`, in increasing index order.
  template <typename Fn>
  void for_each_profile(const Profile& sets, Fn&& fn) const;

  /// Number of profiles in the product of `sets`.
  std::uint64_t product_size(const Profile& sets) const;

  friend bool operator==(const TypeModel& a, const TypeModel& b) {
    return a.agents_.size() == b.agents_.size() && a.outcome_names_ == b.outcome_names_ &&
           [&] {
             for (std::size_t k = 0; k < a.agents_.size(); ++k) {
               if (a.agents_[k].name != b.agents_[k].name ||
                   a.agents_[k].type_names != b.agents_[k].type_names ||
                   a.agents_[k].preferences != b.agents_[k].preferences) {
                 return false;
               }
             }
             return true;
           }();
  }

 private:
  std::vector<AgentTypes> agents_;
  std::vector<std::string> outcome_names_;
  std::vector<ProfileIndex> strides_;
  ProfileIndex profile_count_ = 1;
};

template <typename Fn>
void TypeModel::for_each_profile(const Profile& sets, Fn&& fn) const {
  const int n = agent_count();
  std::vector<std::vector<int>> choices(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    choices[static_cast<std::size_t>(a)] = members(sets[static_cast<std::size_t>(a)]);
    if (choices[static_cast<std::size_t>(a)].empty()) return;
  }
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
  while (true) {
    ProfileIndex index = 0;
    for (int a = 0; a < n; ++a) {
      index += strides_[static_cast<std::size_t>(a)] *
               static_cast<ProfileIndex>(choices[static_cast<std::size_t>(a)][digit[static_cast<std::size_t>(a)]]);
    }
    fn(index);
    int a = 0;
    for (; a < n; ++a) {
      auto& d = digit[static_cast<std::size_t>(a)];
      if (++d < choices[static_cast<std::size_t>(a)].size()) break;
      d = 0;
    }
    if (a == n) return;
  }
}

/// Total social choice function over complete type profiles.
class ScfTable {
 public:
  ScfTable() = default;
  ScfTable(std::shared_ptr<const TypeModel> model, std::vector<OutcomeId> table);

  OutcomeId operator()(ProfileIndex index) const { return table_[index]; }
  OutcomeId operator()(const TypeProfile& profile) const { return table_[model_->encode(profile)]; }

  const TypeModel& model() const { return *model_; }
  const std::shared_ptr<const TypeModel>& model_ptr() const { return model_; }
  const std::vector<OutcomeId>& table() const { return table_; }

  friend bool operator==(const ScfTable& a, const ScfTable& b) { return a.table_ == b.table_; }

 private:
  std::shared_ptr<const TypeModel> model_;
  std::vector<OutcomeId> table_;
};

bool weakly_prefers(const TypeModel& model, AgentId agent, int type, OutcomeId x, OutcomeId y);
bool strictly_prefers(const TypeModel& model, AgentId agent, int type, OutcomeId x, OutcomeId y);
bool indifferent(const TypeModel& model, AgentId agent, int type, OutcomeId x, OutcomeId y);

/// A profitable misreport: `agent` of type `truth` facing `others` (with the
/// agent's own slot holding `truth`) strictly prefers the outcome of `lie`.
struct ManipulationWitness {
  AgentId agent = 0;
  int truth = 0;
  int lie = 0;
  TypeProfile profile;
};

struct StrategyProofness {
  bool holds = true;
  std::optional<ManipulationWitness> witness;
};

/// Exhaustive check of f(t_i, t_-i) R(t_i) f(t_i', t_-i); the witness is the
/// first violation in (agent, profile index, lie) order.
StrategyProofness is_strategy_proof(const ScfTable& f);

}  // namespace gradual
