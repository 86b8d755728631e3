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

#include "gradual/preferences.hpp"

#include <algorithm>

namespace gradual {

WeakOrder::WeakOrder(std::vector<std::vector<OutcomeId>> levels, int outcome_count)
    : levels_(std::move(levels)), level_of_(static_cast<std::size_t>(outcome_count), -1) {
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (levels_[k].empty()) throw GradualError("weak order has an empty indifference level");
    for (OutcomeId x : levels_[k]) {
      if (x < 0 || x >= outcome_count) throw GradualError("weak order names an unknown outcome");
      auto& slot = level_of_[static_cast<std::size_t>(x)];
      if (slot != -1) throw GradualError("weak order lists an outcome twice");
      slot = static_cast<int>(k);
    }
  }
  if (std::find(level_of_.begin(), level_of_.end(), -1) != level_of_.end()) {
    throw GradualError("weak order does not rank every outcome");
  }
}

TypeModel::TypeModel(std::vector<AgentTypes> agents, std::vector<std::string> outcome_names)
    : agents_(std::move(agents)), outcome_names_(std::move(outcome_names)) {
  if (agents_.empty()) throw GradualError("type model needs at least one agent");
  if (static_cast<int>(agents_.size()) > kMaxAgents) throw GradualError("too many agents");
  if (outcome_names_.empty()) throw GradualError("type model needs at least one outcome");
  std::uint64_t count = 1;
  for (const auto& a : agents_) {
    if (a.type_names.empty()) throw GradualError("agent " + a.name + " has no types");
    if (static_cast<int>(a.type_names.size()) > kMaxTypes) {
      throw GradualError("agent " + a.name + " has more than 64 types");
    }
    if (a.preferences.size() != a.type_names.size()) {
      throw GradualError("agent " + a.name + " needs one preference per type");
    }
    for (const auto& p : a.preferences) {
      if (p.outcome_count() != outcome_count()) {
        throw GradualError("preference of agent " + a.name + " ranges over the wrong outcome set");
      }
    }
    strides_.push_back(static_cast<ProfileIndex>(count));
    count *= a.type_names.size();
    if (count > (std::uint64_t{1} << 31)) throw GradualError("type profile space too large");
  }
  profile_count_ = static_cast<ProfileIndex>(count);
}

std::optional<int> TypeModel::find_type(AgentId agent, const std::string& name) const {
  const auto& names = this->agent(agent).type_names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<int>(it - names.begin());
}

std::optional<OutcomeId> TypeModel::find_outcome(const std::string& name) const {
  auto it = std::find(outcome_names_.begin(), outcome_names_.end(), name);
  if (it == outcome_names_.end()) return std::nullopt;
  return static_cast<OutcomeId>(it - outcome_names_.begin());
}

std::optional<AgentId> TypeModel::find_agent(const std::string& name) const {
  for (std::size_t k = 0; k < agents_.size(); ++k) {
    if (agents_[k].name == name) return static_cast<AgentId>(k);
  }
  return std::nullopt;
}

ProfileIndex TypeModel::encode(const TypeProfile& profile) const {
  ProfileIndex index = 0;
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    index += strides_[a] * static_cast<ProfileIndex>(profile[a]);
  }
  return index;
}

TypeProfile TypeModel::decode(ProfileIndex index) const {
  TypeProfile out(agents_.size());
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    const auto n = static_cast<ProfileIndex>(agents_[a].type_names.size());
    out[a] = static_cast<int>(index % n);
    index /= n;
  }
  return out;
}

std::uint64_t TypeModel::product_size(const Profile& sets) const {
  std::uint64_t count = 1;
  for (TypeSet s : sets) count *= static_cast<std::uint64_t>(size_of(s));
  return count;
}

ScfTable::ScfTable(std::shared_ptr<const TypeModel> model, std::vector<OutcomeId> table)
    : model_(std::move(model)), table_(std::move(table)) {
  if (table_.size() != model_->profile_count()) {
    throw GradualError("social choice table is not total over the type profiles");
  }
  for (OutcomeId x : table_) {
    if (x < 0 || x >= model_->outcome_count()) {
      throw GradualError("social choice table names an unknown outcome");
    }
  }
}

bool weakly_prefers(const TypeModel& model, AgentId agent, int type, OutcomeId x, OutcomeId y) {
  return model.preference(agent, type).weakly_prefers(x, y);
}

bool strictly_prefers(const TypeModel& model, AgentId agent, int type, OutcomeId x, OutcomeId y) {
  return model.preference(agent, type).strictly_prefers(x, y);
}

bool indifferent(const TypeModel& model, AgentId agent, int type, OutcomeId x, OutcomeId y) {
  return model.preference(agent, type).indifferent(x, y);
}

StrategyProofness is_strategy_proof(const ScfTable& f) {
  const TypeModel& model = f.model();
  for (AgentId i = 0; i < model.agent_count(); ++i) {
    const int types = model.type_count(i);
    const ProfileIndex stride = model.stride(i);
    for (ProfileIndex index = 0; index < model.profile_count(); ++index) {
      const int truth = static_cast<int>((index / stride) % static_cast<ProfileIndex>(types));
      const ProfileIndex base = index - stride * static_cast<ProfileIndex>(truth);
      const WeakOrder& pref = model.preference(i, truth);
      for (int lie = 0; lie < types; ++lie) {
        if (pref.strictly_prefers(f(base + stride * static_cast<ProfileIndex>(lie)), f(index))) {
          return {false, ManipulationWitness{i, truth, lie, model.decode(index)}};
        }
      }
    }
  }
  return {};
}

}  // namespace gradual
