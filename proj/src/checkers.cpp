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

#include "gradual/checkers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gradual {

namespace {

OutcomeId outcome_at(const Mechanism& gm, NodeId z) { return *gm.outcome(z); }

}  // namespace

namespace detail {

std::optional<int> harmful_type(const Mechanism& gm, AgentId j, NodeId z1, NodeId z2) {
  const OutcomeId x1 = outcome_at(gm, z1);
  const OutcomeId x2 = outcome_at(gm, z2);
  if (x1 == x2) return std::nullopt;
  for (int t : members(gm.theta(z1, j))) {
    if (gm.model().preference(j, t).strictly_prefers(x2, x1)) return t;
  }
  return std::nullopt;
}

Witness pair_witness(const Mechanism& gm, std::string kind, AgentId j, int t, NodeId z1, NodeId z2) {
  Witness w;
  w.kind = std::move(kind);
  w.harmed = j;
  w.z1 = z1;
  w.z2 = z2;
  w.theta1 = sample_profile(gm, z1, std::pair(j, t));
  w.theta2 = sample_profile(gm, z2);
  w.x1 = outcome_at(gm, z1);
  w.x2 = outcome_at(gm, z2);
  return w;
}

}  // namespace detail

namespace {

using detail::harmful_type;

// The member node of global information set `gid` on the path to z, if any.
NodeId member_on_path(const Mechanism& gm, NodeId z, int gid) {
  const auto ds = gm.decisions(z);
  auto it = std::lower_bound(ds.begin(), ds.end(), gid,
                             [](const Decision& d, int g) { return d.info_set < g; });
  return it != ds.end() && it->info_set == gid ? it->node : kNoNode;
}

// Information sets of k strictly before h, root first.
std::vector<int> own_sets_before(const Mechanism& gm, AgentId k, NodeId h) {
  std::vector<int> out;
  for (NodeId a = gm.parent(h); a != kNoNode; a = gm.parent(a)) {
    if (gm.is_active(a, k)) out.push_back(gm.info_set_of(a, k));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool third_party_diverged(const Mechanism& gm, AgentId i, AgentId j, NodeId h1, NodeId h2) {
  for (int k = 0; k < gm.agent_count(); ++k) {
    if (k == i || k == j) continue;
    const auto a = own_sets_before(gm, k, h1);
    const auto b = own_sets_before(gm, k, h2);
    for (std::size_t p = 0; p < std::min(a.size(), b.size()); ++p) {
      if (a[p] != b[p]) return true;
    }
  }
  return false;
}

// Every pair of outcomes below h is mutually indifferent for every type of j.
class Uniformity {
 public:
  explicit Uniformity(const Mechanism& gm) : gm_(gm) {}

  bool operator()(NodeId h, AgentId j) {
    const auto key = std::pair(h, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<OutcomeId> xs;
    for (NodeId z : terminals_below(gm_, h)) xs.push_back(outcome_at(gm_, z));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    bool ok = true;
    for (int t = 0; ok && t < gm_.model().type_count(j); ++t) {
      const auto& pref = gm_.model().preference(j, t);
      for (std::size_t k = 1; ok && k < xs.size(); ++k) ok = pref.indifferent(xs[0], xs[k]);
    }
    memo_.emplace(key, ok);
    return ok;
  }

 private:
  const Mechanism& gm_;
  std::map<std::pair<NodeId, AgentId>, bool> memo_;
};

struct SiblingTerminals {
  std::vector<NodeId> t1, t2;
};

SiblingTerminals split_terminals(const Mechanism& gm, const SiblingPair& sp) {
  SiblingTerminals out;
  const int g1 = gm.global_id(sp.agent, sp.first);
  const int g2 = gm.global_id(sp.agent, sp.second);
  for (NodeId z : gm.terminals()) {
    if (member_on_path(gm, z, g1) != kNoNode) out.t1.push_back(z);
    if (member_on_path(gm, z, g2) != kNoNode) out.t2.push_back(z);
  }
  return out;
}

// Shared loop of RP and IRP: calls fn(j, H1 local, H2 local, h1, h2, z1, z2)
// for each consistent terminal pair, ordered sibling sets; stops when fn
// returns false.
template <class Fn>
void for_each_reaction(const Mechanism& gm, bool relaxed, Fn&& fn) {
  for (const SiblingPair& sp : siblings_same_action(gm)) {
    const AgentId i = sp.agent;
    const auto terms = split_terminals(gm, sp);
    const int g1 = gm.global_id(i, sp.first);
    const int g2 = gm.global_id(i, sp.second);
    for (AgentId j = 0; j < gm.agent_count(); ++j) {
      if (j == i) continue;
      const AgentSet excluded = agent_bit(i) | agent_bit(j);
      for (int order = 0; order < 2; ++order) {
        const auto& left = order == 0 ? terms.t1 : terms.t2;
        const auto& right = order == 0 ? terms.t2 : terms.t1;
        const int gl = order == 0 ? g1 : g2;
        const int gr = order == 0 ? g2 : g1;
        for (NodeId z1 : left) {
          for (NodeId z2 : right) {
            if (!consistent_pair(gm, z1, z2, excluded)) continue;
            const NodeId h1 = member_on_path(gm, z1, gl);
            const NodeId h2 = member_on_path(gm, z2, gr);
            if (relaxed && third_party_diverged(gm, i, j, h1, h2)) continue;
            const int l1 = order == 0 ? sp.first : sp.second;
            const int l2 = order == 0 ? sp.second : sp.first;
            if (!fn(i, j, l1, l2, h1, h2, z1, z2)) return;
          }
        }
      }
    }
  }
}

}  // namespace

void require_valid(const Mechanism& gm, const ScfTable& f) {
  if (!(gm.model() == f.model())) throw GradualError("mechanism and social choice function use different type models");
  const auto report = validate(gm, &f);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw GradualError("invalid gradual mechanism (" + v.rule + "): " + v.message);
  }
}

Verdict is_ic(const Mechanism& gm, const ScfTable& f) {
  require_valid(gm, f);
  for (AgentId i = 0; i < gm.agent_count(); ++i) {
    for (NodeId z1 : gm.terminals()) {
      for (NodeId z2 : gm.terminals()) {
        if (!consistent_pair(gm, z1, z2, agent_bit(i))) continue;
        if (auto t = harmful_type(gm, i, z1, z2)) return {false, detail::pair_witness(gm, "ic", i, *t, z1, z2)};
      }
    }
  }
  return {};
}

Verdict is_rp(const Mechanism& gm, const ScfTable& f, bool relaxed) {
  require_valid(gm, f);
  Verdict out;
  for_each_reaction(gm, relaxed, [&](AgentId i, AgentId j, int l1, int l2, NodeId h1, NodeId h2, NodeId z1, NodeId z2) {
    auto t = harmful_type(gm, j, z1, z2);
    if (!t) return true;
    Witness w = detail::pair_witness(gm, "rp", j, *t, z1, z2);
    w.reactor = i;
    w.info_set1 = l1;
    w.info_set2 = l2;
    w.node1 = h1;
    w.node2 = h2;
    out = {false, std::move(w)};
    return false;
  });
  return out;
}

Verdict is_irp(const Mechanism& gm, const ScfTable& f, bool relaxed) {
  require_valid(gm, f);
  Uniformity uniform(gm);
  Verdict out;
  for_each_reaction(gm, relaxed, [&](AgentId i, AgentId j, int l1, int l2, NodeId h1, NodeId h2, NodeId z1, NodeId z2) {
    if (uniform(h1, j) || uniform(h2, j)) return true;
    Witness w;
    w.kind = "irp";
    w.harmed = j;
    w.reactor = i;
    w.info_set1 = l1;
    w.info_set2 = l2;
    w.node1 = h1;
    w.node2 = h2;
    w.z1 = z1;
    w.z2 = z2;
    w.theta1 = sample_profile(gm, z1);
    w.theta2 = sample_profile(gm, z2);
    w.x1 = outcome_at(gm, z1);
    w.x2 = outcome_at(gm, z2);
    out = {false, std::move(w)};
    return false;
  });
  return out;
}

bool witness_is_genuine(const Mechanism& gm, const ScfTable& f, const Witness& w) {
  const auto& model = gm.model();
  auto is_term = [&](NodeId z) { return z >= 0 && z < gm.node_count() && gm.is_terminal(z); };
  if (!is_term(w.z1) || !is_term(w.z2)) return false;
  if (gm.truthful_terminal(model.encode(w.theta1)) != w.z1) return false;
  if (gm.truthful_terminal(model.encode(w.theta2)) != w.z2) return false;
  if (f(model.encode(w.theta1)) != w.x1 || f(model.encode(w.theta2)) != w.x2) return false;
  AgentSet excluded = agent_bit(w.harmed);
  if (w.reactor) excluded |= agent_bit(*w.reactor);
  const AgentSet everyone = (AgentSet{1} << gm.agent_count()) - 1;
  if (excluded != everyone && !common_strategy_exists(gm, w.z1, w.z2, excluded)) return false;
  if (w.kind == "irp") {
    if (!w.reactor || !gm.precedes_or_equal(w.node1, w.z1) || !gm.precedes_or_equal(w.node2, w.z2)) return false;
    auto spread = [&](NodeId h) {
      std::vector<OutcomeId> xs;
      for (NodeId z : terminals_below(gm, h)) xs.push_back(*gm.outcome(z));
      for (int t = 0; t < model.type_count(w.harmed); ++t) {
        for (OutcomeId a : xs) {
          for (OutcomeId b : xs) {
            if (model.preference(w.harmed, t).strictly_prefers(a, b)) return true;
          }
        }
      }
      return false;
    };
    return spread(w.node1) && spread(w.node2);
  }
  return model.preference(w.harmed, w.theta1[static_cast<std::size_t>(w.harmed)]).strictly_prefers(w.x2, w.x1);
}

std::string describe(const Mechanism& gm, const Witness& w) {
  const auto& model = gm.model();
  auto profile = [&](const TypeProfile& p) {
    std::string s = "(";
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (a) s += ", ";
      s += model.type_name(static_cast<AgentId>(a), p[a]);
    }
    return s + ")";
  };
  std::ostringstream out;
  const std::string& j = model.agent_name(w.harmed);
  if (w.kind == "irp") {
    out << "agent " << model.agent_name(*w.reactor) << " can react to agent " << j << " between nodes " << w.node1
        << " and " << w.node2 << ", and " << j << " is not indifferent after either";
  } else {
    out << "agent " << j << " of type " << model.type_name(w.harmed, w.theta1[static_cast<std::size_t>(w.harmed)])
        << " prefers " << model.outcome_name(w.x2) << " (terminal " << w.z2 << ", profile " << profile(w.theta2)
        << ") to " << model.outcome_name(w.x1) << " (terminal " << w.z1 << ", profile " << profile(w.theta1) << ")";
    if (w.reactor && w.kind == "ill") {
      out << "; splitting information set " << *w.info_set1 << " of agent " << model.agent_name(*w.reactor)
          << " separates them";
    } else if (w.reactor) {
      out << "; agent " << model.agent_name(*w.reactor) << " reacts across information sets " << *w.info_set1 << " and "
          << *w.info_set2;
    }
  }
  return out.str();
}

}  // namespace gradual
