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

#include <algorithm>
#include <map>
#include <tuple>

#include "gradual/generators.hpp"

namespace gradual {

namespace {

enum SubStage { kRenounce = 0, kDesignate = 1, kAssert = 2 };

struct Market {
  std::uint32_t agents = 0;
  std::uint32_t items = 0;
  friend auto operator<=>(const Market&, const Market&) = default;
};

struct State {
  std::vector<TypeSet> theta;
  std::vector<int> partner;              // designated owner or -1
  std::vector<std::vector<int>> menu;    // partner's items when designated
  std::vector<std::vector<TypeSet>> log;  // own non-degenerate choices
  std::vector<int> item;                 // assigned item or -1
  std::vector<Market> seen;              // sub-market at the start of every stage
  Market market;
};

using Key = std::tuple<AgentId, std::vector<Market>, int, std::vector<TypeSet>>;

class RdaBuilder {
 public:
  RdaBuilder(const Priorities& p, int n) : p_(p), n_(n), perms_(rankings(n)), b_(matching_model(n)) {}

  Mechanism build() {
    State s;
    const auto un = static_cast<std::size_t>(n_);
    s.theta.assign(un, full_set(static_cast<int>(perms_.size())));
    s.partner.assign(un, -1);
    s.menu.assign(un, {});
    s.log.assign(un, {});
    s.item.assign(un, -1);
    s.market = Market{(1U << n_) - 1, (1U << n_) - 1};
    fresh_root_ = true;
    stage(b_.root(), std::move(s));
    for (auto& [key, nodes] : sets_) b_.add_info_set(std::get<0>(key), nodes);
    return b_.build();
  }

 private:
  bool here(std::uint32_t set, int k) const { return (set >> k) & 1U; }

  int owner(const Market& m, int item) const {
    for (AgentId a : p_[static_cast<std::size_t>(item)]) {
      if (here(m.agents, a)) return a;
    }
    return -1;
  }

  std::vector<int> owned(const Market& m, AgentId a) const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
      if (here(m.items, x) && owner(m, x) == a) out.push_back(x);
    }
    return out;
  }

  // First item of the ranking among `allowed`.
  int first_in(int type, const std::vector<int>& allowed) const {
    for (int x : perms_[static_cast<std::size_t>(type)]) {
      if (std::find(allowed.begin(), allowed.end(), x) != allowed.end()) return x;
    }
    return -1;
  }

  std::vector<int> items_of(std::uint32_t set) const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
      if (here(set, x)) out.push_back(x);
    }
    return out;
  }

  // Types in theta grouped by which of `targets` their first item in `within` belongs to.
  std::vector<TypeSet> split_by(TypeSet theta, const std::vector<int>& within,
                                const std::vector<std::vector<int>>& targets) const {
    std::vector<TypeSet> out(targets.size(), 0);
    for (int t : members(theta)) {
      const int x = first_in(t, within);
      for (std::size_t k = 0; k < targets.size(); ++k) {
        if (std::find(targets[k].begin(), targets[k].end(), x) != targets[k].end()) out[k] |= singleton(t);
      }
    }
    return out;
  }

  struct Choice {
    AgentId agent;
    std::vector<TypeSet> options;  // non-empty only
  };

  // Expands a simultaneous move of the agents in `choices`; agents with a
  // single option take it without a decision node. Calls next(child, picks).
  template <class Next>
  void move(NodeId h, const State& s, int sub, const std::vector<Choice>& choices, Next&& next) {
    std::vector<const Choice*> movers;
    for (const auto& c : choices) {
      if (c.options.size() > 1) movers.push_back(&c);
    }
    auto pick_of = [&](const std::vector<std::size_t>& digits) {
      std::vector<TypeSet> picks;
      std::size_t m = 0;
      for (const auto& c : choices) picks.push_back(c.options.size() > 1 ? c.options[digits[m++]] : c.options[0]);
      return picks;
    };
    if (movers.empty()) {
      next(h, pick_of({}));
      return;
    }
    for (const Choice* c : movers) sets_[{c->agent, s.seen, sub, s.log[static_cast<std::size_t>(c->agent)]}].push_back(h);
    const bool root = fresh_root_;
    if (root) {
      fresh_root_ = false;
      for (AgentId a = 0; a < n_; ++a) {
        if (std::none_of(movers.begin(), movers.end(), [&](const Choice* c) { return c->agent == a; })) {
          sets_[{a, {}, -1, {}}].push_back(h);
        }
      }
    }
    std::vector<std::size_t> digits(movers.size(), 0);
    while (true) {
      Profile mv(static_cast<std::size_t>(n_), 0);
      if (root) mv.assign(static_cast<std::size_t>(n_), full_set(static_cast<int>(perms_.size())));
      for (std::size_t k = 0; k < movers.size(); ++k) mv[static_cast<std::size_t>(movers[k]->agent)] = movers[k]->options[digits[k]];
      next(b_.add_child(h, mv), pick_of(digits));
      std::size_t k = 0;
      for (; k < movers.size(); ++k) {
        if (++digits[k] < movers[k]->options.size()) break;
        digits[k] = 0;
      }
      if (k == movers.size()) break;
    }
  }

  void record(State& s, const std::vector<Choice>& choices, const std::vector<TypeSet>& picks) {
    for (std::size_t k = 0; k < choices.size(); ++k) {
      const auto a = static_cast<std::size_t>(choices[k].agent);
      s.theta[a] = picks[k];
      if (choices[k].options.size() > 1) s.log[a].push_back(picks[k]);
    }
  }

  void stage(NodeId h, State s) {
    if (s.market.agents == 0) {
      b_.set_outcome(h, matching_outcome(s.item));
      return;
    }
    s.seen.push_back(s.market);
    const auto items = items_of(s.market.items);
    std::vector<AgentId> owners;
    for (AgentId a = 0; a < n_; ++a) {
      if (here(s.market.agents, a) && !owned(s.market, a).empty()) owners.push_back(a);
    }
    for (AgentId a : owners) {
      const int q = s.partner[static_cast<std::size_t>(a)];
      if (q >= 0 && !here(s.market.agents, q)) s.partner[static_cast<std::size_t>(a)] = -1;
    }
    std::vector<Choice> choices;
    for (AgentId a : owners) {
      if (s.partner[static_cast<std::size_t>(a)] >= 0) continue;
      const auto mine = owned(s.market, a);
      const TypeSet th = s.theta[static_cast<std::size_t>(a)];
      const TypeSet claim = split_by(th, items, {mine})[0];
      Choice c{a, {}};
      if (claim) c.options.push_back(claim);
      if (th & ~claim) c.options.push_back(th & ~claim);
      choices.push_back(std::move(c));
    }
    move(h, s, kRenounce, choices, [&](NodeId child, const std::vector<TypeSet>& picks) {
      State t = s;
      record(t, choices, picks);
      std::vector<std::pair<AgentId, std::vector<int>>> asserters;
      for (const auto& c : choices) {
        const auto a = static_cast<std::size_t>(c.agent);
        const auto mine = owned(t.market, c.agent);
        if (split_by(t.theta[a], items, {mine})[0] == t.theta[a]) asserters.emplace_back(c.agent, mine);
      }
      if (!asserters.empty()) {
        assertion(child, std::move(t), std::move(asserters), 0);
        return;
      }
      designation(child, std::move(t), owners, items);
    });
  }

  void designation(NodeId h, State s, const std::vector<AgentId>& owners, const std::vector<int>& items) {
    std::vector<Choice> choices;
    std::vector<std::vector<AgentId>> targets;
    for (AgentId a : owners) {
      if (s.partner[static_cast<std::size_t>(a)] >= 0) continue;
      std::vector<AgentId> others;
      std::vector<std::vector<int>> their;
      for (AgentId o : owners) {
        if (o == a) continue;
        others.push_back(o);
        their.push_back(owned(s.market, o));
      }
      const auto split = split_by(s.theta[static_cast<std::size_t>(a)], items, their);
      Choice c{a, {}};
      std::vector<AgentId> kept;
      for (std::size_t k = 0; k < split.size(); ++k) {
        if (split[k]) {
          c.options.push_back(split[k]);
          kept.push_back(others[k]);
        }
      }
      choices.push_back(std::move(c));
      targets.push_back(std::move(kept));
    }
    move(h, s, kDesignate, choices, [&](NodeId child, const std::vector<TypeSet>& picks) {
      State t = s;
      record(t, choices, picks);
      for (std::size_t k = 0; k < choices.size(); ++k) {
        const auto& opts = choices[k].options;
        const auto idx = static_cast<std::size_t>(std::find(opts.begin(), opts.end(), picks[k]) - opts.begin());
        const AgentId a = choices[k].agent;
        const AgentId o = targets[k][idx];
        t.partner[static_cast<std::size_t>(a)] = o;
        t.menu[static_cast<std::size_t>(a)] = owned(t.market, o);
      }
      std::vector<std::pair<AgentId, std::vector<int>>> asserters;
      for (AgentId a : owners) {
        AgentId c = a;
        bool cycle = false;
        for (int k = 0; k < n_; ++k) {
          c = t.partner[static_cast<std::size_t>(c)];
          if (c < 0) break;
          if (c == a) {
            cycle = true;
            break;
          }
        }
        if (cycle) asserters.emplace_back(a, t.menu[static_cast<std::size_t>(a)]);
      }
      if (asserters.empty()) throw GradualError("internal: designations formed no cycle");
      assertion(child, std::move(t), std::move(asserters), 0);
    });
  }

  void assertion(NodeId h, State s, std::vector<std::pair<AgentId, std::vector<int>>> who, std::size_t next) {
    if (next == who.size()) {
      for (const auto& [a, menu] : who) {
        s.market.agents &= ~(1U << a);
        s.market.items &= ~(1U << s.item[static_cast<std::size_t>(a)]);
        s.partner[static_cast<std::size_t>(a)] = -1;
      }
      stage(h, std::move(s));
      return;
    }
    const auto& [a, menu] = who[next];
    std::vector<std::vector<int>> singles;
    for (int x : menu) singles.push_back({x});
    const auto split = split_by(s.theta[static_cast<std::size_t>(a)], menu, singles);
    Choice c{a, {}};
    std::vector<int> items;
    for (std::size_t k = 0; k < split.size(); ++k) {
      if (split[k]) {
        c.options.push_back(split[k]);
        items.push_back(menu[k]);
      }
    }
    const std::vector<Choice> choices{c};
    move(h, s, kAssert, choices, [&](NodeId child, const std::vector<TypeSet>& picks) {
      State t = s;
      record(t, choices, picks);
      const auto idx = static_cast<std::size_t>(std::find(c.options.begin(), c.options.end(), picks[0]) - c.options.begin());
      t.item[static_cast<std::size_t>(a)] = items[idx];
      assertion(child, std::move(t), who, next + 1);
    });
  }

  const Priorities& p_;
  int n_;
  std::vector<std::vector<int>> perms_;
  MechanismBuilder b_;
  bool fresh_root_ = true;
  std::map<Key, std::vector<NodeId>> sets_;
};

}  // namespace

Mechanism build_rda(const Priorities& p, int n) {
  if (n < 2) throw GradualError("RDA needs at least two agents");
  if (static_cast<int>(p.size()) != n) throw GradualError("priority structure needs one order per item");
  return RdaBuilder(p, n).build();
}

}  // namespace gradual
