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

#include "gradual/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gradual {

namespace {

int permutation_rank(const std::vector<int>& perm) {
  int rank = 0;
  const auto n = perm.size();
  for (std::size_t k = 0; k < n; ++k) {
    int smaller = 0;
    for (std::size_t l = k + 1; l < n; ++l) smaller += perm[l] < perm[k] ? 1 : 0;
    int fact = 1;
    for (std::size_t f = 2; f < n - k; ++f) fact *= static_cast<int>(f);
    rank += smaller * fact;
  }
  return rank;
}

std::string item_name(int item) { return std::string(1, static_cast<char>('a' + item)); }

std::shared_ptr<const TypeModel> make_model(std::vector<AgentTypes> agents, std::vector<std::string> outcomes) {
  return std::make_shared<const TypeModel>(std::move(agents), std::move(outcomes));
}

}  // namespace

Mechanism direct_mechanism(const ScfTable& f) {
  const TypeModel& model = f.model();
  MechanismBuilder b(f.model_ptr());
  for (ProfileIndex p = 0; p < model.profile_count(); ++p) {
    const auto types = model.decode(p);
    Profile move;
    for (int t : types) move.push_back(singleton(t));
    b.set_outcome(b.add_child(b.root(), move), f(p));
  }
  for (int i = 0; i < model.agent_count(); ++i) b.add_info_set(i, {b.root()});
  return b.build();
}

NodeId node_at(const Mechanism& gm, const std::vector<Profile>& moves) {
  NodeId h = gm.root();
  for (const Profile& m : moves) {
    NodeId next = kNoNode;
    for (NodeId c : gm.children(h)) {
      if (gm.move(c) == m) next = c;
    }
    if (next == kNoNode) throw GradualError("no such history");
    h = next;
  }
  return h;
}

// ---------------------------------------------------------------- voting

namespace {

constexpr TypeSet kL = 1;
constexpr TypeSet kM = 2;
constexpr TypeSet kR = 4;
constexpr TypeSet kLR = kL | kR;
constexpr TypeSet kAll = 7;
constexpr OutcomeId kWinL = 0;
constexpr OutcomeId kWinM = 1;
constexpr OutcomeId kWinR = 2;

std::shared_ptr<const TypeModel> voting_model() {
  const int x = 3;
  std::vector<WeakOrder> prefs{WeakOrder({{kWinL}, {kWinM}, {kWinR}}, x), WeakOrder({{kWinM}, {kWinL, kWinR}}, x),
                               WeakOrder({{kWinR}, {kWinM}, {kWinL}}, x)};
  std::vector<std::string> types{"L", "M", "R"};
  return make_model({AgentTypes{"1", types, prefs}, AgentTypes{"2", types, prefs}}, {"L", "M", "R"});
}

OutcomeId median(int t1, int t2) {
  if (t1 == 0 && t2 == 0) return kWinL;
  if (t1 == 2 && t2 == 2) return kWinR;
  return kWinM;
}

}  // namespace

ScfTable voting_scf() {
  auto model = voting_model();
  std::vector<OutcomeId> table;
  for (ProfileIndex p = 0; p < model->profile_count(); ++p) {
    const auto t = model->decode(p);
    table.push_back(median(t[0], t[1]));
  }
  return ScfTable(model, std::move(table));
}

VotingExamples voting_examples() {
  const ScfTable f = voting_scf();
  auto model = f.model_ptr();

  MechanismBuilder b1(model);
  const NodeId m = b1.add_child(b1.root(), {kM, kAll});
  const NodeId lr = b1.add_child(b1.root(), {kLR, kAll});
  b1.set_outcome(b1.add_child(m, {0, kM}), kWinM);
  b1.set_outcome(b1.add_child(m, {0, kLR}), kWinM);
  std::vector<NodeId> pooled;
  for (int t1 : {0, 2}) {
    const NodeId d = b1.add_child(lr, {singleton(t1), 0});
    pooled.push_back(d);
    for (int t2 = 0; t2 < 3; ++t2) b1.set_outcome(b1.add_child(d, {0, singleton(t2)}), median(t1, t2));
  }
  b1.add_info_set(0, {b1.root()});
  b1.add_info_set(0, {lr});
  b1.add_info_set(1, {b1.root()});
  b1.add_info_set(1, {m});
  b1.add_info_set(1, pooled);
  const Mechanism g1 = b1.build();

  MechanismBuilder b4(model);
  std::vector<NodeId> after;
  for (int t1 = 0; t1 < 3; ++t1) {
    const NodeId d = b4.add_child(b4.root(), {singleton(t1), kAll});
    after.push_back(d);
    for (int t2 = 0; t2 < 3; ++t2) b4.set_outcome(b4.add_child(d, {0, singleton(t2)}), median(t1, t2));
  }
  b4.add_info_set(0, {b4.root()});
  b4.add_info_set(1, {b4.root()});
  b4.add_info_set(1, after);
  const Mechanism g4 = b4.build();

  const NodeId g1m = node_at(g1, {{kM, kAll}});
  const Spl split{1, g1.info_set_of(g1m, 1), kLR, kL, kR};
  const Mechanism s1 = apply_spl(g1, split);
  const NodeId s1m = node_at(s1, {{kM, kAll}});
  const NodeId s1bar = node_at(s1, {{kM, kAll}, {0, kLR}});
  const Coa split_merge{1, s1.info_set_of(s1m, 1), s1.info_set_of(s1bar, 1), kLR};
  const Mechanism g2 = apply_coa(s1, split_merge);
  const NodeId g2lr = node_at(g2, {{kLR, kAll}});
  const Coa advance{0, g2.info_set_of(g2.root(), 0), g2.info_set_of(g2lr, 0), kLR};
  const Mechanism g3 = apply_coa(g2, advance);

  const NodeId g4l = node_at(g4, {{kL, kAll}});
  const NodeId g4m = node_at(g4, {{kM, kAll}});
  const NodeId g4r = node_at(g4, {{kR, kAll}});
  const Ill illuminate{1, g4.info_set_of(g4l, 1), {g4l, g4r}, {g4m}};
  const Coa finish{1, g4.info_set_of(g4.root(), 1), g4.info_set_of(g4l, 1), kAll};

  return VotingExamples{f, g1, g2, g3, g4, direct_mechanism(f), split, split_merge, advance, illuminate, finish};
}

// ------------------------------------------------------- matching models

std::vector<std::vector<int>> rankings(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string ranking_name(const std::vector<int>& ranking) {
  std::string out;
  for (int item : ranking) out += item_name(item);
  return out;
}

OutcomeId matching_outcome(const std::vector<int>& items) { return permutation_rank(items); }

std::vector<int> matching_of(int n, OutcomeId x) { return rankings(n)[static_cast<std::size_t>(x)]; }

std::shared_ptr<const TypeModel> matching_model(int n) {
  static std::map<int, std::shared_ptr<const TypeModel>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const auto perms = rankings(n);
  std::vector<std::string> outcomes;
  for (const auto& match : perms) {
    std::string name;
    for (int a = 0; a < n; ++a) name += std::to_string(a + 1) + item_name(match[static_cast<std::size_t>(a)]);
    outcomes.push_back(name);
  }
  std::vector<AgentTypes> agents;
  for (int a = 0; a < n; ++a) {
    AgentTypes at{std::to_string(a + 1), {}, {}};
    for (const auto& r : perms) {
      at.type_names.push_back(ranking_name(r));
      std::vector<int> score;
      for (const auto& match : perms) {
        const int item = match[static_cast<std::size_t>(a)];
        score.push_back(-static_cast<int>(std::find(r.begin(), r.end(), item) - r.begin()));
      }
      at.preferences.push_back(WeakOrder::from_scores(score));
    }
    agents.push_back(std::move(at));
  }
  auto model = make_model(std::move(agents), std::move(outcomes));
  cache.emplace(n, model);
  return model;
}

// ---------------------------------------------------- serial dictatorship

ScfTable serial_dictatorship_scf() {
  const auto model = matching_model(3);
  const auto perms = rankings(3);
  std::vector<OutcomeId> table;
  for (ProfileIndex p = 0; p < model->profile_count(); ++p) {
    const auto t = model->decode(p);
    std::vector<int> items(3, -1);
    std::vector<bool> taken(3, false);
    for (int a = 0; a < 3; ++a) {
      for (int item : perms[static_cast<std::size_t>(t[static_cast<std::size_t>(a)])]) {
        if (!taken[static_cast<std::size_t>(item)]) {
          items[static_cast<std::size_t>(a)] = item;
          taken[static_cast<std::size_t>(item)] = true;
          break;
        }
      }
    }
    table.push_back(matching_outcome(items));
  }
  return ScfTable(model, std::move(table));
}

SerialDictatorshipPair serial_dictatorship_pair() {
  const ScfTable f = serial_dictatorship_scf();
  auto model = f.model_ptr();
  const auto perms = rankings(3);
  const TypeSet all = model->all_types(0);
  auto top_is = [&](int item) {
    TypeSet s = 0;
    for (std::size_t r = 0; r < perms.size(); ++r) {
      if (perms[r][0] == item) s |= singleton(static_cast<int>(r));
    }
    return s;
  };
  auto before = [&](int x, int y) {
    TypeSet s = 0;
    for (std::size_t r = 0; r < perms.size(); ++r) {
      const auto& p = perms[r];
      if (std::find(p.begin(), p.end(), x) < std::find(p.begin(), p.end(), y)) s |= singleton(static_cast<int>(r));
    }
    return s;
  };
  auto remaining = [](int x) {
    std::vector<int> out;
    for (int item = 0; item < 3; ++item) {
      if (item != x) out.push_back(item);
    }
    return out;
  };

  MechanismBuilder good(model);
  for (int x = 0; x < 3; ++x) {
    const NodeId h = good.add_child(good.root(), {top_is(x), all, all});
    const auto rest = remaining(x);
    for (int k = 0; k < 2; ++k) {
      const int y = rest[static_cast<std::size_t>(k)];
      const int w = rest[static_cast<std::size_t>(1 - k)];
      std::vector<int> items{x, y, w};
      good.set_outcome(good.add_child(h, {0, before(y, w), 0}), matching_outcome(items));
    }
  }
  for (int i = 0; i < 3; ++i) good.add_info_set(i, {good.root()});
  good.singleton_info_sets(1);

  MechanismBuilder bad(model);
  std::vector<NodeId> a_top;
  std::vector<NodeId> other;
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const NodeId h = bad.add_child(bad.root(), {all, singleton(static_cast<int>(r)), all});
    (perms[r][0] == 0 ? a_top : other).push_back(h);
    for (int x = 0; x < 3; ++x) {
      int y = -1;
      for (int item : perms[r]) {
        if (item != x) {
          y = item;
          break;
        }
      }
      std::vector<int> items{x, y, 3 - x - y};
      bad.set_outcome(bad.add_child(h, {top_is(x), 0, 0}), matching_outcome(items));
    }
  }
  for (int i = 0; i < 3; ++i) bad.add_info_set(i, {bad.root()});
  bad.add_info_set(0, a_top);
  bad.add_info_set(0, other);

  return SerialDictatorshipPair{f, good.build(), bad.build()};
}

// ----------------------------------------------------------------- auction

Rational expected_payoff(const Lottery& x, AgentId bidder, int value) {
  if ((x.winners & agent_bit(bidder)) == 0) return Rational(0);
  return Rational(value - x.price, std::popcount(x.winners));
}

Rational expected_payoff(const Auction& a, const std::vector<int>& bids, AgentId bidder, int value) {
  TypeProfile types;
  for (int b : bids) types.push_back(b - 1);
  return expected_payoff(a.lotteries[static_cast<std::size_t>(a.f(types))], bidder, value);
}

namespace {

Lottery second_price(const std::vector<int>& values) {
  const int top = *std::max_element(values.begin(), values.end());
  Lottery x;
  int second = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == top) {
      x.winners |= agent_bit(static_cast<AgentId>(k));
    }
  }
  if (std::popcount(x.winners) > 1) {
    second = top;
  } else {
    for (int v : values) {
      if (v != top) second = std::max(second, v);
    }
  }
  x.price = second;
  return x;
}

std::string lottery_name(const Lottery& x) {
  std::string out = "{";
  bool first = true;
  for (int k = 0; k < kMaxAgents; ++k) {
    if ((x.winners & agent_bit(k)) == 0) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(k + 1);
  }
  return out + "}@" + std::to_string(x.price);
}

}  // namespace

Auction second_price_scf(int n, int m) {
  if (n < 2 || m < 1) throw GradualError("auction needs n >= 2 and m >= 1");
  std::vector<std::vector<int>> profiles;
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  while (true) {
    profiles.push_back(v);
    std::size_t k = 0;
    for (; k < v.size(); ++k) {
      if (++v[k] <= m) break;
      v[k] = 1;
    }
    if (k == v.size()) break;
  }
  std::map<std::pair<int, AgentSet>, int> index;
  for (const auto& p : profiles) {
    const Lottery x = second_price(p);
    index.emplace(std::pair(x.price, x.winners), 0);
  }
  Auction a;
  a.n = n;
  a.m = m;
  std::vector<std::string> names;
  for (auto& [key, id] : index) {
    id = static_cast<int>(a.lotteries.size());
    a.lotteries.push_back(Lottery{key.second, key.first});
    names.push_back(lottery_name(a.lotteries.back()));
  }
  std::vector<AgentTypes> agents;
  for (int i = 0; i < n; ++i) {
    AgentTypes at{std::to_string(i + 1), {}, {}};
    for (int value = 1; value <= m; ++value) {
      at.type_names.push_back(std::to_string(value));
      std::vector<Rational> score;
      for (const auto& x : a.lotteries) score.push_back(expected_payoff(x, i, value));
      at.preferences.push_back(WeakOrder::from_scores(score));
    }
    agents.push_back(std::move(at));
  }
  auto model = make_model(std::move(agents), std::move(names));
  std::vector<OutcomeId> table(model->profile_count());
  for (const auto& p : profiles) {
    TypeProfile t;
    for (int value : p) t.push_back(value - 1);
    const Lottery x = second_price(p);
    table[model->encode(t)] = index.at({x.price, x.winners});
  }
  a.f = ScfTable(model, std::move(table));
  return a;
}

namespace {

struct ClockState {
  int level = 1;
  std::vector<AgentId> remaining;
  std::size_t pos = 0;
  AgentSet stays = 0;
  std::vector<AgentSet> record;  // stayers at each previous level
};

class GstarBuilder {
 public:
  explicit GstarBuilder(const Auction& a) : a_(a), b_(a.f.model_ptr()) {}

  Mechanism build() {
    ClockState s;
    for (int i = 0; i < a_.n; ++i) s.remaining.push_back(i);
    expand(b_.root(), s, true);
    for (int i = 0; i < a_.n; ++i) {
      if (i != 0) b_.add_info_set(i, {b_.root()});
    }
    for (auto& [key, nodes] : pooled_) b_.add_info_set(std::get<0>(key), nodes);
    for (int i = 0; i < a_.n; ++i) b_.singleton_info_sets(i);
    return b_.build();
  }

 private:
  OutcomeId outcome(AgentSet winners, int price) const {
    for (std::size_t k = 0; k < a_.lotteries.size(); ++k) {
      if (a_.lotteries[k].winners == winners && a_.lotteries[k].price == price) return static_cast<OutcomeId>(k);
    }
    throw GradualError("internal: auction outcome missing");
  }

  void expand(NodeId h, const ClockState& s, bool at_root) {
    const AgentId bidder = s.remaining[s.pos];
    const int p = s.level;
    if (std::popcount(s.stays) < 2) pooled_[{bidder, p, s.record}].push_back(h);
    const TypeSet stay = full_set(a_.m) & ~full_set(p);
    const TypeSet leave = singleton(p - 1);
    for (bool stays : {false, true}) {
      Profile move(static_cast<std::size_t>(a_.n), 0);
      if (at_root) move = Profile(static_cast<std::size_t>(a_.n), full_set(a_.m));
      move[static_cast<std::size_t>(bidder)] = stays ? stay : leave;
      const NodeId c = b_.add_child(h, move);
      ClockState next = s;
      if (stays) next.stays |= agent_bit(bidder);
      if (++next.pos < s.remaining.size()) {
        expand(c, next, false);
        continue;
      }
      const int count = std::popcount(next.stays);
      AgentSet everyone = 0;
      for (AgentId k : s.remaining) everyone |= agent_bit(k);
      if (count == 0) {
        b_.set_outcome(c, outcome(everyone, p));
      } else if (count == 1) {
        b_.set_outcome(c, outcome(next.stays, p));
      } else if (p + 1 == a_.m) {
        b_.set_outcome(c, outcome(next.stays, a_.m));
      } else {
        ClockState up;
        up.level = p + 1;
        for (AgentId k : s.remaining) {
          if (next.stays & agent_bit(k)) up.remaining.push_back(k);
        }
        up.record = s.record;
        up.record.push_back(next.stays);
        expand(c, up, false);
      }
    }
  }

  const Auction& a_;
  MechanismBuilder b_;
  std::map<std::tuple<AgentId, int, std::vector<AgentSet>>, std::vector<NodeId>> pooled_;
};

}  // namespace

Mechanism build_gstar(const Auction& a) {
  if (a.n < 2 || a.m < 2) throw GradualError("G* needs n >= 2 and m >= 2");
  return GstarBuilder(a).build();
}

Ill example1_ill(const Mechanism& gstar22) {
  const TypeSet all = 3;
  const NodeId left = node_at(gstar22, {{1, all}});
  const NodeId stayed = node_at(gstar22, {{2, all}});
  return Ill{1, gstar22.info_set_of(left, 1), {left}, {stayed}};
}

Mechanism example2_base(const Auction& a32) {
  if (a32.n != 3 || a32.m != 2) throw GradualError("example 2 uses three bidders and two values");
  MechanismBuilder b(a32.f.model_ptr());
  std::vector<NodeId> pooled;
  for (int v1 = 0; v1 < 2; ++v1) {
    for (int v2 = 0; v2 < 2; ++v2) {
      const NodeId h = b.add_child(b.root(), {singleton(v1), singleton(v2), 3});
      pooled.push_back(h);
      for (int v3 = 0; v3 < 2; ++v3) b.set_outcome(b.add_child(h, {0, 0, singleton(v3)}), a32.f(TypeProfile{v1, v2, v3}));
    }
  }
  for (int i = 0; i < 3; ++i) b.add_info_set(i, {b.root()});
  b.add_info_set(2, pooled);
  return b.build();
}

Ill example2_ill(const Mechanism& base) {
  const NodeId both = node_at(base, {{2, 2, 3}});
  const int local = base.info_set_of(both, 2);
  Ill t{2, local, {both}, {}};
  for (NodeId h : base.info_set(2, local).nodes) {
    if (h != both) t.part2.push_back(h);
  }
  return t;
}

// --------------------------------------------------------------------- TTC

std::vector<Priorities> all_priority_structures(int n) {
  const auto orders = rankings(n);
  std::vector<Priorities> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
  while (true) {
    Priorities p;
    for (std::size_t d : digit) p.push_back(orders[d]);
    out.push_back(std::move(p));
    std::size_t k = 0;
    for (; k < digit.size(); ++k) {
      if (++digit[k] < orders.size()) break;
      digit[k] = 0;
    }
    if (k == digit.size()) break;
  }
  return out;
}

std::string priorities_name(const Priorities& p) {
  std::string out;
  for (std::size_t item = 0; item < p.size(); ++item) {
    if (item) out += " ";
    out += item_name(static_cast<int>(item)) + ":";
    for (AgentId a : p[item]) out += std::to_string(a + 1);
  }
  return out;
}

std::vector<int> top_trading_cycles(const Priorities& p, const std::vector<std::vector<int>>& prefs) {
  const int n = static_cast<int>(prefs.size());
  std::vector<int> assigned(static_cast<std::size_t>(n), -1);
  std::vector<bool> item_left(static_cast<std::size_t>(n), true);
  int left = n;
  while (left > 0) {
    std::vector<AgentId> owner(static_cast<std::size_t>(n), -1);
    for (int item = 0; item < n; ++item) {
      if (!item_left[static_cast<std::size_t>(item)]) continue;
      for (AgentId a : p[static_cast<std::size_t>(item)]) {
        if (assigned[static_cast<std::size_t>(a)] < 0) {
          owner[static_cast<std::size_t>(item)] = a;
          break;
        }
      }
    }
    std::vector<int> points(static_cast<std::size_t>(n), -1);
    for (AgentId a = 0; a < n; ++a) {
      if (assigned[static_cast<std::size_t>(a)] >= 0) continue;
      for (int item : prefs[static_cast<std::size_t>(a)]) {
        if (item_left[static_cast<std::size_t>(item)]) {
          points[static_cast<std::size_t>(a)] = item;
          break;
        }
      }
    }
    std::vector<int> take(static_cast<std::size_t>(n), -1);
    for (AgentId start = 0; start < n; ++start) {
      if (assigned[static_cast<std::size_t>(start)] >= 0) continue;
      // follow the pointers n steps to land on a cycle, then collect it
      AgentId a = start;
      for (int k = 0; k < n; ++k) a = owner[static_cast<std::size_t>(points[static_cast<std::size_t>(a)])];
      AgentId c = a;
      do {
        take[static_cast<std::size_t>(c)] = points[static_cast<std::size_t>(c)];
        c = owner[static_cast<std::size_t>(points[static_cast<std::size_t>(c)])];
      } while (c != a);
    }
    for (AgentId a = 0; a < n; ++a) {
      if (take[static_cast<std::size_t>(a)] < 0) continue;
      assigned[static_cast<std::size_t>(a)] = take[static_cast<std::size_t>(a)];
      item_left[static_cast<std::size_t>(take[static_cast<std::size_t>(a)])] = false;
      --left;
    }
  }
  return assigned;
}

ScfTable ttc_scf(const Priorities& p, int n) {
  if (n < 2) throw GradualError("TTC needs at least two agents");
  if (static_cast<int>(p.size()) != n) throw GradualError("priority structure needs one order per item");
  const auto model = matching_model(n);
  const auto perms = rankings(n);
  std::vector<OutcomeId> table;
  for (ProfileIndex q = 0; q < model->profile_count(); ++q) {
    const auto t = model->decode(q);
    std::vector<std::vector<int>> prefs;
    for (int ty : t) prefs.push_back(perms[static_cast<std::size_t>(ty)]);
    table.push_back(matching_outcome(top_trading_cycles(p, prefs)));
  }
  return ScfTable(model, std::move(table));
}

}  // namespace gradual
