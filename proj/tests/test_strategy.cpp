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

#include <doctest.h>

#include "gradual/corpus.hpp"
#include "oracles.hpp"

using namespace gradual;

TEST_CASE("truthful play reaches the terminal carrying the profile") {
  const auto v = voting_examples();
  for (const Mechanism* gm : {&v.g1, &v.g2, &v.g3, &v.g4, &v.direct}) {
    const auto& model = v.f.model();
    for (ProfileIndex k = 0; k < model.profile_count(); ++k) {
      const auto theta = model.decode(k);
      const NodeId z = play(*gm, truthful_profile(*gm, theta));
      CHECK(z == truthful_terminal(*gm, theta));
      CHECK(z == gm->truthful_terminal(k));
      CHECK(*gm->outcome(z) == v.f(k));
    }
  }
}

TEST_CASE("play rejects incomplete profiles") {
  const auto v = voting_examples();
  PartialStrategyProfile s = unconditional_strategy(v.g1, 0, 0);
  CHECK_THROWS_AS(play(v.g1, s), GradualError);
  s.merge(unconditional_strategy(v.g1, 1, 2));
  CHECK(*v.g1.outcome(play(v.g1, s)) == 1);
}

TEST_CASE("common strategy test excludes all agents only by mistake") {
  const auto v = voting_examples();
  const NodeId z = v.g1.terminals().front();
  CHECK_THROWS_AS(common_strategy_exists(v.g1, z, z, 3), GradualError);
  CHECK(common_strategy_exists(v.g1, z, z, 1));
}

TEST_CASE("common strategy test matches strategy enumeration") {
  Rng rng(5);
  std::vector<std::pair<Mechanism, ScfTable>> cases;
  const auto v = voting_examples();
  for (const Mechanism* gm : {&v.g1, &v.g2, &v.g3, &v.g4}) cases.emplace_back(*gm, v.f);
  const auto sd = serial_dictatorship_pair();
  cases.emplace_back(sd.good, sd.f);
  for (int k = 0; k < 30; ++k) {
    auto f = random_sp_scf(rng);
    cases.emplace_back(random_mechanism(f, rng, 4), f);
  }
  int compared = 0;
  for (const auto& [gm, f] : cases) {
    const AgentSet all = (AgentSet{1} << gm.agent_count()) - 1;
    for (AgentSet excluded = 0; excluded < all; ++excluded) {
      if (oracle::profile_count(gm, excluded) > 2000) continue;
      for (NodeId z1 : gm.terminals()) {
        for (NodeId z2 : gm.terminals()) {
          CHECK(common_strategy_exists(gm, z1, z2, excluded) == oracle::common_strategy(gm, z1, z2, excluded));
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("consistent pairs for one agent are symmetric") {
  const auto sd = serial_dictatorship_pair();
  std::vector<std::pair<NodeId, NodeId>> pairs;
  consistent_profile_pairs(sd.bad, 1, std::nullopt, [&](NodeId a, NodeId b) { pairs.emplace_back(a, b); });
  CHECK_FALSE(pairs.empty());
  for (auto [a, b] : pairs) {
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{b, a}) != pairs.end());
    CHECK(consistent_pair(sd.bad, a, b, agent_bit(1)));
  }
}
