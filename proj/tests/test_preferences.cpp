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

TEST_CASE("weak orders from scores keep ties together") {
  const auto w = WeakOrder::from_scores(std::vector<int>{1, 3, 1});
  CHECK(w.levels().size() == 2);
  CHECK(w.level(1) == 0);
  CHECK(w.indifferent(0, 2));
  CHECK(w.strictly_prefers(1, 0));
  CHECK(w.weakly_prefers(0, 2));
}

TEST_CASE("weak orders reject levels that do not partition the outcomes") {
  CHECK_THROWS_AS(WeakOrder({{0}, {0, 1}}, 2), GradualError);
  CHECK_THROWS_AS(WeakOrder({{0}}, 2), GradualError);
  CHECK_THROWS_AS(WeakOrder({{0}, {}, {1}}, 2), GradualError);
}

TEST_CASE("profile encoding is mixed radix with agent 0 least significant") {
  const auto v = voting_examples();
  const auto& model = v.f.model();
  CHECK(model.profile_count() == 9);
  CHECK(model.encode({2, 0}) == 2);
  CHECK(model.encode({0, 2}) == 6);
  for (ProfileIndex k = 0; k < model.profile_count(); ++k) CHECK(model.encode(model.decode(k)) == k);
  std::vector<ProfileIndex> seen;
  model.for_each_profile({1 | 4, 2}, [&](ProfileIndex k) { seen.push_back(k); });
  CHECK(seen == std::vector<ProfileIndex>{3, 5});
}

TEST_CASE("voting rule is strategy-proof") {
  const auto v = voting_examples();
  CHECK(is_strategy_proof(v.f).holds);
  CHECK(v.f({0, 0}) == 0);
  CHECK(v.f({2, 2}) == 2);
  CHECK(v.f({0, 2}) == 1);
}

TEST_CASE("a manipulable rule yields a witness") {
  // agent 1 alone decides, but against her own report
  auto model = std::make_shared<const TypeModel>(
      std::vector<AgentTypes>{{"1", {"x", "y"}, {WeakOrder({{0}, {1}}, 2), WeakOrder({{1}, {0}}, 2)}}},
      std::vector<std::string>{"X", "Y"});
  const ScfTable f(model, {1, 0});
  const auto sp = is_strategy_proof(f);
  REQUIRE_FALSE(sp.holds);
  CHECK(sp.witness->agent == 0);
  CHECK(sp.witness->truth == 0);
  CHECK(sp.witness->lie == 1);
  CHECK_FALSE(oracle::brute_force_sp(f));
}

TEST_CASE("strategy-proofness agrees with the quadruple oracle on random rules") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto f = random_sp_scf(rng);
    CHECK(is_strategy_proof(f).holds);
    CHECK(oracle::brute_force_sp(f));
    // perturb one row to get rules that are often manipulable
    auto table = f.table();
    table[static_cast<std::size_t>(k) % table.size()] = (table[static_cast<std::size_t>(k) % table.size()] + 1) % f.model().outcome_count();
    const ScfTable g(f.model_ptr(), table);
    CHECK(is_strategy_proof(g).holds == oracle::brute_force_sp(g));
  }
}

TEST_CASE("serial dictatorship and TTC rules are strategy-proof") {
  CHECK(is_strategy_proof(serial_dictatorship_scf()).holds);
  for (int n = 2; n <= 3; ++n) {
    for (const auto& p : all_priority_structures(n)) CHECK(is_strategy_proof(ttc_scf(p, n)).holds);
  }
}
