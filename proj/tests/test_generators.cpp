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

#include "gradual/generators.hpp"
#include "oracles.hpp"

using namespace gradual;

TEST_CASE("rankings and matchings") {
  const auto r = rankings(3);
  REQUIRE(r.size() == 6);
  CHECK(ranking_name(r[0]) == "abc");
  CHECK(ranking_name(r[3]) == "bca");
  const auto model = matching_model(3);
  CHECK(model->outcome_count() == 6);
  CHECK(model->type_name(0, 5) == "cba");
  for (OutcomeId x = 0; x < 6; ++x) CHECK(matching_outcome(matching_of(3, x)) == x);
  CHECK(model->outcome_name(matching_outcome({1, 0, 2})) == "1b2a3c");
}

TEST_CASE("serial dictatorship rule") {
  const auto f = serial_dictatorship_scf();
  CHECK(matching_of(3, f({0, 0, 0})) == std::vector<int>{0, 1, 2});
  CHECK(matching_of(3, f({0, 2, 0})) == std::vector<int>{0, 1, 2});
  CHECK(matching_of(3, f({4, 4, 0})) == std::vector<int>{2, 0, 1});
}

TEST_CASE("second-price lotteries and payoffs") {
  const auto a = second_price_scf(2, 2);
  CHECK(expected_payoff(a, {2, 1}, 0, 2) == Rational(1));
  CHECK(expected_payoff(a, {2, 2}, 0, 2) == Rational(0));
  CHECK(expected_payoff(a, {1, 1}, 0, 2) == Rational(1, 2));
  CHECK(expected_payoff(a, {1, 2}, 0, 2) == Rational(0));
  const auto b = second_price_scf(3, 2);
  CHECK(expected_payoff(b, {2, 2, 1}, 0, 2) == Rational(0));
  CHECK(expected_payoff(b, {1, 1, 1}, 0, 2) == Rational(1, 3));
  CHECK(is_strategy_proof(b.f).holds);
}

TEST_CASE("G* shape") {
  const auto a = second_price_scf(3, 2);
  const auto g = build_gstar(a);
  CHECK(validate(g, &a.f).ok());
  // bidder 3 at price 1 tells "both stayed" apart from the rest
  std::vector<std::size_t> sizes;
  for (const auto& s : g.info_sets(2)) {
    if (s.nodes.front() != g.root()) sizes.push_back(s.nodes.size());
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 3});
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const auto b = second_price_scf(n, m);
    CHECK(validate(build_gstar(b), &b.f).ok());
  }
}

TEST_CASE("example mechanisms validate") {
  const auto a22 = second_price_scf(2, 2);
  const auto g22 = build_gstar(a22);
  CHECK(validate(apply_ill(g22, example1_ill(g22)), &a22.f).ok());
  const auto a32 = second_price_scf(3, 2);
  const auto base = example2_base(a32);
  CHECK(validate(base, &a32.f).ok());
  CHECK(validate(apply_ill(base, example2_ill(base)), &a32.f).ok());
}

TEST_CASE("priority structures") {
  CHECK(all_priority_structures(2).size() == 4);
  CHECK(all_priority_structures(3).size() == 216);
  CHECK(priorities_name(all_priority_structures(2)[0]) == "a:12 b:12");
}

TEST_CASE("TTC agrees with the oracle") {
  for (int n = 2; n <= 3; ++n) {
    const auto r = rankings(n);
    for (const auto& p : all_priority_structures(n)) {
      const auto f = ttc_scf(p, n);
      const auto& model = f.model();
      for (ProfileIndex k = 0; k < model.profile_count(); ++k) {
        const auto t = model.decode(k);
        std::vector<std::vector<int>> prefs;
        for (int a = 0; a < n; ++a) prefs.push_back(r[static_cast<std::size_t>(t[static_cast<std::size_t>(a)])]);
        CHECK(top_trading_cycles(p, prefs) == oracle::ttc(p, prefs));
        CHECK(matching_of(n, f(k)) == oracle::ttc(p, prefs));
      }
    }
  }
}

TEST_CASE("RDA implements TTC") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& p : all_priority_structures(n)) {
      const auto gm = build_rda(p, n);
      const auto f = ttc_scf(p, n);
      CHECK(validate(gm, &f).ok());
      for (ProfileIndex k = 0; k < f.model().profile_count(); ++k) CHECK(*gm.outcome(gm.truthful_terminal(k)) == f(k));
    }
  }
  CHECK_THROWS_AS(build_rda({{0}}, 1), GradualError);
}
