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

using namespace gradual;

TEST_CASE("the voting mechanisms are linked by the named transformations") {
  const auto v = voting_examples();
  const auto split = apply_spl(v.g1, v.split);
  CHECK(validate(split, &v.f).ok());
  CHECK(apply_coa(split, v.split_merge) == v.g2);
  CHECK(apply_coa(v.g2, v.advance) == v.g3);
  CHECK(apply_ill(v.g4, v.illuminate) == v.g3);
  CHECK(apply_coa(v.g4, v.finish) == v.direct);
}

TEST_CASE("inverse ILL undoes ILL") {
  const auto v = voting_examples();
  const auto pairs = siblings_same_action(v.g3);
  REQUIRE(pairs.size() == 1);
  const auto merged = apply_inverse_ill(v.g3, InverseIll{pairs[0].agent, pairs[0].first, pairs[0].second});
  CHECK(merged == v.g4);
}

TEST_CASE("SPL splits only terminal reports") {
  const auto v = voting_examples();
  const auto s = apply_spl(v.g1, v.split);
  CHECK(s.node_count() == v.g1.node_count() + 2);
  CHECK(is_ic(s, v.f).holds);
  Spl wrong = v.split;
  wrong.part1 = 1 | 2;
  CHECK_THROWS_AS(apply_spl(v.g1, wrong), GradualError);
}

TEST_CASE("COA needs an uninformed successor") {
  const auto v = voting_examples();
  // in G3 voter 2's sets after L and after R differ in what she learned
  for (const auto& t : find_opportunities(v.g3, Kind::coa)) {
    const auto& c = std::get<Coa>(t);
    CHECK_NOTHROW(apply_coa(v.g3, c));
  }
  const auto pairs = siblings_same_action(v.g3);
  const auto pred = own_predecessor(v.g3, 1, pairs[0].first);
  REQUIRE(pred);
  CHECK_THROWS_AS(apply_coa(v.g3, Coa{1, pred->info_set, pairs[0].first, pred->action}), GradualError);
}

TEST_CASE("incentive preservation") {
  const auto v = voting_examples();
  CHECK(is_incentive_preserving(v.g4, v.illuminate, v.f).holds);
  const auto a22 = second_price_scf(2, 2);
  const auto g22 = build_gstar(a22);
  const auto ip = is_incentive_preserving(g22, example1_ill(g22), a22.f);
  REQUIRE_FALSE(ip.holds);
  CHECK(ip.witness->kind == "ill");
  CHECK(ip.witness->harmed == 0);
  const auto a32 = second_price_scf(3, 2);
  const auto base = example2_base(a32);
  CHECK(is_incentive_preserving(base, example2_ill(base), a32.f).holds);
}

TEST_CASE("ILL parts must partition an information set") {
  const auto v = voting_examples();
  Ill bad = v.illuminate;
  bad.part2.clear();
  CHECK_THROWS_AS(apply_ill(v.g4, bad), GradualError);
  bad = v.illuminate;
  bad.part2 = bad.part1;
  CHECK_THROWS_AS(apply_ill(v.g4, bad), GradualError);
}

TEST_CASE("uncoalescing then coalescing returns to the start") {
  const auto v = voting_examples();
  const auto opps = find_opportunities(v.direct, Kind::uncoalesce);
  REQUIRE_FALSE(opps.empty());
  for (const auto& t : opps) {
    const auto up = apply(v.direct, t);
    CHECK(validate(up, &v.f).ok());
    CHECK(is_ic(up, v.f).holds);
    const auto back = first_coa(up);
    REQUIRE(back);
    CHECK(apply_coa(up, *back) == v.direct);
  }
}

TEST_CASE("reduction of G1 follows the documented chain") {
  const auto v = voting_examples();
  const auto chain = reduce_to_direct(v.g1, v.f);
  std::vector<Kind> kinds;
  for (const auto& s : chain.steps) kinds.push_back(kind_of(s.step));
  CHECK(kinds == std::vector<Kind>{Kind::spl, Kind::coa, Kind::coa, Kind::inverse_ill, Kind::coa});
  CHECK(*chain.result == v.direct);
  CHECK(theorem1_verdict(chain));
  const auto again = reduce_to_direct(v.g1, v.f);
  REQUIRE(again.steps.size() == chain.steps.size());
  for (std::size_t k = 0; k < chain.steps.size(); ++k) CHECK(again.steps[k].fingerprint == chain.steps[k].fingerprint);
}

TEST_CASE("reduction verdict follows incentive compatibility") {
  const auto sd = serial_dictatorship_pair();
  const auto good = reduce_to_direct(sd.good, sd.f);
  CHECK(theorem1_verdict(good));
  const auto bad = reduce_to_direct(sd.bad, sd.f);
  CHECK_FALSE(theorem1_verdict(bad));
  CHECK(bad.result->is_static());
  CHECK(validate(*bad.result, &sd.f).ok());
}

TEST_CASE("describe names the kind") {
  const auto v = voting_examples();
  CHECK(describe(v.g1, Transformation{v.split}).rfind("SPL", 0) == 0);
  CHECK(describe(v.g4, Transformation{v.illuminate}).rfind("ILL", 0) == 0);
  CHECK(kind_name(Kind::inverse_ill) == "inverse-ILL");
}
