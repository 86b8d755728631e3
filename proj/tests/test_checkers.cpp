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

TEST_CASE("voting mechanisms are IC, RP and IRP") {
  const auto v = voting_examples();
  for (const Mechanism* gm : {&v.g1, &v.g2, &v.g3, &v.g4, &v.direct}) {
    CHECK(is_ic(*gm, v.f).holds);
    CHECK(is_rp(*gm, v.f).holds);
    CHECK(is_rp(*gm, v.f, true).holds);
    CHECK(is_irp(*gm, v.f).holds);
    CHECK(oracle::brute_force_ic(*gm, v.f));
  }
}

TEST_CASE("serial dictatorship with early information is manipulable") {
  const auto sd = serial_dictatorship_pair();
  CHECK(is_ic(sd.good, sd.f).holds);
  const auto bad = is_ic(sd.bad, sd.f);
  REQUIRE_FALSE(bad.holds);
  const auto& w = *bad.witness;
  const auto& model = sd.f.model();
  CHECK(w.kind == "ic");
  CHECK(model.agent_name(w.harmed) == "2");
  CHECK(model.type_name(1, w.theta1[1]).substr(0, 2) == "ab");
  CHECK(model.type_name(1, w.theta2[1]).substr(0, 2) == "ba");
  CHECK(witness_is_genuine(sd.bad, sd.f, w));
  CHECK(describe(sd.bad, w).find("agent 2") == 0);
  CHECK_FALSE(oracle::brute_force_ic(sd.bad, sd.f));
  const auto rp = is_rp(sd.bad, sd.f);
  REQUIRE_FALSE(rp.holds);
  CHECK(rp.witness->reactor.has_value());
  CHECK(witness_is_genuine(sd.bad, sd.f, *rp.witness));
  const auto irp = is_irp(sd.bad, sd.f);
  REQUIRE_FALSE(irp.holds);
  CHECK(witness_is_genuine(sd.bad, sd.f, *irp.witness));
}

TEST_CASE("checkers refuse invalid input") {
  const auto v = voting_examples();
  const auto sd = serial_dictatorship_pair();
  CHECK_THROWS_AS(is_ic(v.g1, sd.f), GradualError);
  auto table = v.f.table();
  table[0] = 2;
  const ScfTable other(v.f.model_ptr(), table);
  CHECK_THROWS_AS(is_ic(v.g1, other), GradualError);
}

TEST_CASE("IRP is stronger than RP and RP equals IC on random mechanisms") {
  Rng rng(21);
  int failures = 0;
  for (int k = 0; k < 150; ++k) {
    const auto f = random_sp_scf(rng);
    const auto gm = random_mechanism(f, rng, 5);
    const bool ic = is_ic(gm, f).holds;
    const auto rp = is_rp(gm, f);
    CHECK(rp.holds == ic);
    CHECK(is_rp(gm, f, true).holds == ic);
    const auto irp = is_irp(gm, f);
    if (irp.holds) CHECK(rp.holds);
    if (!ic) {
      ++failures;
      CHECK(witness_is_genuine(gm, f, *is_ic(gm, f).witness));
      CHECK(witness_is_genuine(gm, f, *rp.witness));
    }
    if (!irp.holds) CHECK(witness_is_genuine(gm, f, *irp.witness));
    if (oracle::profile_count(gm) <= 5000) CHECK(oracle::brute_force_ic(gm, f) == ic);
  }
  CHECK(failures > 0);
}

TEST_CASE("auction examples") {
  const auto a22 = second_price_scf(2, 2);
  const auto g22 = build_gstar(a22);
  CHECK(is_ic(g22, a22.f).holds);
  CHECK(is_irp(g22, a22.f).holds);
  const auto ex1 = apply_ill(g22, example1_ill(g22));
  const auto v = is_ic(ex1, a22.f);
  REQUIRE_FALSE(v.holds);
  const auto& w = *v.witness;
  CHECK(w.harmed == 0);
  CHECK(w.theta1[0] == 1);  // value 2
  CHECK(expected_payoff(a22.lotteries[static_cast<std::size_t>(w.x2)], 0, 2) == Rational(1, 2));
  CHECK(expected_payoff(a22.lotteries[static_cast<std::size_t>(w.x1)], 0, 2) == Rational(0));
}
