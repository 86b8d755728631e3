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

TEST_CASE("random rules are strategy-proof and small") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto f = random_sp_scf(rng);
    CHECK(f.model().agent_count() >= 2);
    CHECK(f.model().agent_count() <= 3);
    CHECK(f.model().outcome_count() <= 3);
    CHECK(is_strategy_proof(f).holds);
  }
}

TEST_CASE("random mechanisms are valid and reproducible") {
  Rng a(42);
  Rng b(42);
  for (int k = 0; k < 50; ++k) {
    const auto f = random_sp_scf(a);
    const auto g = random_sp_scf(b);
    CHECK(f == g);
    const auto m1 = random_mechanism(f, a, 5);
    const auto m2 = random_mechanism(g, b, 5);
    CHECK(m1 == m2);
    CHECK(validate(m1, &f).ok());
  }
}

TEST_CASE("corpus holds the named examples and the random part") {
  const auto c = build_corpus(1, 20);
  int random = 0;
  bool g1 = false;
  bool ex1 = false;
  for (const auto& e : c) {
    if (e.name.rfind("random", 0) == 0) ++random;
    g1 = g1 || e.name == "voting G1";
    ex1 = ex1 || e.name == "example 1";
    CHECK(validate(e.gm, &e.f).ok());
  }
  CHECK(random == 20);
  CHECK(g1);
  CHECK(ex1);
}

TEST_CASE("random transformations respect the requested kinds") {
  Rng rng(8);
  const auto v = voting_examples();
  for (int k = 0; k < 20; ++k) {
    auto t = random_transformation(v.g4, rng, {Kind::coa});
    REQUIRE(t);
    CHECK(kind_of(*t) == Kind::coa);
  }
  CHECK_FALSE(random_transformation(v.direct, rng, {Kind::coa, Kind::spl, Kind::ill}));
}
