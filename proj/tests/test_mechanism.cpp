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

#include <algorithm>

#include "gradual/generators.hpp"

using namespace gradual;

namespace {

bool has_rule(const ValidationReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

}  // namespace

TEST_CASE("direct mechanisms are static and valid") {
  const auto v = voting_examples();
  CHECK(v.direct.is_static());
  CHECK(validate(v.direct, &v.f).ok());
  CHECK(v.direct.node_count() == 10);
  CHECK(v.direct.terminals().size() == 9);
  CHECK_FALSE(v.g1.is_static());
}

TEST_CASE("canonical numbering makes equal trees compare equal") {
  const auto v = voting_examples();
  CHECK(apply_coa(v.g4, v.finish) == v.direct);
  CHECK(apply_coa(v.g4, v.finish).fingerprint() == v.direct.fingerprint());
  CHECK(v.g1.fingerprint() != v.g3.fingerprint());
  for (NodeId h = 1; h < v.g1.node_count(); ++h) CHECK(v.g1.parent(h) < h);
}

TEST_CASE("builder ids may be arbitrary") {
  const auto v = voting_examples();
  MechanismBuilder b(v.f.model_ptr());
  // voter 2 first, then voter 1: a sequential dictator-free tree
  const NodeId r = b.root();
  std::vector<NodeId> mid;
  for (int t = 2; t >= 0; --t) mid.push_back(b.add_child(r, {7, TypeSet{1} << t}));
  for (int t2 = 0; t2 < 3; ++t2) {
    for (int t1 = 0; t1 < 3; ++t1) {
      const NodeId z = b.add_child(mid[static_cast<std::size_t>(2 - t2)], {TypeSet{1} << t1, 0});
      b.set_outcome(z, v.f({t1, t2}));
    }
  }
  b.add_info_set(1, {r});
  b.add_info_set(0, {r});
  b.add_info_set(0, mid);
  const Mechanism gm = b.build();
  CHECK(validate(gm, &v.f).ok());
  CHECK(gm.info_sets(0).size() == 2);
  CHECK(gm.info_set(0, 1).nodes.size() == 3);
}

TEST_CASE("validation flags overlapping actions and outcome mismatches") {
  const auto v = voting_examples();
  MechanismBuilder b(v.f.model_ptr());
  const NodeId r = b.root();
  const NodeId a = b.add_child(r, {1 | 2, 7});
  const NodeId c = b.add_child(r, {2 | 4, 7});
  b.set_outcome(a, 0);
  b.set_outcome(c, 1);
  b.singleton_info_sets(0);
  b.singleton_info_sets(1);
  const auto report = validate(b.build(), &v.f);
  CHECK_FALSE(report.ok());
  CHECK(has_rule(report, "disjoint-actions"));
}

TEST_CASE("validation flags a terminal outcome that disagrees with the rule") {
  const auto v = voting_examples();
  MechanismBuilder b(v.f.model_ptr());
  const NodeId r = b.root();
  for (int t1 = 0; t1 < 3; ++t1) {
    for (int t2 = 0; t2 < 3; ++t2) {
      const NodeId z = b.add_child(r, {TypeSet{1} << t1, TypeSet{1} << t2});
      b.set_outcome(z, t1 == 0 && t2 == 0 ? 2 : v.f({t1, t2}));
    }
  }
  b.singleton_info_sets(0);
  b.singleton_info_sets(1);
  const auto gm = b.build();
  CHECK(validate(gm).ok());
  CHECK_FALSE(validate(gm, &v.f).ok());
}

TEST_CASE("validation flags actions that do not cover the remaining types") {
  const auto v = voting_examples();
  MechanismBuilder b(v.f.model_ptr());
  const NodeId r = b.root();
  for (int t1 = 0; t1 < 2; ++t1) {
    for (int t2 = 0; t2 < 3; ++t2) {
      const NodeId z = b.add_child(r, {TypeSet{1} << t1, TypeSet{1} << t2});
      b.set_outcome(z, v.f({t1, t2}));
    }
  }
  b.singleton_info_sets(0);
  b.singleton_info_sets(1);
  CHECK_FALSE(validate(b.build()).ok());
}

TEST_CASE("information sets must respect perfect recall") {
  const auto v = voting_examples();
  // voter 2 moves once more on the L branch but is pooled with an M history
  MechanismBuilder b(v.f.model_ptr());
  const NodeId r = b.root();
  const NodeId a = b.add_child(r, {1, 7});
  const NodeId c = b.add_child(r, {6, 7});
  const NodeId a2 = b.add_child(a, {0, 7});
  const NodeId c1 = b.add_child(c, {2, 0});
  const NodeId c2 = b.add_child(c, {4, 0});
  for (int t2 = 0; t2 < 3; ++t2) {
    b.set_outcome(b.add_child(a2, {0, TypeSet{1} << t2}), v.f({0, t2}));
    b.set_outcome(b.add_child(c1, {0, TypeSet{1} << t2}), v.f({1, t2}));
    b.set_outcome(b.add_child(c2, {0, TypeSet{1} << t2}), v.f({2, t2}));
  }
  b.add_info_set(0, {r});
  b.add_info_set(0, {c});
  b.add_info_set(1, {r});
  b.add_info_set(1, {a});
  b.add_info_set(1, {a2, c1});
  b.add_info_set(1, {c2});
  const auto report = validate(b.build(), &v.f);
  CHECK_FALSE(report.ok());
  CHECK(has_rule(report, "perfect-recall"));
}

TEST_CASE("structural queries on G3") {
  const auto v = voting_examples();
  const auto& g3 = v.g3;
  CHECK(g3.info_sets(1).size() == 3);
  const auto pairs = siblings_same_action(g3);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].agent == 1);
  const auto pred = own_predecessor(g3, 1, pairs[0].first);
  REQUIRE(pred);
  CHECK(pred->info_set == 0);
  CHECK_FALSE(own_predecessor(g3, 1, 0));
  CHECK(terminals_below(g3, g3.root()) == g3.terminals());
  for (NodeId z : g3.terminals()) CHECK(terminals_below(g3, z) == std::vector<NodeId>{z});
}

TEST_CASE("theta queries") {
  const auto v = voting_examples();
  const auto& g1 = v.g1;
  const NodeId after_m = node_at(g1, {{2, 7}});
  CHECK(g1.theta(after_m, 0) == 2);
  CHECK(g1.theta(after_m, 1) == 7);
  const int k = g1.info_set_of(after_m, 1);
  CHECK(theta_of_info_set(g1, 1, k) == 7);
  const auto sample = sample_profile(g1, after_m);
  CHECK(sample == TypeProfile{1, 0});
  CHECK(sample_profile(g1, after_m, std::pair{1, 2}) == TypeProfile{1, 2});
}
