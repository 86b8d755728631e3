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
#include "gradual/io.hpp"

using namespace gradual;

namespace {

std::string where_of(const std::string& text) {
  try {
    parse_mechanism(text);
  } catch (const FormatError& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST_CASE("mechanisms survive a round trip") {
  for (const auto& e : build_corpus(9, 30)) {
    const auto text = write_mechanism(e.gm, e.f);
    const auto doc = parse_mechanism(text);
    CHECK(doc.gm == e.gm);
    CHECK(doc.f == e.f);
    CHECK(doc.f.model() == e.f.model());
    CHECK(write_mechanism(doc.gm, doc.f) == text);
  }
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(where_of("{\n  \"format\": ]") == "line 2, column 13");
  CHECK(where_of("") .rfind("line 1", 0) == 0);
}

TEST_CASE("shape errors carry a JSON pointer") {
  const auto v = voting_examples();
  auto j = mechanism_to_json(v.g1, v.f);
  j["tree"]["children"][1]["action"]["2"][0] = "Q";
  CHECK(where_of(j.dump()) == "/tree/children/1/action/2/0");
  j = mechanism_to_json(v.g1, v.f);
  j["format"] = "other";
  CHECK(where_of(j.dump()) == "/format");
  j = mechanism_to_json(v.g1, v.f);
  j["scf"].erase(3);
  CHECK(where_of(j.dump()) == "/scf");
  j = mechanism_to_json(v.g1, v.f);
  j["information_sets"][0]["nodes"].push_back(99);
  CHECK(where_of(j.dump()) == "/information_sets/0/nodes/1");
}

TEST_CASE("semantic errors name the node id used in the file") {
  const auto v = voting_examples();
  auto j = mechanism_to_json(v.direct, v.f);
  // renumber: shift every id by 100
  std::function<void(nlohmann::ordered_json&)> shift = [&](nlohmann::ordered_json& n) {
    n["id"] = n["id"].get<int>() + 100;
    if (n.contains("children")) {
      for (auto& c : n["children"]) shift(c);
    }
  };
  shift(j["tree"]);
  for (auto& s : j["information_sets"]) {
    for (auto& h : s["nodes"]) h = h.get<int>() + 100;
  }
  CHECK_NOTHROW(parse_mechanism(j.dump()));
  j["tree"]["children"][0]["outcome"] = "R";
  const auto where = where_of(j.dump());
  CHECK(where == "node " + std::to_string(j["tree"]["children"][0]["id"].get<int>()));
}

TEST_CASE("transformation records round trip") {
  const auto v = voting_examples();
  const std::vector<std::pair<const Mechanism*, Transformation>> cases{
      {&v.g1, v.split}, {&v.g2, v.advance}, {&v.g4, v.illuminate}, {&v.g4, v.finish}};
  for (const auto& [gm, t] : cases) {
    const auto j = transformation_to_json(*gm, t);
    const auto back = transformation_from_json(*gm, nlohmann::json::parse(j.dump()));
    CHECK(gradual::apply(*gm, back) == gradual::apply(*gm, t));
  }
  const auto pairs = siblings_same_action(v.g3);
  const Transformation inv = InverseIll{pairs[0].agent, pairs[0].first, pairs[0].second};
  const auto j = transformation_to_json(v.g3, inv);
  CHECK(gradual::apply(v.g3, transformation_from_json(v.g3, nlohmann::json::parse(j.dump()))) == v.g4);
  CHECK_THROWS_AS(transformation_from_json(v.g3, nlohmann::json{{"kind", "XYZ"}, {"agent", "1"}}), FormatError);
}

TEST_CASE("chains replay and detect tampering") {
  const auto v = voting_examples();
  const auto chain = reduce_to_direct(v.g1, v.f);
  const auto doc = nlohmann::json::parse(chain_to_json(v.g1, chain).dump());
  CHECK(doc["format"] == "gradual-chain");
  CHECK(doc["steps"].size() == 5);
  CHECK(doc["verdict"] == true);
  CHECK(*replay_chain(v.g1, doc) == v.direct);
  auto bad = doc;
  bad["steps"][2]["hash"] = "0000000000000000";
  CHECK_THROWS_AS(replay_chain(v.g1, bad), FormatError);
  CHECK_THROWS_AS(replay_chain(v.g2, doc), FormatError);
}

TEST_CASE("DOT export") {
  const auto v = voting_examples();
  const auto dot = export_dot(v.g3);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(export_dot(v.g3) == dot);
  MechanismBuilder b(v.f.model_ptr());
  b.set_outcome(b.root(), 1);
  b.singleton_info_sets(0);
  b.singleton_info_sets(1);
  const auto one = export_dot(b.build());
  CHECK(one.find("n0 [shape=box") != std::string::npos);
  CHECK(one.find("->") == std::string::npos);
}
