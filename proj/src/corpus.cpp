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

#include "gradual/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace gradual {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string outcome_label(int x) { return std::string(1, static_cast<char>('x' + x)); }

std::string order_name(const WeakOrder& w) {
  std::string out;
  for (std::size_t l = 0; l < w.levels().size(); ++l) {
    if (l) out += ">";
    for (std::size_t k = 0; k < w.levels()[l].size(); ++k) {
      if (k) out += "=";
      out += outcome_label(w.levels()[l][k]);
    }
  }
  return out;
}

std::vector<std::string> labels(int outcomes) {
  std::vector<std::string> out;
  for (int x = 0; x < outcomes; ++x) out.push_back(outcome_label(x));
  return out;
}

ScfTable tabulate(std::shared_ptr<const TypeModel> model, const std::function<OutcomeId(const TypeProfile&)>& rule) {
  std::vector<OutcomeId> table(static_cast<std::size_t>(model->profile_count()));
  for (ProfileIndex k = 0; k < model->profile_count(); ++k) table[static_cast<std::size_t>(k)] = rule(model->decode(k));
  return ScfTable(model, std::move(table));
}

}  // namespace

ScfTable random_serial_dictatorship(Rng& rng, int agents, int outcomes) {
  std::vector<AgentTypes> spec;
  for (int a = 0; a < agents; ++a) {
    AgentTypes at;
    at.name = std::to_string(a + 1);
    const int want = uniform(rng, 2, 3);
    for (int tries = 0; tries < 20 && static_cast<int>(at.preferences.size()) < want; ++tries) {
      std::vector<int> scores(static_cast<std::size_t>(outcomes));
      for (auto& s : scores) s = uniform(rng, 0, outcomes - 1);
      auto w = WeakOrder::from_scores(scores);
      if (std::find(at.preferences.begin(), at.preferences.end(), w) != at.preferences.end()) continue;
      at.type_names.push_back(order_name(w));
      at.preferences.push_back(std::move(w));
    }
    spec.push_back(std::move(at));
  }
  auto model = std::make_shared<const TypeModel>(std::move(spec), labels(outcomes));
  std::vector<AgentId> order(static_cast<std::size_t>(agents));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return tabulate(model, [&](const TypeProfile& t) {
    std::vector<OutcomeId> left(static_cast<std::size_t>(outcomes));
    std::iota(left.begin(), left.end(), 0);
    for (AgentId a : order) {
      const WeakOrder& w = model->preference(a, t[static_cast<std::size_t>(a)]);
      int best = outcomes;
      for (OutcomeId x : left) best = std::min(best, w.level(x));
      std::erase_if(left, [&](OutcomeId x) { return w.level(x) != best; });
    }
    return left.front();
  });
}

ScfTable random_median_scheme(Rng& rng, int agents, int outcomes) {
  std::vector<AgentTypes> spec;
  std::vector<std::vector<int>> peaks;
  for (int a = 0; a < agents; ++a) {
    std::vector<int> all(static_cast<std::size_t>(outcomes));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(std::min(outcomes, uniform(rng, 2, 3))));
    std::sort(all.begin(), all.end());
    AgentTypes at;
    at.name = std::to_string(a + 1);
    for (int p : all) {
      std::vector<int> scores;
      for (int x = 0; x < outcomes; ++x) scores.push_back(-std::abs(x - p));
      at.type_names.push_back("peak " + outcome_label(p));
      at.preferences.push_back(WeakOrder::from_scores(scores));
    }
    peaks.push_back(std::move(all));
    spec.push_back(std::move(at));
  }
  std::vector<int> phantoms;
  for (int k = 0; k + 1 < agents; ++k) phantoms.push_back(uniform(rng, 0, outcomes - 1));
  auto model = std::make_shared<const TypeModel>(std::move(spec), labels(outcomes));
  return tabulate(model, [&](const TypeProfile& t) {
    std::vector<int> v = phantoms;
    for (int a = 0; a < agents; ++a) v.push_back(peaks[static_cast<std::size_t>(a)][static_cast<std::size_t>(t[static_cast<std::size_t>(a)])]);
    std::sort(v.begin(), v.end());
    return static_cast<OutcomeId>(v[v.size() / 2]);
  });
}

ScfTable random_sp_scf(Rng& rng) {
  const int agents = uniform(rng, 2, 3);
  const int outcomes = uniform(rng, 2, 3);
  return uniform(rng, 0, 1) ? random_median_scheme(rng, agents, outcomes)
                            : random_serial_dictatorship(rng, agents, outcomes);
}

std::optional<Transformation> random_transformation(const Mechanism& gm, Rng& rng, const std::vector<Kind>& kinds) {
  std::vector<std::vector<Transformation>> found;
  for (Kind k : kinds) {
    auto opps = find_opportunities(gm, k);
    if (!opps.empty()) found.push_back(std::move(opps));
  }
  if (found.empty()) return std::nullopt;
  auto& pick = found[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(found.size()) - 1))];
  return pick[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pick.size()) - 1))];
}

Mechanism random_mechanism(const ScfTable& f, Rng& rng, int steps) {
  Mechanism gm = direct_mechanism(f);
  const std::vector<Kind> kinds{Kind::spl, Kind::coa, Kind::ill, Kind::uncoalesce};
  for (int s = 0; s < steps; ++s) {
    auto t = random_transformation(gm, rng, kinds);
    if (!t) break;
    gm = gradual::apply(gm, *t);
  }
  return gm;
}

std::vector<CorpusEntry> build_corpus(std::uint64_t seed, int random_count) {
  std::vector<CorpusEntry> out;
  auto v = voting_examples();
  out.push_back({"voting G1", v.g1, v.f});
  out.push_back({"voting G2", v.g2, v.f});
  out.push_back({"voting G3", v.g3, v.f});
  out.push_back({"voting G4", v.g4, v.f});
  out.push_back({"voting direct", v.direct, v.f});
  auto sd = serial_dictatorship_pair();
  out.push_back({"serial dictatorship sequential", sd.good, sd.f});
  out.push_back({"serial dictatorship figure 1", sd.bad, sd.f});
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
    auto a = second_price_scf(n, m);
    out.push_back({"G* n=" + std::to_string(n) + " m=" + std::to_string(m), build_gstar(a), a.f});
  }
  for (const auto& p : all_priority_structures(2)) out.push_back({"RDA " + priorities_name(p), build_rda(p, 2), ttc_scf(p, 2)});
  const auto p3 = all_priority_structures(3);
  for (std::size_t k = 0; k < p3.size(); k += 37) out.push_back({"RDA " + priorities_name(p3[k]), build_rda(p3[k], 3), ttc_scf(p3[k], 3)});
  auto a22 = second_price_scf(2, 2);
  auto g22 = build_gstar(a22);
  out.push_back({"example 1", apply_ill(g22, example1_ill(g22)), a22.f});
  auto a32 = second_price_scf(3, 2);
  auto base = example2_base(a32);
  out.push_back({"example 2 base", base, a32.f});
  out.push_back({"example 2 illuminated", apply_ill(base, example2_ill(base)), a32.f});
  Rng rng(seed);
  for (int k = 0; k < random_count; ++k) {
    auto f = random_sp_scf(rng);
    out.push_back({"random " + std::to_string(k), random_mechanism(f, rng, uniform(rng, 1, 6)), f});
  }
  return out;
}

}  // namespace gradual
