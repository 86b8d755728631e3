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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gradual/generators.hpp"

namespace gradual {

using Rng = std::mt19937_64;

/// Serial dictatorship over random weak orders: each dictator in turn keeps
/// her most preferred outcomes among those still tied; the last tie goes to
/// the lowest outcome id.
ScfTable random_serial_dictatorship(Rng& rng, int agents, int outcomes);

/// Generalized median on a line of outcomes: the median of the reported
/// peaks and agents - 1 random phantom peaks; preferences are single-peaked
/// by distance to the peak.
ScfTable random_median_scheme(Rng& rng, int agents, int outcomes);

/// One of the two families above with 1..3 agents and 2..3 outcomes.
ScfTable random_sp_scf(Rng& rng);

/// A uniformly chosen kind among those with opportunities on gm, then a
/// uniformly chosen opportunity; nullopt if there is none.
std::optional<Transformation> random_transformation(const Mechanism& gm, Rng& rng,
                                                    const std::vector<Kind>& kinds);

/// Applies `steps` random SPL, COA, ILL or uncoalescing steps to the direct
/// mechanism of f.
Mechanism random_mechanism(const ScfTable& f, Rng& rng, int steps);

struct CorpusEntry {
  std::string name;
  Mechanism gm;
  ScfTable f;
};

/// The named examples (voting, serial dictatorships, G*, RDA, Examples 1 and
/// 2) followed by `random_count` random mechanisms.
std::vector<CorpusEntry> build_corpus(std::uint64_t seed, int random_count);

}  // namespace gradual
