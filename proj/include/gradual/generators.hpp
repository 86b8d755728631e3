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

#include <memory>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "gradual/mechanism.hpp"
#include "gradual/transform.hpp"

namespace gradual {

using Rational = boost::rational<long long>;

/// All agents report their types simultaneously at the root.
Mechanism direct_mechanism(const ScfTable& f);

/// The node reached from the root by following the given moves.
NodeId node_at(const Mechanism& gm, const std::vector<Profile>& moves);

// Two voters, candidates L, M, R; L if both report L, R if both report R,
// M otherwise.
ScfTable voting_scf();

struct VotingExamples {
  ScfTable f;
  Mechanism g1, g2, g3, g4, direct;
  Spl split;          // on g1: voter 2's {L,R} after voter 1's M
  Coa split_merge;    // on apply_spl(g1, split): gives g2
  Coa advance;        // on g2: voter 1's L/R moved to the root, gives g3
  Ill illuminate;     // on g4: gives g3
  Coa finish;         // on g4: gives the direct mechanism
};

VotingExamples voting_examples();

/// Strict rankings of n items, in lexicographic order, as item sequences.
std::vector<std::vector<int>> rankings(int n);
std::string ranking_name(const std::vector<int>& ranking);

/// n agents with ranking types over n items; outcomes are the n! matchings
/// (item per agent), each agent caring only about her own item.
std::shared_ptr<const TypeModel> matching_model(int n);
/// Index of a matching (item per agent) among the model's outcomes.
OutcomeId matching_outcome(const std::vector<int>& items);
std::vector<int> matching_of(int n, OutcomeId x);

/// Agent 1 takes her top item, agent 2 the top remaining, agent 3 the rest.
ScfTable serial_dictatorship_scf();

struct SerialDictatorshipPair {
  ScfTable f;
  Mechanism good;  // agent 1 reports her top item, then agent 2 picks
  Mechanism bad;   // agent 2 reports a ranking, agent 1 learns only whether a is its top
};

SerialDictatorshipPair serial_dictatorship_pair();

struct Lottery {
  AgentSet winners = 0;  // uniform over these bidders
  int price = 0;
};

struct Auction {
  int n = 0;
  int m = 0;
  ScfTable f;
  std::vector<Lottery> lotteries;  // by outcome id
};

/// Second-price rule over values 1..m with uniform tie-breaking; bidders
/// rank outcomes by exact expected payoff.
Auction second_price_scf(int n, int m);
Rational expected_payoff(const Lottery& x, AgentId bidder, int value);
/// Expected payoff of `bidder` with `value` when the values reported are `bids`.
Rational expected_payoff(const Auction& a, const std::vector<int>& bids, AgentId bidder, int value);

/// Ascending clock; bidders move in index order within a price level and
/// see previous levels fully, the current level only once two have stayed.
Mechanism build_gstar(const Auction& a);

/// On G*(2, 2): bidder 2 learns bidder 1's choice at price 1.
Ill example1_ill(const Mechanism& gstar22);
/// n = 3, m = 2: bidders 1 and 2 move together, bidder 3 learns nothing.
Mechanism example2_base(const Auction& a32);
/// On example2_base: bidder 3 learns whether 1 and 2 both stayed.
Ill example2_ill(const Mechanism& base);

/// Per item, agents in decreasing priority.
using Priorities = std::vector<std::vector<AgentId>>;

std::vector<Priorities> all_priority_structures(int n);
std::string priorities_name(const Priorities& p);
/// Item assigned to each agent by top trading cycles.
std::vector<int> top_trading_cycles(const Priorities& p, const std::vector<std::vector<int>>& prefs);
ScfTable ttc_scf(const Priorities& p, int n);

/// Renunciation-designation-assertion implementation of ttc_scf(p, n).
Mechanism build_rda(const Priorities& p, int n);

}  // namespace gradual
