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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradual {

using AgentId = int;
using OutcomeId = int;
using NodeId = int;

inline constexpr NodeId kNoNode = -1;

/// Set of one agent's types, bit k standing for the agent's k-th type.
/// Agents are limited to 64 types.
using TypeSet = std::uint64_t;

/// One action per agent; a zero entry means the agent does not move.
using Profile = std::vector<TypeSet>;

/// A complete type profile: one type index per agent.
using TypeProfile = std::vector<int>;

/// Mixed-radix index of a complete type profile (agent 0 is the least
/// significant digit).
using ProfileIndex = std::uint32_t;

/// Bitmask over agents.
using AgentSet = std::uint32_t;

inline constexpr int kMaxTypes = 64;
inline constexpr int kMaxAgents = 32;

constexpr TypeSet singleton(int type) { return TypeSet{1} << type; }

constexpr TypeSet full_set(int count) {
  return count >= kMaxTypes ? ~TypeSet{0} : (TypeSet{1} << count) - 1;
}

constexpr bool contains(TypeSet set, int type) { return (set >> type) & 1U; }

constexpr int size_of(TypeSet set) { return std::popcount(set); }

constexpr int lowest(TypeSet set) { return std::countr_zero(set); }

constexpr AgentSet agent_bit(AgentId agent) { return AgentSet{1} << agent; }

/// Type indices in increasing order.
inline std::vector<int> members(TypeSet set) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_of(set)));
  while (set != 0) {
    out.push_back(lowest(set));
    set &= set - 1;
  }
  return out;
}

/// Raised when an operation's precondition does not hold for its input.
class GradualError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gradual
