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

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gradual/transform.hpp"

namespace gradual {

/// Parse or validation failure; `where` is "line L, column C" for syntax
/// errors, a JSON pointer for shape errors and "node N" for semantic ones.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct Document {
  ScfTable f;
  Mechanism gm;
};

/// Reads a "gradual-mechanism" document and validates the mechanism against
/// its SCF. Node ids in diagnostics are the ids used in the text.
Document parse_mechanism(std::string_view text);
/// Same, without the validation step.
Document parse_mechanism_unchecked(std::string_view text);

nlohmann::ordered_json mechanism_to_json(const Mechanism& gm, const ScfTable& f);
std::string write_mechanism(const Mechanism& gm, const ScfTable& f);

/// Transformation records name information sets by their node lists and
/// actions by type names, relative to the mechanism they apply to.
nlohmann::ordered_json transformation_to_json(const Mechanism& gm, const Transformation& t);
Transformation transformation_from_json(const Mechanism& gm, const nlohmann::json& j);

/// A "gradual-chain" document: the start hash, one record per step with the
/// hash of the mechanism it produces, and the combined verdict.
nlohmann::ordered_json chain_to_json(const Mechanism& start, const ReductionChain& chain);
/// Replays a chain document on `start`; throws FormatError on a hash mismatch.
std::shared_ptr<const Mechanism> replay_chain(const Mechanism& start, const nlohmann::json& chain);

std::string hash_text(std::uint64_t h);

std::string export_dot(const Mechanism& gm);

}  // namespace gradual
