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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "gradual/corpus.hpp"
#include "gradual/io.hpp"

using namespace gradual;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Document load(const std::string& path) {
  try {
    return parse_mechanism(slurp(path));
  } catch (const FormatError& e) {
    throw FormatError((path.empty() || path == "-" ? std::string("<stdin>") : path) + ": " + e.where(),
                      std::string(e.what()).substr(e.where().size() + 2));
  }
}

// Inline JSON, or @path for a file.
nlohmann::json json_arg(const std::string& arg) {
  const std::string text = !arg.empty() && arg[0] == '@' ? slurp(arg.substr(1)) : arg;
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("bad JSON argument: ") + e.what());
  }
}

int report(const std::string& what, const Mechanism& gm, const Verdict& v) {
  std::cout << what << ": " << (v.holds ? "holds" : "fails") << "\n";
  if (v.witness) std::cout << "witness: " << describe(gm, *v.witness) << "\n";
  return v.holds ? kHolds : kFails;
}

std::vector<NodeId> id_list(const std::string& s) {
  std::vector<NodeId> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad node id \"" + tok + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Priorities parse_priorities(const std::string& s, int n) {
  Priorities p(static_cast<std::size_t>(n));
  if (s.empty()) {
    for (auto& order : p) {
      for (AgentId a = 0; a < n; ++a) order.push_back(a);
    }
    return p;
  }
  std::string norm = s;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::stringstream in(norm);
  std::string tok;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  while (in >> tok) {
    if (tok.size() != static_cast<std::size_t>(n) + 2 || tok[1] != ':' || tok[0] < 'a' || tok[0] >= 'a' + n) {
      throw UsageError("bad priority entry \"" + tok + "\"; expected item:order such as a:12");
    }
    const auto item = static_cast<std::size_t>(tok[0] - 'a');
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t k = 2; k < tok.size(); ++k) {
      const int a = tok[k] - '1';
      if (a < 0 || a >= n || used[static_cast<std::size_t>(a)]) throw UsageError("bad agent order in \"" + tok + "\"");
      used[static_cast<std::size_t>(a)] = true;
      p[item].push_back(a);
    }
    seen[item] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw UsageError("every item needs a priority order");
  return p;
}

void print_chain(const Mechanism& start, const ReductionChain& chain) {
  auto cur = std::make_shared<const Mechanism>(start);
  int k = 0;
  for (const auto& s : chain.steps) {
    std::cout << ++k << ". " << describe(*cur, s.step);
    if (s.preserving) std::cout << " (forward ILL " << (*s.preserving ? "incentive-preserving" : "not incentive-preserving") << ")";
    std::cout << "\n";
    cur = std::make_shared<const Mechanism>(gradual::apply(*cur, s.step));
  }
  std::cout << "result: " << (chain.result->is_static() ? "static" : "dynamic") << ", " << chain.result->node_count()
            << " nodes\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks and transforms gradual mechanisms."};
  app.require_subcommand(1);
  std::string file;
  bool relaxed = false;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "mechanism file; standard input when absent or -"); };

  auto* validate_cmd = app.add_subcommand("validate", "check the mechanism axioms and agreement with the SCF");
  with_file(validate_cmd);
  auto* ic_cmd = app.add_subcommand("check-ic", "incentive compatibility");
  with_file(ic_cmd);
  auto* rp_cmd = app.add_subcommand("check-rp", "reactive-proof condition");
  with_file(rp_cmd);
  rp_cmd->add_flag("--relaxed", relaxed, "only compare sibling sets whose other agents have not diverged");
  auto* irp_cmd = app.add_subcommand("check-irp", "indifferent reactive-proof condition");
  with_file(irp_cmd);
  irp_cmd->add_flag("--relaxed", relaxed, "only compare sibling sets whose other agents have not diverged");
  auto* sp_cmd = app.add_subcommand("check-sp", "strategy-proofness of the SCF");
  with_file(sp_cmd);

  auto* transform_cmd = app.add_subcommand("transform", "apply one transformation and print the result");
  with_file(transform_cmd);
  std::string step;
  std::string list_kind;
  transform_cmd->add_option("--step", step, "transformation record, inline JSON or @file");
  transform_cmd->add_option("--list", list_kind, "list opportunities of a kind instead")
      ->check(CLI::IsMember({"spl", "coa", "ill", "inverse-ill", "uncoalesce"}));

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce to the direct mechanism and print the chain");
  with_file(reduce_cmd);
  bool as_json = false;
  reduce_cmd->add_flag("--json", as_json, "print the chain document instead");

  auto* ill_cmd = app.add_subcommand("check-ill", "whether an illumination preserves incentives");
  with_file(ill_cmd);
  std::string agent_name;
  std::string part1;
  std::string part2;
  ill_cmd->add_option("--step", step, "ILL record, inline JSON or @file");
  ill_cmd->add_option("--agent", agent_name, "illuminated agent");
  ill_cmd->add_option("--part1", part1, "comma-separated node ids");
  ill_cmd->add_option("--part2", part2, "comma-separated node ids");

  auto* gen_cmd = app.add_subcommand("gen", "generate a mechanism");
  std::string family;
  std::string variant;
  int n = 2;
  int m = 2;
  std::string priorities;
  std::uint64_t seed = 1;
  int steps = 3;
  gen_cmd->add_option("family", family, "direct, voting, sd, auction, ttc or random")
      ->required()
      ->check(CLI::IsMember({"direct", "voting", "sd", "auction", "ttc", "random"}));
  gen_cmd->add_option("--from", file, "direct: mechanism whose SCF to use; standard input when absent");
  gen_cmd->add_option("--variant", variant,
                      "voting: g1 g2 g3 g4 direct; sd: sequential figure1; auction: gstar example1 example2 "
                      "example2-base; ttc: rda direct");
  gen_cmd->add_option("--n", n, "agents")->check(CLI::Range(1, 6));
  gen_cmd->add_option("--m", m, "values per bidder")->check(CLI::Range(1, 6));
  gen_cmd->add_option("--priorities", priorities, "per item, agents by priority, e.g. \"a:12 b:21\"");
  gen_cmd->add_option("--seed", seed, "random: generator seed");
  gen_cmd->add_option("--steps", steps, "random: transformations applied")->check(CLI::Range(0, 50));

  auto* dot_cmd = app.add_subcommand("export-dot", "print the tree in DOT");
  with_file(dot_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (validate_cmd->parsed()) {
      const auto doc = load(file);
      std::cout << "valid: " << doc.gm.node_count() << " nodes, " << doc.gm.terminals().size() << " terminals, "
                << (doc.gm.is_static() ? "static" : "dynamic") << "\n";
      return kHolds;
    }
    if (ic_cmd->parsed()) {
      const auto doc = load(file);
      return report("IC", doc.gm, is_ic(doc.gm, doc.f));
    }
    if (rp_cmd->parsed()) {
      const auto doc = load(file);
      return report(relaxed ? "RP (relaxed)" : "RP", doc.gm, is_rp(doc.gm, doc.f, relaxed));
    }
    if (irp_cmd->parsed()) {
      const auto doc = load(file);
      return report(relaxed ? "IRP (relaxed)" : "IRP", doc.gm, is_irp(doc.gm, doc.f, relaxed));
    }
    if (sp_cmd->parsed()) {
      const auto doc = load(file);
      const auto sp = is_strategy_proof(doc.f);
      std::cout << "SP: " << (sp.holds ? "holds" : "fails") << "\n";
      if (sp.witness) {
        const auto& model = doc.f.model();
        const auto& w = *sp.witness;
        auto lie = w.profile;
        lie[static_cast<std::size_t>(w.agent)] = w.lie;
        std::cout << "witness: agent " << model.agent_name(w.agent) << " of type " << model.type_name(w.agent, w.truth)
                  << " gets " << model.outcome_name(doc.f(w.profile)) << " truthfully and "
                  << model.outcome_name(doc.f(lie)) << " by reporting " << model.type_name(w.agent, w.lie) << "\n";
      }
      return sp.holds ? kHolds : kFails;
    }
    if (transform_cmd->parsed()) {
      const auto doc = load(file);
      if (!list_kind.empty()) {
        const std::map<std::string, Kind> kinds{{"spl", Kind::spl}, {"coa", Kind::coa}, {"ill", Kind::ill},
                                                {"inverse-ill", Kind::inverse_ill}, {"uncoalesce", Kind::uncoalesce}};
        for (const auto& t : find_opportunities(doc.gm, kinds.at(list_kind))) {
          std::cout << transformation_to_json(doc.gm, t).dump() << "\n";
        }
        return kHolds;
      }
      if (step.empty()) throw UsageError("transform needs --step or --list");
      const auto t = transformation_from_json(doc.gm, json_arg(step));
      std::cout << write_mechanism(gradual::apply(doc.gm, t), doc.f);
      return kHolds;
    }
    if (reduce_cmd->parsed()) {
      const auto doc = load(file);
      const auto chain = reduce_to_direct(doc.gm, doc.f);
      const bool verdict = theorem1_verdict(chain);
      if (as_json) {
        std::cout << chain_to_json(doc.gm, chain).dump(2) << "\n";
      } else {
        print_chain(doc.gm, chain);
        std::cout << "verdict: " << (verdict ? "true" : "false") << "\n";
      }
      return verdict ? kHolds : kFails;
    }
    if (ill_cmd->parsed()) {
      const auto doc = load(file);
      Ill t;
      if (!step.empty()) {
        auto parsed = transformation_from_json(doc.gm, json_arg(step));
        if (!std::holds_alternative<Ill>(parsed)) throw UsageError("check-ill needs an ILL record");
        t = std::get<Ill>(parsed);
      } else {
        if (agent_name.empty() || part1.empty() || part2.empty()) {
          throw UsageError("check-ill needs --step or all of --agent, --part1, --part2");
        }
        auto a = doc.gm.model().find_agent(agent_name);
        if (!a) throw UsageError("unknown agent " + agent_name);
        t.agent = *a;
        t.part1 = id_list(part1);
        t.part2 = id_list(part2);
        std::vector<NodeId> all = t.part1;
        all.insert(all.end(), t.part2.begin(), t.part2.end());
        std::sort(all.begin(), all.end());
        auto k = doc.gm.find_info_set(t.agent, all);
        if (!k) throw UsageError("the two parts do not form an information set of agent " + agent_name);
        t.info_set = *k;
      }
      apply_ill(doc.gm, t);
      return report("incentive-preserving", doc.gm, is_incentive_preserving(doc.gm, t, doc.f));
    }
    if (gen_cmd->parsed()) {
      auto emit = [](const Mechanism& gm, const ScfTable& f) {
        std::cout << write_mechanism(gm, f);
        return kHolds;
      };
      if (family == "direct") {
        const auto doc = load(file);
        return emit(direct_mechanism(doc.f), doc.f);
      }
      if (family == "voting") {
        const auto v = voting_examples();
        const std::string w = variant.empty() ? "g1" : variant;
        if (w == "g1") return emit(v.g1, v.f);
        if (w == "g2") return emit(v.g2, v.f);
        if (w == "g3") return emit(v.g3, v.f);
        if (w == "g4") return emit(v.g4, v.f);
        if (w == "direct") return emit(v.direct, v.f);
        throw UsageError("unknown voting variant " + w);
      }
      if (family == "sd") {
        const auto sd = serial_dictatorship_pair();
        const std::string w = variant.empty() ? "sequential" : variant;
        if (w == "sequential") return emit(sd.good, sd.f);
        if (w == "figure1") return emit(sd.bad, sd.f);
        throw UsageError("unknown sd variant " + w);
      }
      if (family == "auction") {
        const std::string w = variant.empty() ? "gstar" : variant;
        if (w == "gstar") {
          if (n < 2 || n > 4 || m > 4) throw UsageError("auction needs 2 <= n <= 4 and m <= 4");
          const auto a = second_price_scf(n, m);
          return emit(build_gstar(a), a.f);
        }
        if (w == "example1") {
          const auto a = second_price_scf(2, 2);
          const auto g = build_gstar(a);
          return emit(apply_ill(g, example1_ill(g)), a.f);
        }
        if (w == "example2" || w == "example2-base") {
          const auto a = second_price_scf(3, 2);
          const auto base = example2_base(a);
          return emit(w == "example2" ? apply_ill(base, example2_ill(base)) : base, a.f);
        }
        throw UsageError("unknown auction variant " + w);
      }
      if (family == "ttc") {
        if (n < 2 || n > 3) throw UsageError("ttc needs n of 2 or 3");
        const auto p = parse_priorities(priorities, n);
        const auto f = ttc_scf(p, n);
        const std::string w = variant.empty() ? "rda" : variant;
        if (w == "rda") return emit(build_rda(p, n), f);
        if (w == "direct") return emit(direct_mechanism(f), f);
        throw UsageError("unknown ttc variant " + w);
      }
      Rng rng(seed);
      const auto f = random_sp_scf(rng);
      return emit(random_mechanism(f, rng, steps), f);
    }
    if (dot_cmd->parsed()) {
      std::cout << export_dot(load(file).gm);
      return kHolds;
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const GradualError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
