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

#include "gradual/io.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "gradual/generators.hpp"

namespace gradual {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kMechanismFormat = "gradual-mechanism";
constexpr const char* kChainFormat = "gradual-chain";

std::string pointer_join(const std::string& base, const std::string& key) {
  std::string out = base + "/";
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string pointer_join(const std::string& base, std::size_t k) { return base + "/" + std::to_string(k); }

[[noreturn]] void shape_error(const std::string& at, const std::string& what) {
  throw FormatError(at.empty() ? "/" : at, what);
}

const json& field(const json& j, const char* key, const std::string& at) {
  if (!j.is_object()) shape_error(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) shape_error(at, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_field(const json& j, const char* key, const std::string& at) {
  const json& v = field(j, key, at);
  if (!v.is_array()) shape_error(pointer_join(at, key), "expected an array");
  return v;
}

std::string string_at(const json& j, const std::string& at) {
  if (!j.is_string()) shape_error(at, "expected a string");
  return j.get<std::string>();
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw FormatError(line_column(text, e.byte), what);
  }
}

AgentId agent_by_name(const TypeModel& model, const json& j, const std::string& at) {
  auto a = model.find_agent(string_at(j, at));
  if (!a) shape_error(at, "unknown agent \"" + j.get<std::string>() + "\"");
  return *a;
}

TypeSet type_set(const TypeModel& model, AgentId i, const json& j, const std::string& at) {
  if (!j.is_array()) shape_error(at, "expected a list of type names");
  TypeSet out = 0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto name = string_at(j[k], pointer_join(at, k));
    auto t = model.find_type(i, name);
    if (!t) shape_error(pointer_join(at, k), "agent " + model.agent_name(i) + " has no type \"" + name + "\"");
    if (contains(out, *t)) shape_error(pointer_join(at, k), "type \"" + name + "\" listed twice");
    out |= singleton(*t);
  }
  return out;
}

ordered_json type_names(const TypeModel& model, AgentId i, TypeSet s) {
  ordered_json out = ordered_json::array();
  for (int t : members(s)) out.push_back(model.type_name(i, t));
  return out;
}

std::vector<NodeId> node_list(const json& j, const std::string& at) {
  if (!j.is_array()) shape_error(at, "expected a list of node ids");
  std::vector<NodeId> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) shape_error(pointer_join(at, k), "expected a node id");
    out.push_back(j[k].get<NodeId>());
  }
  return out;
}

struct Loader {
  std::shared_ptr<const TypeModel> model;
  std::vector<RawNode> raw;
  std::vector<int> file_id;           // per raw node
  std::map<long long, NodeId> raw_of;  // file id -> raw node

  void node(const json& j, NodeId parent, const std::string& at) {
    if (!j.is_object()) shape_error(at, "expected a node object");
    const json& id = field(j, "id", at);
    if (!id.is_number_integer()) shape_error(pointer_join(at, "id"), "expected an integer id");
    const long long fid = id.get<long long>();
    if (raw_of.count(fid)) shape_error(pointer_join(at, "id"), "duplicate node id " + std::to_string(fid));
    const auto me = static_cast<NodeId>(raw.size());
    raw_of[fid] = me;
    RawNode r;
    r.parent = parent;
    if (parent != kNoNode) {
      r.move.assign(static_cast<std::size_t>(model->agent_count()), 0);
      const json& act = field(j, "action", at);
      const auto act_at = pointer_join(at, "action");
      if (!act.is_object()) shape_error(act_at, "expected a map from agent names to type lists");
      for (auto it = act.begin(); it != act.end(); ++it) {
        auto a = model->find_agent(it.key());
        if (!a) shape_error(act_at, "unknown agent \"" + it.key() + "\"");
        r.move[static_cast<std::size_t>(*a)] = type_set(*model, *a, it.value(), pointer_join(act_at, it.key()));
      }
    } else if (j.contains("action")) {
      shape_error(pointer_join(at, "action"), "the root has no incoming action");
    }
    if (j.contains("outcome")) {
      const auto at_out = pointer_join(at, "outcome");
      auto x = model->find_outcome(string_at(j["outcome"], at_out));
      if (!x) shape_error(at_out, "unknown outcome \"" + j["outcome"].get<std::string>() + "\"");
      r.outcome = *x;
    }
    raw.push_back(std::move(r));
    file_id.push_back(static_cast<int>(fid));
    if (j.contains("children")) {
      const json& kids = j["children"];
      const auto kids_at = pointer_join(at, "children");
      if (!kids.is_array()) shape_error(kids_at, "expected an array");
      for (std::size_t k = 0; k < kids.size(); ++k) node(kids[k], me, pointer_join(kids_at, k));
    }
  }
};

std::shared_ptr<const TypeModel> read_model(const json& doc) {
  std::vector<std::string> outcomes;
  const json& outs = array_field(doc, "outcomes", "");
  for (std::size_t k = 0; k < outs.size(); ++k) outcomes.push_back(string_at(outs[k], pointer_join("/outcomes", k)));
  std::map<std::string, OutcomeId> outcome_id;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (!outcome_id.emplace(outcomes[k], static_cast<OutcomeId>(k)).second) {
      shape_error(pointer_join("/outcomes", k), "duplicate outcome \"" + outcomes[k] + "\"");
    }
  }
  std::vector<AgentTypes> agents;
  const json& as = array_field(doc, "agents", "");
  for (std::size_t a = 0; a < as.size(); ++a) {
    const auto at = pointer_join("/agents", a);
    AgentTypes spec;
    spec.name = string_at(field(as[a], "name", at), pointer_join(at, "name"));
    const json& types = array_field(as[a], "types", at);
    for (std::size_t t = 0; t < types.size(); ++t) {
      const auto tat = pointer_join(pointer_join(at, "types"), t);
      spec.type_names.push_back(string_at(field(types[t], "name", tat), pointer_join(tat, "name")));
      const json& pref = array_field(types[t], "preference", tat);
      std::vector<std::vector<OutcomeId>> levels;
      for (std::size_t l = 0; l < pref.size(); ++l) {
        const auto lat = pointer_join(pointer_join(tat, "preference"), l);
        if (!pref[l].is_array()) shape_error(lat, "expected a list of outcome names");
        levels.emplace_back();
        for (std::size_t k = 0; k < pref[l].size(); ++k) {
          const auto name = string_at(pref[l][k], pointer_join(lat, k));
          auto it = outcome_id.find(name);
          if (it == outcome_id.end()) shape_error(pointer_join(lat, k), "unknown outcome \"" + name + "\"");
          levels.back().push_back(it->second);
        }
      }
      try {
        spec.preferences.emplace_back(std::move(levels), static_cast<int>(outcomes.size()));
      } catch (const GradualError& e) {
        shape_error(pointer_join(tat, "preference"), e.what());
      }
    }
    agents.push_back(std::move(spec));
  }
  try {
    return std::make_shared<const TypeModel>(std::move(agents), std::move(outcomes));
  } catch (const GradualError& e) {
    shape_error("/agents", e.what());
  }
}

ScfTable read_scf(const json& doc, const std::shared_ptr<const TypeModel>& model) {
  const json& rows = array_field(doc, "scf", "");
  std::vector<OutcomeId> table(static_cast<std::size_t>(model->profile_count()), -1);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto at = pointer_join("/scf", k);
    const json& prof = array_field(rows[k], "profile", at);
    if (static_cast<int>(prof.size()) != model->agent_count()) {
      shape_error(pointer_join(at, "profile"), "expected one type per agent");
    }
    TypeProfile p;
    for (AgentId a = 0; a < model->agent_count(); ++a) {
      const auto pat = pointer_join(pointer_join(at, "profile"), static_cast<std::size_t>(a));
      const auto name = string_at(prof[static_cast<std::size_t>(a)], pat);
      auto t = model->find_type(a, name);
      if (!t) shape_error(pat, "agent " + model->agent_name(a) + " has no type \"" + name + "\"");
      p.push_back(*t);
    }
    const auto oat = pointer_join(at, "outcome");
    const auto name = string_at(field(rows[k], "outcome", at), oat);
    auto x = model->find_outcome(name);
    if (!x) shape_error(oat, "unknown outcome \"" + name + "\"");
    auto& slot = table[static_cast<std::size_t>(model->encode(p))];
    if (slot >= 0) shape_error(at, "profile listed twice");
    slot = *x;
  }
  for (ProfileIndex k = 0; k < model->profile_count(); ++k) {
    if (table[static_cast<std::size_t>(k)] < 0) {
      std::string names;
      const auto p = model->decode(k);
      for (AgentId a = 0; a < model->agent_count(); ++a) {
        names += (a ? "," : "") + model->type_name(a, p[static_cast<std::size_t>(a)]);
      }
      shape_error("/scf", "no row for profile (" + names + ")");
    }
  }
  return ScfTable(model, std::move(table));
}

struct Parsed {
  Document doc;
  std::vector<int> file_of_canonical;
};

Parsed parse(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) shape_error("", "expected an object");
  if (string_at(field(doc, "format", ""), "/format") != kMechanismFormat) {
    shape_error("/format", std::string("expected \"") + kMechanismFormat + "\"");
  }
  const json& version = field(doc, "version", "");
  if (!version.is_number_integer() || version.get<int>() != 1) shape_error("/version", "unsupported version");
  Loader load;
  load.model = read_model(doc);
  ScfTable f = read_scf(doc, load.model);
  load.node(field(doc, "tree", ""), kNoNode, "/tree");
  std::vector<std::vector<std::vector<NodeId>>> sets(static_cast<std::size_t>(load.model->agent_count()));
  const json& infos = array_field(doc, "information_sets", "");
  for (std::size_t k = 0; k < infos.size(); ++k) {
    const auto at = pointer_join("/information_sets", k);
    const AgentId a = agent_by_name(*load.model, field(infos[k], "agent", at), pointer_join(at, "agent"));
    std::vector<NodeId> members;
    const auto nat = pointer_join(at, "nodes");
    const auto ids = node_list(field(infos[k], "nodes", at), nat);
    for (std::size_t m = 0; m < ids.size(); ++m) {
      auto it = load.raw_of.find(ids[m]);
      if (it == load.raw_of.end()) shape_error(pointer_join(nat, m), "unknown node id " + std::to_string(ids[m]));
      members.push_back(it->second);
    }
    sets[static_cast<std::size_t>(a)].push_back(std::move(members));
  }
  std::vector<std::vector<Profile>> paths(load.raw.size());
  for (std::size_t h = 1; h < load.raw.size(); ++h) {
    paths[h] = paths[static_cast<std::size_t>(load.raw[h].parent)];
    paths[h].push_back(load.raw[h].move);
  }
  auto raw = load.raw;
  Mechanism gm(load.model, std::move(raw), std::move(sets));
  if (!gm.well_formed()) shape_error("/tree", gm.structural_issues().front());
  std::vector<int> file_of(static_cast<std::size_t>(gm.node_count()), -1);
  for (std::size_t h = 0; h < load.raw.size(); ++h) {
    try {
      file_of[static_cast<std::size_t>(node_at(gm, paths[h]))] = load.file_id[h];
    } catch (const GradualError&) {
    }
  }
  return Parsed{Document{std::move(f), std::move(gm)}, std::move(file_of)};
}

void emit_node(const Mechanism& gm, NodeId h, ordered_json& out) {
  const auto& model = gm.model();
  out["id"] = h;
  if (h != gm.root()) {
    ordered_json act = ordered_json::object();
    for (AgentId a = 0; a < gm.agent_count(); ++a) {
      const TypeSet s = gm.move(h)[static_cast<std::size_t>(a)];
      if (s) act[model.agent_name(a)] = type_names(model, a, s);
    }
    out["action"] = std::move(act);
  }
  if (auto x = gm.outcome(h)) out["outcome"] = model.outcome_name(*x);
  if (!gm.is_terminal(h)) {
    ordered_json kids = ordered_json::array();
    for (NodeId c : gm.children(h)) {
      ordered_json k = ordered_json::object();
      emit_node(gm, c, k);
      kids.push_back(std::move(k));
    }
    out["children"] = std::move(kids);
  }
}

int info_set_by_nodes(const Mechanism& gm, AgentId i, const json& j, const std::string& at) {
  auto nodes = node_list(j, at);
  std::sort(nodes.begin(), nodes.end());
  auto k = gm.find_info_set(i, nodes);
  if (!k) shape_error(at, "no information set of agent " + gm.model().agent_name(i) + " has exactly these nodes");
  return *k;
}

ordered_json nodes_json(const std::vector<NodeId>& v) {
  ordered_json out = ordered_json::array();
  for (NodeId h : v) out.push_back(h);
  return out;
}

}  // namespace

Document parse_mechanism_unchecked(std::string_view text) { return parse(text).doc; }

Document parse_mechanism(std::string_view text) {
  Parsed p = parse(text);
  const auto report = validate(p.doc.gm, &p.doc.f);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    std::string where = "mechanism";
    if (v.node != kNoNode) {
      const int fid = p.file_of_canonical[static_cast<std::size_t>(v.node)];
      where = "node " + std::to_string(fid >= 0 ? fid : v.node);
    }
    throw FormatError(where, v.rule + ": " + v.message);
  }
  return std::move(p.doc);
}

ordered_json mechanism_to_json(const Mechanism& gm, const ScfTable& f) {
  const auto& model = gm.model();
  ordered_json out;
  out["format"] = kMechanismFormat;
  out["version"] = 1;
  ordered_json agents = ordered_json::array();
  for (AgentId a = 0; a < model.agent_count(); ++a) {
    ordered_json types = ordered_json::array();
    for (int t = 0; t < model.type_count(a); ++t) {
      ordered_json levels = ordered_json::array();
      for (const auto& level : model.preference(a, t).levels()) {
        ordered_json names = ordered_json::array();
        for (OutcomeId x : level) names.push_back(model.outcome_name(x));
        levels.push_back(std::move(names));
      }
      types.push_back({{"name", model.type_name(a, t)}, {"preference", std::move(levels)}});
    }
    agents.push_back({{"name", model.agent_name(a)}, {"types", std::move(types)}});
  }
  out["agents"] = std::move(agents);
  out["outcomes"] = model.outcome_names();
  ordered_json rows = ordered_json::array();
  for (ProfileIndex k = 0; k < model.profile_count(); ++k) {
    const auto p = model.decode(k);
    ordered_json names = ordered_json::array();
    for (AgentId a = 0; a < model.agent_count(); ++a) names.push_back(model.type_name(a, p[static_cast<std::size_t>(a)]));
    rows.push_back({{"profile", std::move(names)}, {"outcome", model.outcome_name(f(k))}});
  }
  out["scf"] = std::move(rows);
  ordered_json tree = ordered_json::object();
  emit_node(gm, gm.root(), tree);
  out["tree"] = std::move(tree);
  ordered_json sets = ordered_json::array();
  for (AgentId a = 0; a < gm.agent_count(); ++a) {
    for (const auto& s : gm.info_sets(a)) sets.push_back({{"agent", model.agent_name(a)}, {"nodes", nodes_json(s.nodes)}});
  }
  out["information_sets"] = std::move(sets);
  return out;
}

std::string write_mechanism(const Mechanism& gm, const ScfTable& f) { return mechanism_to_json(gm, f).dump(2) + "\n"; }

ordered_json transformation_to_json(const Mechanism& gm, const Transformation& t) {
  const auto& model = gm.model();
  ordered_json out;
  out["kind"] = kind_name(kind_of(t));
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const AgentId i = x.agent;
        out["agent"] = model.agent_name(i);
        if constexpr (std::is_same_v<T, Spl>) {
          out["info_set"] = nodes_json(gm.info_set(i, x.info_set).nodes);
          out["action"] = type_names(model, i, x.action);
          out["part1"] = type_names(model, i, x.part1);
          out["part2"] = type_names(model, i, x.part2);
        } else if constexpr (std::is_same_v<T, Coa>) {
          out["info_set"] = nodes_json(gm.info_set(i, x.info_set).nodes);
          out["action"] = type_names(model, i, x.action);
          out["successor"] = nodes_json(gm.info_set(i, x.successor).nodes);
        } else if constexpr (std::is_same_v<T, Ill>) {
          out["info_set"] = nodes_json(gm.info_set(i, x.info_set).nodes);
          out["part1"] = nodes_json(x.part1);
          out["part2"] = nodes_json(x.part2);
        } else if constexpr (std::is_same_v<T, InverseIll>) {
          out["first"] = nodes_json(gm.info_set(i, x.first).nodes);
          out["second"] = nodes_json(gm.info_set(i, x.second).nodes);
        } else {
          out["info_set"] = nodes_json(gm.info_set(i, x.info_set).nodes);
          ordered_json group = ordered_json::array();
          for (TypeSet a : x.group) group.push_back(type_names(model, i, a));
          out["group"] = std::move(group);
        }
      },
      t);
  return out;
}

Transformation transformation_from_json(const Mechanism& gm, const json& j) {
  const auto& model = gm.model();
  const std::string kind = string_at(field(j, "kind", ""), "/kind");
  const AgentId i = agent_by_name(model, field(j, "agent", ""), "/agent");
  auto types = [&](const char* key) { return type_set(model, i, field(j, key, ""), std::string("/") + key); };
  auto set = [&](const char* key) { return info_set_by_nodes(gm, i, field(j, key, ""), std::string("/") + key); };
  auto nodes = [&](const char* key) {
    auto v = node_list(field(j, key, ""), std::string("/") + key);
    std::sort(v.begin(), v.end());
    return v;
  };
  if (kind == kind_name(Kind::spl)) return Spl{i, set("info_set"), types("action"), types("part1"), types("part2")};
  if (kind == kind_name(Kind::coa)) return Coa{i, set("info_set"), set("successor"), types("action")};
  if (kind == kind_name(Kind::ill)) return Ill{i, set("info_set"), nodes("part1"), nodes("part2")};
  if (kind == kind_name(Kind::inverse_ill)) return InverseIll{i, set("first"), set("second")};
  if (kind == kind_name(Kind::uncoalesce)) {
    Uncoalesce u{i, set("info_set"), {}};
    const json& group = array_field(j, "group", "");
    for (std::size_t k = 0; k < group.size(); ++k) u.group.push_back(type_set(model, i, group[k], pointer_join("/group", k)));
    return u;
  }
  shape_error("/kind", "unknown transformation kind \"" + kind + "\"");
}

std::string hash_text(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json chain_to_json(const Mechanism& start, const ReductionChain& chain) {
  ordered_json out;
  out["format"] = kChainFormat;
  out["version"] = 1;
  out["start"] = hash_text(start.fingerprint());
  ordered_json steps = ordered_json::array();
  std::shared_ptr<const Mechanism> cur = std::make_shared<const Mechanism>(start);
  for (const auto& s : chain.steps) {
    ordered_json rec = transformation_to_json(*cur, s.step);
    cur = std::make_shared<const Mechanism>(gradual::apply(*cur, s.step));
    if (s.preserving) rec["incentive_preserving"] = *s.preserving;
    rec["hash"] = hash_text(s.fingerprint);
    steps.push_back(std::move(rec));
  }
  out["steps"] = std::move(steps);
  out["static"] = chain.result ? chain.result->is_static() : start.is_static();
  out["verdict"] = theorem1_verdict(chain);
  return out;
}

std::shared_ptr<const Mechanism> replay_chain(const Mechanism& start, const json& chain) {
  if (string_at(field(chain, "format", ""), "/format") != kChainFormat) {
    shape_error("/format", std::string("expected \"") + kChainFormat + "\"");
  }
  if (string_at(field(chain, "start", ""), "/start") != hash_text(start.fingerprint())) {
    shape_error("/start", "hash does not match the starting mechanism");
  }
  auto cur = std::make_shared<const Mechanism>(start);
  const json& steps = array_field(chain, "steps", "");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto at = pointer_join("/steps", k);
    Transformation t;
    try {
      t = transformation_from_json(*cur, steps[k]);
      cur = std::make_shared<const Mechanism>(gradual::apply(*cur, t));
    } catch (const FormatError& e) {
      shape_error(at + (e.where() == "/" ? "" : e.where()), e.what());
    } catch (const GradualError& e) {
      shape_error(at, e.what());
    }
    if (string_at(field(steps[k], "hash", at), pointer_join(at, "hash")) != hash_text(cur->fingerprint())) {
      shape_error(pointer_join(at, "hash"), "replayed mechanism has a different hash");
    }
  }
  return cur;
}

std::string export_dot(const Mechanism& gm) {
  const auto& model = gm.model();
  std::ostringstream out;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  out << "digraph mechanism {\n  node [shape=circle, fontsize=10];\n  edge [fontsize=9];\n";
  for (NodeId h = 0; h < gm.node_count(); ++h) {
    if (auto x = gm.outcome(h); x && gm.is_terminal(h)) {
      out << "  n" << h << " [shape=box, label=" << quote(std::to_string(h) + "\\n" + model.outcome_name(*x)) << "];\n";
    } else {
      out << "  n" << h << " [label=" << quote(std::to_string(h)) << "];\n";
    }
  }
  for (NodeId h = 1; h < gm.node_count(); ++h) {
    std::string label;
    for (AgentId a = 0; a < gm.agent_count(); ++a) {
      const TypeSet s = gm.move(h)[static_cast<std::size_t>(a)];
      if (!s) continue;
      if (!label.empty()) label += "\\n";
      label += model.agent_name(a) + ": {";
      bool first = true;
      for (int t : members(s)) {
        label += (first ? "" : ",") + model.type_name(a, t);
        first = false;
      }
      label += "}";
    }
    out << "  n" << gm.parent(h) << " -> n" << h << " [label=" << quote(label) << "];\n";
  }
  for (AgentId a = 0; a < gm.agent_count(); ++a) {
    for (std::size_t k = 0; k < gm.info_sets(a).size(); ++k) {
      const auto& nodes = gm.info_sets(a)[k].nodes;
      for (std::size_t m = 1; m < nodes.size(); ++m) {
        out << "  n" << nodes[m - 1] << " -> n" << nodes[m] << " [style=dashed, dir=none, constraint=false, color=gray40, label="
            << quote(model.agent_name(a) + "#" + std::to_string(k)) << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gradual
