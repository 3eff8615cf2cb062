// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include "tw3/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tw3/errors.hpp"

namespace tw3 {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* name, const char* what) {
  if (!obj.is_object()) throw InputError(std::string(what) + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw InputError(std::string(what) + ": missing field '" + name + "'");
  return *it;
}

const json& array_field(const json& obj, const char* name, const char* what) {
  const json& a = field(obj, name, what);
  if (!a.is_array()) throw InputError(std::string(what) + ": field '" + name + "' must be a list");
  return a;
}

std::string id_key(const json& id, const char* what) {
  if (!id.is_number_integer() && !id.is_string())
    throw InputError(std::string(what) + ": ids must be integers or strings, got " + id.dump());
  return id.dump();
}

int get_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + ": expected an integer, got " + v.dump());
  return v.get<int>();
}

Term term_field(const json& obj, const char* name) {
  const json& v = field(obj, name, "derivation");
  if (!v.is_string()) throw InputError(std::string("derivation: '") + name + "' must be a term string");
  return parse_term(v.get<std::string>());
}

}  // namespace

Graph graph_from_json(const std::string& text) {
  const char* what = "graph";
  json j = parse_json(text, what);
  std::map<std::string, int> index;
  Graph g;
  for (const json& v : array_field(j, "vertices", what)) {
    if (!index.emplace(id_key(v, what), g.nv).second) throw InputError("graph: duplicate vertex id " + v.dump());
    ++g.nv;
  }
  auto vertex = [&](const json& v) {
    auto it = index.find(id_key(v, what));
    if (it == index.end()) throw InputError("graph: unknown vertex " + v.dump());
    return it->second;
  };
  for (const json& v : array_field(j, "interface", what)) g.iface.push_back(vertex(v));
  std::set<std::string> edge_ids;
  for (const json& e : array_field(j, "edges", what)) {
    const json& id = field(e, "id", "graph edge");
    if (!edge_ids.insert(id_key(id, what)).second) throw InputError("graph: duplicate edge id " + id.dump());
    const json& label = field(e, "label", "graph edge");
    if (!label.is_string() || label.get<std::string>().empty())
      throw InputError("graph: edge " + id.dump() + " needs a non-empty string label");
    Edge ed{label.get<std::string>(), {}};
    for (const json& v : array_field(e, "neighbours", "graph edge")) ed.nbrs.push_back(vertex(v));
    g.edges.push_back(std::move(ed));
  }
  g.validate();
  g.alphabet();
  return g;
}

std::string graph_to_json(const Graph& g) {
  // one edge per line so fixtures stay readable and diffable
  std::vector<int> vs(g.nv);
  for (int v = 0; v < g.nv; ++v) vs[v] = v;
  std::ostringstream out;
  out << "{\n  \"vertices\": " << json(vs).dump() << ",\n  \"interface\": " << json(g.iface).dump()
      << ",\n  \"edges\": [";
  for (size_t i = 0; i < g.edges.size(); ++i) {
    nlohmann::ordered_json e;
    e["id"] = i;
    e["label"] = g.edges[i].label;
    e["neighbours"] = g.edges[i].nbrs;
    out << (i ? ",\n    " : "\n    ") << e.dump();
  }
  out << (g.edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

Derivation derivation_from_json(const std::string& text) {
  json j = parse_json(text, "derivation");
  Derivation d;
  d.start = term_field(j, "start");
  d.end = term_field(j, "end");
  for (const json& s : array_field(j, "steps", "derivation")) {
    DerivationStep st;
    const json& ax = field(s, "axiom", "derivation step");
    if (!ax.is_string()) throw InputError("derivation step: 'axiom' must be a string");
    st.axiom = ax.get<std::string>();
    const AxiomInstance* inst = find_axiom(st.axiom);
    if (!inst) throw InputError("derivation step: unknown axiom instance '" + st.axiom + "'");
    if (auto it = s.find("schema"); it != s.end() && (!it->is_string() || it->get<std::string>() != inst->schema))
      throw InputError("derivation step: schema " + it->dump() + " does not match axiom " + st.axiom);
    const json& dir = field(s, "dir", "derivation step");
    if (dir == "lr") {
      st.dir = Direction::LeftToRight;
    } else if (dir == "rl") {
      st.dir = Direction::RightToLeft;
    } else {
      throw InputError("derivation step: dir must be \"lr\" or \"rl\", got " + dir.dump());
    }
    for (const json& p : array_field(s, "pos", "derivation step")) st.pos.push_back(get_int(p, "derivation step pos"));
    const json& sub = field(s, "subst", "derivation step");
    if (!sub.is_object()) throw InputError("derivation step: 'subst' must be an object");
    for (const auto& [name, v] : sub.items()) {
      if (!v.is_string()) throw InputError("derivation step: image of '" + name + "' must be a term string");
      st.subst.emplace(name, parse_term(v.get<std::string>()));
    }
    d.steps.push_back(std::move(st));
  }
  return d;
}

std::string derivation_to_json(const Derivation& d) {
  std::ostringstream out;
  out << "{\n  \"start\": " << json(print_term(d.start)).dump() << ",\n  \"end\": " << json(print_term(d.end)).dump()
      << ",\n  \"steps\": [";
  for (size_t i = 0; i < d.steps.size(); ++i) {
    const DerivationStep& st = d.steps[i];
    const AxiomInstance* inst = find_axiom(st.axiom);
    nlohmann::ordered_json e, sub = nlohmann::ordered_json::object();
    for (const auto& [name, t] : st.subst) sub[name] = print_term(t);
    e["axiom"] = st.axiom;
    e["schema"] = inst ? inst->schema : "";
    e["dir"] = st.dir == Direction::LeftToRight ? "lr" : "rl";
    e["pos"] = st.pos;
    e["subst"] = sub;
    out << (i ? ",\n    " : "\n    ") << e.dump();
  }
  out << (d.steps.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

std::string tree_decomposition_to_json(const TreeDecomposition& t) {
  json nodes = json::array(), edges = json::array();
  for (size_t i = 0; i < t.bags.size(); ++i) nodes.push_back(i);
  for (const auto& [a, b] : t.edges) edges.push_back({a, b});
  json j;
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["bags"] = t.bags;
  return j.dump(2) + "\n";
}

TreeDecomposition tree_decomposition_from_json(const std::string& text) {
  const char* what = "tree decomposition";
  json j = parse_json(text, what);
  TreeDecomposition t;
  const json& nodes = array_field(j, "nodes", what);
  const json& bags = array_field(j, "bags", what);
  if (nodes.size() != bags.size()) throw InputError("tree decomposition: one bag per node expected");
  for (size_t i = 0; i < nodes.size(); ++i)
    if (get_int(nodes[i], what) != static_cast<int>(i)) throw InputError("tree decomposition: nodes must be 0..n-1");
  for (const json& b : bags) {
    if (!b.is_array()) throw InputError("tree decomposition: bags must be lists");
    std::vector<int> bag;
    for (const json& v : b) bag.push_back(get_int(v, what));
    t.bags.push_back(std::move(bag));
  }
  for (const json& e : array_field(j, "edges", what)) {
    if (!e.is_array() || e.size() != 2) throw InputError("tree decomposition: edges must be pairs");
    t.edges.emplace_back(get_int(e[0], what), get_int(e[1], what));
  }
  return t;
}

std::string graph_to_dot(const Graph& g, const DotOptions& opts) {
  static const char* const kPairColours[] = {"lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon"};
  std::map<int, std::string> fill;
  for (int v : opts.highlight) fill[v] = "gold";
  for (size_t i = 0; i < opts.pairs.size(); ++i) {
    const char* c = kPairColours[i % std::size(kPairColours)];
    fill[opts.pairs[i].first] = c;
    fill[opts.pairs[i].second] = c;
  }
  auto pos = g.source_positions();
  std::ostringstream out;
  out << "digraph " << opts.name << " {\n";
  out << "  node [fontsize=10];\n";
  for (int v = 0; v < g.nv; ++v) {
    out << "  v" << v << " [";
    if (pos[v] >= 0)
      out << "shape=square, label=\"" << pos[v] + 1 << "\"";
    else
      out << "shape=circle, width=0.25, label=\"\", xlabel=\"" << v << "\"";
    if (auto it = fill.find(v); it != fill.end()) out << ", style=filled, fillcolor=" << it->second;
    out << "];\n";
  }
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.nbrs.size() == 2) {
      out << "  v" << e.nbrs[0] << " -> v" << e.nbrs[1] << " [label=\"" << e.label << "\"];\n";
      continue;
    }
    out << "  e" << i << " [shape=box, label=\"" << e.label << "\"];\n";
    for (size_t p = 0; p < e.nbrs.size(); ++p)
      out << "  e" << i << " -> v" << e.nbrs[p] << " [arrowhead=none, label=\"" << p + 1 << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace tw3
