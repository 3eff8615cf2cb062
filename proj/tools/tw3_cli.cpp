// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// tw3: command-line front end over the C interface.
//
// Exit codes: 0 yes/success, 1 negative answer, 2 bad input, 3 resource
// limit, 4 internal error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tw3/tw3.h"

namespace {

enum class Format { Text, Structured, Dot };

struct Failure {
  int code;
  std::string message;
};

int exit_code(tw3_status s) { return s == TW3_INTERNAL_ERROR ? 4 : static_cast<int>(s); }

// Throws on error statuses; passes TW3_OK / TW3_NO through.
tw3_status check(tw3_status s) {
  if (s == TW3_OK || s == TW3_NO) return s;
  throw Failure{exit_code(s), tw3_last_error()};
}

void must(tw3_status s, const char* what) {
  if (check(s) == TW3_NO) throw Failure{1, what};
}

struct GraphDel {
  void operator()(tw3_graph* g) const { tw3_graph_free(g); }
};
struct TermDel {
  void operator()(tw3_term* t) const { tw3_term_free(t); }
};
struct DerivDel {
  void operator()(tw3_derivation* d) const { tw3_derivation_free(d); }
};
using GraphPtr = std::unique_ptr<tw3_graph, GraphDel>;
using TermPtr = std::unique_ptr<tw3_term, TermDel>;
using DerivPtr = std::unique_ptr<tw3_derivation, DerivDel>;

std::string take(char* s) {
  std::string out = s ? s : "";
  tw3_string_free(s);
  return out;
}

std::vector<int> take(int* a, size_t n) {
  std::vector<int> out(a, a + n);
  tw3_int_array_free(a);
  return out;
}

std::vector<GraphPtr> take(tw3_graph** gs, size_t n) {
  std::vector<GraphPtr> out;
  for (size_t i = 0; i < n; ++i) {
    out.emplace_back(gs[i]);
    gs[i] = nullptr;
  }
  tw3_graph_array_free(gs, n);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{2, "cannot write " + path};
}

bool looks_like_json(const std::string& text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  return false;
}

GraphPtr load_graph(const std::string& path) {
  tw3_graph* g = nullptr;
  check(tw3_graph_from_json(read_file(path).c_str(), &g));
  return GraphPtr(g);
}

TermPtr load_term(const std::string& path) {
  tw3_term* t = nullptr;
  check(tw3_term_parse(read_file(path).c_str(), &t));
  return TermPtr(t);
}

// A graph file, or a term file whose graph is taken.
GraphPtr load_graph_or_term(const std::string& path) {
  std::string text = read_file(path);
  tw3_graph* g = nullptr;
  if (looks_like_json(text)) {
    check(tw3_graph_from_json(text.c_str(), &g));
  } else {
    tw3_term* t = nullptr;
    check(tw3_term_parse(text.c_str(), &t));
    TermPtr tp(t);
    check(tw3_term_eval(tp.get(), &g));
  }
  return GraphPtr(g);
}

std::string print(const tw3_term* t) {
  char* s = nullptr;
  check(tw3_term_print(t, &s));
  return take(s);
}

std::string to_json(const tw3_graph* g) {
  char* s = nullptr;
  check(tw3_graph_to_json(g, &s));
  return take(s);
}

std::string to_dot(const tw3_graph* g, const std::vector<int>& highlight = {}, const std::vector<int>& pairs = {}) {
  char* s = nullptr;
  check(tw3_graph_to_dot(g, highlight.data(), highlight.size(), pairs.data(), pairs.size() / 2, &s));
  return take(s);
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string perm_text(const std::vector<int>& p) { return "[" + join(p, ",") + "]"; }

// Graph output in the requested format.
void emit_graph(const tw3_graph* g, Format f, const std::string& prefix = "") {
  if (f == Format::Dot) {
    std::cout << to_dot(g);
  } else if (f == Format::Structured) {
    std::cout << prefix << "arity: " << tw3_graph_arity(g) << "\n"
              << prefix << "vertices: " << tw3_graph_vertex_count(g) << "\n"
              << prefix << "edges: " << tw3_graph_edge_count(g) << "\n";
  } else {
    std::cout << to_json(g);
  }
}

int answer(bool yes, Format f, const char* key, const char* yes_text, const char* no_text) {
  if (f == Format::Structured)
    std::cout << key << ": " << (yes ? "true" : "false") << "\n";
  else
    std::cout << (yes ? yes_text : no_text) << "\n";
  return yes ? 0 : 1;
}

struct Options {
  Format format = Format::Text;
  std::string in1, in2, out_file, check_file, schema, highlight = "none";
  int vertex = -1;
  int k = 3;
  bool check_sound = false;
};

void no_dot(const Options& o, const char* verb) {
  if (o.format == Format::Dot) throw Failure{2, std::string("--format dot is not available for ") + verb};
}

int cmd_eval(const Options& o) {
  TermPtr t = load_term(o.in1);
  tw3_graph* g = nullptr;
  check(tw3_term_eval(t.get(), &g));
  GraphPtr gp(g);
  emit_graph(gp.get(), o.format);
  return 0;
}

int cmd_parse(const Options& o) {
  no_dot(o, "parse");
  GraphPtr g = load_graph(o.in1);
  tw3_term* t = nullptr;
  check(tw3_parse_graph(g.get(), &t));
  TermPtr tp(t);
  if (o.format == Format::Structured)
    std::cout << "term: " << print(tp.get()) << "\nwidth: " << tw3_term_width(tp.get()) << "\n";
  else
    std::cout << print(tp.get()) << "\n";
  return 0;
}

int cmd_tw(const Options& o) {
  no_dot(o, "tw");
  GraphPtr g = load_graph_or_term(o.in1);
  if (!o.check_file.empty()) {
    std::string td = read_file(o.check_file);
    bool ok = check(tw3_check_tree_decomposition(g.get(), td.c_str(), o.k)) == TW3_OK;
    return answer(ok, o.format, "valid", "valid decomposition", "invalid decomposition");
  }
  int w = 0;
  check(tw3_treewidth(g.get(), &w));
  if (o.format == Format::Structured)
    std::cout << "treewidth: " << w << "\n";
  else
    std::cout << w << "\n";
  if (!o.out_file.empty()) {
    char* s = nullptr;
    must(tw3_tree_decomposition(g.get(), w, &s), "no decomposition found");
    write_file(o.out_file, take(s));
  }
  return 0;
}

int cmd_iso(const Options& o) {
  no_dot(o, "iso");
  GraphPtr g = load_graph_or_term(o.in1), h = load_graph_or_term(o.in2);
  return answer(check(tw3_isomorphic(g.get(), h.get())) == TW3_OK, o.format, "isomorphic", "isomorphic",
                "not isomorphic");
}

int cmd_equiv(const Options& o) {
  no_dot(o, "equiv");
  TermPtr t = load_term(o.in1), u = load_term(o.in2);
  return answer(check(tw3_equivalent(t.get(), u.get())) == TW3_OK, o.format, "equivalent", "equivalent",
                "not equivalent");
}

int cmd_decompose(const Options& o) {
  GraphPtr g = load_graph_or_term(o.in1);
  tw3_graph** cs = nullptr;
  size_t n = 0;
  check(tw3_prime_components(g.get(), &cs, &n));
  auto comps = take(cs, n);
  if (o.format == Format::Dot) {
    for (const auto& c : comps) std::cout << to_dot(c.get());
    return 0;
  }
  std::cout << "components: " << comps.size() << "\n";
  for (size_t i = 0; i < comps.size(); ++i) {
    int* p = nullptr;
    int m = 0;
    tw3_graph* core = nullptr;
    check(tw3_full_decomposition(comps[i].get(), &p, &m, &core));
    GraphPtr cp(core);
    auto perm = take(p, tw3_graph_arity(comps[i].get()));
    unsigned flags = 0;
    check(tw3_classify(cp.get(), &flags));
    std::string prefix = "component " + std::to_string(i + 1) + " ";
    std::cout << prefix << "perm: " << perm_text(perm) << "\n"
              << prefix << "lifts: " << m << "\n"
              << prefix << "core arity: " << tw3_graph_arity(cp.get()) << "\n"
              << prefix << "core atomic: " << ((flags & TW3_CLASS_ATOMIC) ? "true" : "false") << "\n";
    if (o.format == Format::Text) std::cout << to_json(cp.get());
  }
  return 0;
}

int cmd_series(const Options& o) {
  GraphPtr g = load_graph_or_term(o.in1);
  tw3_graph** args = nullptr;
  tw3_graph* factor = nullptr;
  check(tw3_series_decomposition(g.get(), o.vertex, &args, &factor));
  auto as = take(args, tw3_graph_arity(g.get()));
  GraphPtr fp(factor);
  for (size_t i = 0; i < as.size(); ++i) {
    if (o.format != Format::Dot) std::cout << "argument " << i + 1 << ":\n";
    emit_graph(as[i].get(), o.format, "  ");
  }
  if (o.format != Format::Dot) std::cout << "factor:\n";
  emit_graph(fp.get(), o.format, "  ");
  return 0;
}

std::vector<int> anchors_of(const tw3_graph* g) {
  int* a = nullptr;
  size_t n = 0;
  check(tw3_anchors(g, &a, &n));
  return take(a, n);
}

std::vector<int> pairs_of(const tw3_graph* g) {
  int* a = nullptr;
  size_t n = 0;
  check(tw3_separation_pairs(g, &a, &n));
  return take(a, 2 * n);
}

int cmd_anchors(const Options& o) {
  no_dot(o, "anchors");
  GraphPtr g = load_graph_or_term(o.in1);
  auto a = anchors_of(g.get());
  if (o.format == Format::Structured)
    std::cout << "anchors: " << join(a) << "\ncount: " << a.size() << "\n";
  else
    std::cout << join(a) << "\n";
  return a.empty() ? 1 : 0;
}

int cmd_hard(const Options& o) {
  no_dot(o, "hard");
  GraphPtr g = load_graph_or_term(o.in1);
  return answer(check(tw3_is_hard(g.get())) == TW3_OK, o.format, "hard", "hard", "not hard");
}

int cmd_seppairs(const Options& o) {
  no_dot(o, "seppairs");
  GraphPtr g = load_graph_or_term(o.in1);
  auto p = pairs_of(g.get());
  for (size_t i = 0; i < p.size(); i += 2) {
    if (o.format == Format::Structured) std::cout << "pair: ";
    std::cout << p[i] << " " << p[i + 1] << "\n";
  }
  return 0;
}

int cmd_easy(const Options& o) {
  no_dot(o, "easy");
  GraphPtr g = load_graph_or_term(o.in1);
  if (o.vertex >= 0) {
    tw3_graph* h = nullptr;
    check(tw3_graph_append_source(g.get(), o.vertex, &h));
    g.reset(h);
  }
  return answer(check(tw3_is_easy(g.get())) == TW3_OK, o.format, "easy", "easy", "not easy");
}

int cmd_axioms(const Options& o) {
  no_dot(o, "axioms");
  size_t n = tw3_axiom_count(), shown = 0, unsound = 0;
  for (size_t i = 0; i < n; ++i) {
    char *key = nullptr, *schema = nullptr;
    tw3_term *l = nullptr, *r = nullptr;
    check(tw3_axiom_info(i, &key, &schema, &l, &r));
    std::string k = take(key), s = take(schema);
    TermPtr lp(l), rp(r);
    if (!o.schema.empty() && s != o.schema) continue;
    ++shown;
    bool sound = true;
    if (o.check_sound && check(tw3_axiom_sound(i)) == TW3_NO) {
      sound = false;
      ++unsound;
    }
    if (o.format == Format::Structured) {
      std::cout << "axiom: " << k << "\n  lhs: " << print(lp.get()) << "\n  rhs: " << print(rp.get()) << "\n";
      if (o.check_sound) std::cout << "  sound: " << (sound ? "true" : "false") << "\n";
    } else {
      std::cout << k << ": " << print(lp.get()) << " = " << print(rp.get());
      if (!sound) std::cout << "  UNSOUND";
      std::cout << "\n";
    }
  }
  if (o.check_sound) std::cout << "checked: " << shown << "\nunsound: " << unsound << "\n";
  return unsound ? 1 : 0;
}

std::string derivation_json(const tw3_derivation* d) {
  char* s = nullptr;
  check(tw3_derivation_to_json(d, &s));
  return take(s);
}

int cmd_normalize(const Options& o) {
  no_dot(o, "normalize");
  TermPtr t = load_term(o.in1);
  tw3_term* nf = nullptr;
  tw3_derivation* d = nullptr;
  check(tw3_normalize(t.get(), &nf, &d));
  TermPtr np(nf);
  DerivPtr dp(d);
  if (o.format == Format::Structured)
    std::cout << "normal: " << print(np.get()) << "\nsteps: " << tw3_derivation_length(dp.get()) << "\n";
  else
    std::cout << print(np.get()) << "\n";
  if (!o.out_file.empty()) write_file(o.out_file, derivation_json(dp.get()));
  return 0;
}

int cmd_derive(const Options& o) {
  no_dot(o, "derive");
  TermPtr t = load_term(o.in1), u = load_term(o.in2);
  tw3_derivation* d = nullptr;
  char* reason = nullptr;
  if (check(tw3_derive_easy(t.get(), u.get(), &d, &reason)) == TW3_NO) throw Failure{1, take(reason)};
  DerivPtr dp(d);
  std::string json = derivation_json(dp.get());
  if (!o.out_file.empty()) {
    write_file(o.out_file, json);
    std::cout << "steps: " << tw3_derivation_length(dp.get()) << "\n";
  } else {
    std::cout << json;
  }
  return 0;
}

int cmd_check_derivation(const Options& o) {
  no_dot(o, "check-derivation");
  tw3_derivation* d = nullptr;
  check(tw3_derivation_from_json(read_file(o.in1).c_str(), &d));
  DerivPtr dp(d);
  int failed = -1;
  char* reason = nullptr;
  bool ok = check(tw3_derivation_check(dp.get(), &failed, &reason)) == TW3_OK;
  std::string why = take(reason);
  if (o.format == Format::Structured) {
    std::cout << "valid: " << (ok ? "true" : "false") << "\nsteps: " << tw3_derivation_length(dp.get()) << "\n";
    if (!ok) std::cout << "failed_step: " << failed << "\nreason: " << why << "\n";
  } else if (ok) {
    std::cout << "valid (" << tw3_derivation_length(dp.get()) << " steps)\n";
  } else {
    std::cout << "invalid at step " << failed << ": " << why << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_render(const Options& o) {
  if (o.format != Format::Text && o.format != Format::Dot) throw Failure{2, "render only produces dot"};
  GraphPtr g = load_graph_or_term(o.in1);
  std::vector<int> highlight, pairs;
  if (o.highlight == "anchors")
    highlight = anchors_of(g.get());
  else if (o.highlight == "pairs")
    pairs = pairs_of(g.get());
  else if (o.highlight != "none")
    throw Failure{2, "--highlight must be none, anchors or pairs"};
  std::cout << to_dot(g.get(), highlight, pairs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered hypergraphs of treewidth at most 3: terms, structure and derivations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured", "dot"}))
      ->capture_default_str();
  app.set_version_flag("--version", std::string(tw3_version()));

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> verbs;
  auto verb = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sc = app.add_subcommand(name, help);
    verbs.emplace_back(sc, fn);
    return sc;
  };
  auto one = [&](CLI::App* sc, const char* what) { sc->add_option("input", o.in1, what)->required(); };
  auto two = [&](CLI::App* sc, const char* what) {
    sc->add_option("first", o.in1, what)->required();
    sc->add_option("second", o.in2, what)->required();
  };

  one(verb("eval", "Graph of a term", cmd_eval), "term file");
  one(verb("parse", "Width-3 parsing of a graph", cmd_parse), "graph file");
  auto* tw = verb("tw", "Exact treewidth", cmd_tw);
  one(tw, "graph or term file");
  tw->add_option("-o,--decomposition", o.out_file, "Write an optimal tree decomposition here");
  tw->add_option("--check", o.check_file, "Validate this tree decomposition instead");
  tw->add_option("-k", o.k, "Width bound for --check")->capture_default_str();
  two(verb("iso", "Graph isomorphism", cmd_iso), "graph or term file");
  two(verb("equiv", "Equivalence of two terms", cmd_equiv), "term file");
  one(verb("decompose", "Prime components and their full decompositions", cmd_decompose), "graph or term file");
  auto* series = verb("series", "Series decomposition at an inner vertex", cmd_series);
  one(series, "graph or term file");
  series->add_option("-x,--vertex", o.vertex, "Inner vertex")->required();
  one(verb("anchors", "Anchors of a full prime graph", cmd_anchors), "graph or term file");
  one(verb("hard", "Is the graph hard", cmd_hard), "graph or term file");
  one(verb("seppairs", "Minimal separation pairs of a hard graph", cmd_seppairs), "graph or term file");
  auto* easy = verb("easy", "Is the graph easy", cmd_easy);
  one(easy, "graph or term file");
  easy->add_option("-x,--vertex", o.vertex, "Append this inner vertex to the interface first");
  auto* axioms = verb("axioms", "List axiom instances", cmd_axioms);
  axioms->add_option("--schema", o.schema, "Only this schema (A1a, ..., FS0, FK, FX, FD)");
  axioms->add_flag("--check", o.check_sound, "Check soundness of each listed instance");
  auto* norm = verb("normalize", "Normal form of a term", cmd_normalize);
  one(norm, "term file");
  norm->add_option("-o,--derivation", o.out_file, "Write the derivation here");
  auto* derive = verb("derive", "Derivation between two parsings of an easy graph", cmd_derive);
  two(derive, "term file");
  derive->add_option("-o,--output", o.out_file, "Write the derivation here instead of stdout");
  one(verb("check-derivation", "Validate a derivation file", cmd_check_derivation), "derivation file");
  auto* render = verb("render", "DOT drawing of a graph", cmd_render);
  one(render, "graph or term file");
  render->add_option("--highlight", o.highlight, "none, anchors or pairs")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  o.format = format == "dot" ? Format::Dot : format == "structured" ? Format::Structured : Format::Text;
  try {
    for (auto& [sc, fn] : verbs)
      if (sc->parsed()) return fn(o);
  } catch (const Failure& f) {
    std::cerr << "tw3: " << f.message << "\n";
    return f.code;
  }
  return 2;
}
