// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion.  Exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/gen.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "support/samples.hpp"
#include "tw3/axioms.hpp"
#include "tw3/errors.hpp"
#include "tw3/io.hpp"
#include "tw3/structure.hpp"
#include "tw3/treewidth.hpp"

using namespace tw3;

namespace {

// Pinned limits.
constexpr int kMaxAxiomInstances = 10000;
constexpr double kSoundnessSeconds = 60.0;
constexpr int kRoundTripTerms = 1000;
constexpr int kRoundTripMaxConstructors = 15;
constexpr double kRoundTripSeconds = 300.0;
constexpr int kOracleGraphs = 500;
constexpr int kOracleMaxVertices = 9;
constexpr int kPropertySamples = 200;
constexpr int kNormalizeTerms = 1000;
constexpr int kEasyGraphs = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fixture_text(const std::string& name) { return read_text_file(TW3_FIXTURES_DIR "/" + name); }
Term term_fixture(const std::string& name) { return parse_term(fixture_text(name)); }
Graph graph_fixture(const std::string& name) { return graph_from_json(fixture_text(name)); }

Outcome soundness() {
  auto t0 = Clock::now();
  const auto& all = enumerate_axioms();
  std::set<std::string> schemas;
  int unsound = 0;
  std::string first;
  for (const AxiomInstance& ax : all) {
    schemas.insert(ax.schema);
    if (!check_soundness(ax) && unsound++ == 0) first = ax.key;
  }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << all.size() << " instances over " << schemas.size() << " schemas, " << unsound << " unsound";
  if (unsound) d << " (first " << first << ")";
  d << ", " << secs << " s";
  bool ok = unsound == 0 && static_cast<int>(all.size()) < kMaxAxiomInstances && secs < kSoundnessSeconds &&
            schemas.size() == 20;
  return {ok, d.str()};
}

Outcome three_component_parsings() {
  std::vector<std::pair<std::string, Term>> terms = {{"left", term_fixture("fig1-left.term")},
                                                     {"right", term_fixture("fig1-right.term")},
                                                     {"expanded", term_fixture("fig1-expanded.term")}};
  Graph fixture = graph_fixture("fig1.graph");
  Outcome o;
  int pairs = 0;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (!isomorphic(eval(terms[i].second), fixture)) {
      o.pass = false;
      o.detail += terms[i].first + " differs from the fixture graph; ";
    }
    for (size_t j = i + 1; j < terms.size(); ++j) {
      bool iso = isomorphic(eval(terms[i].second), eval(terms[j].second)).has_value();
      bool eq = equivalent(terms[i].second, terms[j].second);
      if (!iso || !eq) {
        o.pass = false;
        o.detail += terms[i].first + "/" + terms[j].first + " not equivalent; ";
      }
      ++pairs;
    }
  }
  o.detail += std::to_string(pairs) + " pairs isomorphic and equivalent";
  return o;
}

Outcome tetrahedron() {
  Term t = term_fixture("tetrahedron-1.term"), u = term_fixture("tetrahedron-2.term");
  Graph g = eval(t);
  int tw = exact_treewidth(g), oracle = testing::oracle_treewidth(g);
  std::ostringstream d;
  d << "equivalent=" << equivalent(t, u) << " widths " << term_width(t) << "," << term_width(u) << " treewidth " << tw
    << " oracle " << oracle;
  bool ok = equivalent(t, u) && term_width(t) == 3 && term_width(u) == 3 && tw == 3 && oracle == 3 &&
            isomorphic(g, graph_fixture("tetrahedron.graph"));
  return {ok, d.str()};
}

Outcome parse_round_trip() {
  auto t0 = Clock::now();
  testing::TermGen gen(401);
  int done = 0, bad = 0;
  std::string first;
  while (done < kRoundTripTerms) {
    Term t = gen.term(gen.pick(5), 2 + gen.pick(kRoundTripMaxConstructors));
    if (term_size(t) > kRoundTripMaxConstructors || term_width(t) > 3) continue;
    ++done;
    Graph g = eval(t);
    Term p = parse_graph(g);
    if ((term_width(p) > 3 || !isomorphic(eval(p), g)) && bad++ == 0) first = print_term(t);
  }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << done << " terms, " << bad << " failures, " << secs << " s";
  if (bad) d << " (first " << first << ")";
  return {bad == 0 && secs < kRoundTripSeconds, d.str()};
}

Outcome treewidth_oracle() {
  std::mt19937 rng(501);
  int bad = 0;
  for (int i = 0; i < kOracleGraphs; ++i) {
    Graph g = testing::random_graph(rng, kOracleMaxVertices, 14, 4, 4);
    if (exact_treewidth(g) != testing::oracle_treewidth(g)) ++bad;
  }
  int k5 = exact_treewidth(graph_fixture("k5-skeleton.graph"));
  int k4 = exact_treewidth(graph_fixture("k4.graph"));
  std::ostringstream d;
  d << kOracleGraphs << " graphs, " << bad << " disagreements; K5 " << k5 << ", K4 " << k4;
  return {bad == 0 && k5 == 4 && k4 == 3, d.str()};
}

Outcome properties() {
  struct Named {
    const char* name;
    std::function<testing::PropertyResult()> run;
    int min_samples;
  };
  const int n = kPropertySamples;
  std::vector<Named> all = {
      {"arity-4 atomic", [&] { return testing::check_arity4_atomic(601, n); }, n},
      {"forget points are anchors", [&] { return testing::check_forget_points_are_anchors(602, n); }, n},
      {"anchor existence", [&] { return testing::check_anchor_exists(603, n); }, 3 * n},
      {"order measure", [&] { return testing::check_glt_measure(605, n); }, n},
      {"pairs pass down", [&] { return testing::check_glt_diamond(606, n); }, n},
      {"factor forget points", [&] { return testing::check_factor_forget_points(607, n); }, n},
      {"triangle or shape", [&] { return testing::check_triangle_or_shape(608, n); }, n},
  };
  Outcome o;
  std::ostringstream d;
  for (const Named& p : all) {
    testing::PropertyResult r = p.run();
    d << p.name << " " << r.samples << "/" << r.violations;
    if (!r.ok(p.min_samples)) {
      o.pass = false;
      d << " FAILED";
      if (!r.first.empty()) d << " (" << r.first << ")";
    }
    d << "; ";
  }
  o.detail = "samples/violations: " + d.str();
  if (o.detail.ends_with("; ")) o.detail.resize(o.detail.size() - 2);
  return o;
}

// The pair each side of an axiom forgets at the root, as vertices of eval(lhs).
std::vector<std::pair<int, int>> outer_pairs(const AxiomInstance& ax) {
  Graph g = eval(ax.lhs);
  Graph lin = eval(subterm_at(ax.lhs, {0, 0})), rin = eval(subterm_at(ax.rhs, {0, 0}));
  auto iso = isomorphic(eval(ax.rhs), g);
  if (!iso) throw InternalError(ax.key + " sides are not isomorphic");
  auto ordered = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::vector<std::pair<int, int>> out = {ordered(lin.iface[2], lin.iface[3]),
                                          ordered(iso->vertex_map[rin.iface[2]], iso->vertex_map[rin.iface[3]])};
  std::sort(out.begin(), out.end());
  return out;
}

Outcome hard_fixtures() {
  Outcome o;
  std::ostringstream d;
  for (const char* f : {"fs0.graph", "fs1.graph", "fs2.graph", "fk.graph"})
    if (is_hard(graph_fixture(f))) {
      o.pass = false;
      d << f << " reported hard; ";
    }
  for (const AxiomInstance& ax : {axiom_fx(), axiom_fd()}) {
    Graph g = eval(ax.lhs);
    std::string name = ax.key;
    if (!isomorphic(g, graph_fixture(name == "FX" ? "fx.graph" : "fd.graph"))) {
      o.pass = false;
      d << name << " fixture differs; ";
    }
    if (!is_hard(g)) {
      o.pass = false;
      d << name << " not hard; ";
      continue;
    }
    auto want = outer_pairs(ax);
    auto got = minimal_separation_pairs(g);
    bool disjoint = want[0].first != want[1].first && want[0].first != want[1].second &&
                    want[0].second != want[1].first && want[0].second != want[1].second;
    d << name << " pairs";
    for (auto [x, y] : got) d << " (" << x << "," << y << ")";
    if (got != want || !disjoint) {
      o.pass = false;
      d << " expected";
      for (auto [x, y] : want) d << " (" << x << "," << y << ")";
    }
    int easy_points = 0;
    auto fp = forget_points(g);
    for (auto [x, y] : want)
      for (int v : {x, y}) {
        bool is_point = std::find(fp.begin(), fp.end(), v) != fp.end();
        if (is_point && is_easy(append_source(g, v))) ++easy_points;
      }
    d << ", " << easy_points << "/4 forgotten vertices give easy graphs; ";
    if (easy_points != 4) o.pass = false;
  }
  o.detail = d.str();
  if (o.detail.ends_with("; ")) o.detail.resize(o.detail.size() - 2);
  return o;
}

Outcome normalization() {
  testing::TermGen gen(801);
  int bad = 0;
  std::string first;
  for (int i = 0; i < kNormalizeTerms; ++i) {
    Term t = gen.term(gen.pick(5), 2 + i % 16);
    Normalized n = normalize(t);
    bool ok = validate_derivation(n.derivation).ok && term_equal(n.derivation.start, t) &&
              term_equal(n.derivation.end, n.normal) && isomorphic(eval(n.normal), eval(t)) &&
              is_normal_form(n.normal);
    Normalized again = normalize(n.normal);
    ok = ok && again.derivation.steps.empty() && term_equal(again.normal, n.normal);
    if (!ok && bad++ == 0) first = print_term(t);
  }
  std::ostringstream d;
  d << kNormalizeTerms << " terms, " << bad << " failures";
  if (bad) d << " (first " << first << ")";
  return {bad == 0, d.str()};
}

// Same graph with vertex ids and edge order shuffled, so a second parsing
// does not follow the first term's construction order.
Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<int> r(g.nv);
  for (int v = 0; v < g.nv; ++v) r[v] = v;
  std::shuffle(r.begin(), r.end(), rng);
  Graph h;
  h.nv = g.nv;
  for (int s : g.iface) h.iface.push_back(r[s]);
  for (const Edge& e : g.edges) {
    Edge f{e.label, {}};
    for (int v : e.nbrs) f.nbrs.push_back(r[v]);
    h.edges.push_back(f);
  }
  std::shuffle(h.edges.begin(), h.edges.end(), rng);
  return h;
}

bool core_schemas_only(const Derivation& d) {
  static const std::set<std::string> core = {"A1a", "A1b", "A1c", "A2a", "A2b", "A3a", "A3b",
                                             "A4a", "A4b", "A5a", "A5b", "A6a", "A6b", "A7"};
  for (const DerivationStep& s : d.steps) {
    const AxiomInstance* ax = find_axiom(s.axiom);
    if (!ax || !core.count(ax->schema)) return false;
  }
  return true;
}

Outcome easy_completeness() {
  testing::TermGen gen(901);
  std::mt19937 rng(902);
  int graphs = 0, bad = 0, steps = 0;
  std::string first;
  for (int i = 0; i < 20000 && graphs < kEasyGraphs; ++i) {
    Term t = gen.term(gen.pick(5), 15 + gen.pick(30));
    Graph g = eval(t);
    // at least one forgotten vertex and a few edges, so there is something to rearrange
    if (g.nv == g.arity() || g.edges.size() < 3 || !treewidth_at_most(g, 3) || !is_easy(g)) continue;
    Term u = parse_graph(shuffled(g, rng));
    if (term_equal(t, u)) continue;
    ++graphs;
    EasyResult r = derive_easy(t, u);
    bool ok = r.derivation && validate_derivation(*r.derivation).ok && term_equal(r.derivation->start, t) &&
              term_equal(r.derivation->end, u) && core_schemas_only(*r.derivation);
    if (r.derivation) steps += static_cast<int>(r.derivation->steps.size());
    if (!ok && bad++ == 0) first = print_term(t) + " / " + print_term(u) + (r.derivation ? "" : ": " + r.reason);
  }
  std::ostringstream d;
  d << graphs << " easy graphs with distinct parsings, " << bad << " failures, " << steps << " steps in total";
  if (bad) d << " (first " << first << ")";
  return {bad == 0 && graphs >= kEasyGraphs, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"axiom soundness sweep", soundness},
      {"three-component graph parsings", three_component_parsings},
      {"tetrahedron parsings", tetrahedron},
      {"parser round-trip", parse_round_trip},
      {"treewidth oracle agreement", treewidth_oracle},
      {"structure property suite", properties},
      {"hard fixtures", hard_fixtures},
      {"normalization", normalization},
      {"easy-graph derivations", easy_completeness},
  };
  int failed = 0, index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
