// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Structure-theory properties checked over sample families.  Each check
// returns the number of samples seen and the violations found.
#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "samples.hpp"
#include "tw3/graph.hpp"
#include "tw3/structure.hpp"
#include "tw3/treewidth.hpp"

namespace tw3::testing {

struct PropertyResult {
  int samples = 0;
  int violations = 0;
  std::string first;  ///< description of the first violation

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
  bool ok(int min_samples) const { return violations == 0 && samples >= min_samples; }
};

/// Full prime graphs of the given arity, atomic ones included.
inline std::vector<Graph> any_full_prime_samples(unsigned seed, int arity, int want, int attempts = 20000) {
  TermGen gen(seed);
  std::vector<Graph> out;
  for (int i = 0; i < attempts && static_cast<int>(out.size()) < want; ++i)
    for (Graph& c : reduced_components(eval(gen.term(arity, 2 + gen.pick(14)))))
      if (c.arity() == arity && static_cast<int>(out.size()) < want) out.push_back(std::move(c));
  return out;
}

/// Half from random terms, the rest from random hypergraphs.
inline std::vector<Graph> mixed_samples(unsigned seed, int arity, int n) {
  std::vector<Graph> out = full_prime_samples(seed, arity, n / 2);
  for (Graph& g : full_prime_random_graphs(seed, arity, n - static_cast<int>(out.size()))) out.push_back(std::move(g));
  return out;
}

inline std::string describe(const Graph& g) {
  std::ostringstream s;
  s << "graph with " << g.nv << " vertices, " << g.edges.size() << " edges, arity " << g.arity();
  return s.str();
}

inline bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

/// Full prime graphs of arity 4 and treewidth at most 3 are atomic.
inline PropertyResult check_arity4_atomic(unsigned seed, int n) {
  PropertyResult r;
  std::vector<Graph> gs = any_full_prime_samples(seed, 4, n / 2);
  for (Graph& g : full_prime_random_graphs(seed, 4, n - static_cast<int>(gs.size()), true)) gs.push_back(std::move(g));
  for (const Graph& g : gs) {
    if (!treewidth_at_most(g, 3)) continue;
    ++r.samples;
    if (!classify(g).atomic) r.fail(describe(g));
  }
  return r;
}

/// At arity 3, every forget point is an anchor.
inline PropertyResult check_forget_points_are_anchors(unsigned seed, int n) {
  PropertyResult r;
  for (const Graph& g : mixed_samples(seed, 3, n)) {
    ++r.samples;
    auto an = anchors(g);
    for (int x : forget_points(g))
      if (!contains(an, x)) r.fail("forget point " + std::to_string(x) + " is no anchor in " + describe(g));
  }
  return r;
}

/// Non-atomic full prime graphs of arity 0, 1 or 3 have an anchor.
inline PropertyResult check_anchor_exists(unsigned seed, int n_per_arity) {
  PropertyResult r;
  for (int k : {0, 1, 3})
    for (const Graph& g : mixed_samples(seed + k, k, n_per_arity)) {
      ++r.samples;
      if (anchors(g).empty()) r.fail("no anchor in " + describe(g));
    }
  return r;
}

/// At arity 0 every inner vertex is an anchor.
inline PropertyResult check_arity0_all_anchors(unsigned seed, int n) {
  PropertyResult r;
  for (const Graph& g : mixed_samples(seed, 0, n)) {
    ++r.samples;
    if (anchors(g) != g.inner_vertices()) r.fail(describe(g));
  }
  return r;
}

/// The two relations on all ordered pairs of inner vertices of a hard graph.
/// glt[x][y] holds when y is below x, diamond[x][y] when (x,y) is a separation pair.
struct RelationTable {
  std::vector<int> inner;
  std::vector<std::vector<char>> glt, diamond;

  explicit RelationTable(const Graph& g) : inner(g.inner_vertices()) {
    glt.assign(g.nv, std::vector<char>(g.nv, 0));
    diamond = glt;
    for (int x : inner)
      for (int y : inner) {
        if (x == y) continue;
        Relations rel = relations(g, x, y);
        glt[x][y] = rel.glt;
        diamond[x][y] = rel.diamond;
      }
  }
};

inline int factor_size(const Graph& g, int x) { return series_decomposition(g, x).factor.size(); }

/// On hard graphs, y below x implies a strictly smaller series factor at y.
inline PropertyResult check_glt_measure(unsigned seed, int n) {
  PropertyResult r;
  for (int i = 0; i < n; ++i) {
    Graph g = hard_sample(seed + i).graph;
    ++r.samples;
    RelationTable t(g);
    for (int x : t.inner)
      for (int y : t.inner)
        if (t.glt[x][y] && factor_size(g, y) >= factor_size(g, x))
          r.fail(std::to_string(y) + " below " + std::to_string(x) + " without a smaller factor in " + describe(g));
  }
  return r;
}

/// On hard graphs, y below x and (x,z) a separation pair give (y,z) a separation pair.
inline PropertyResult check_glt_diamond(unsigned seed, int n) {
  PropertyResult r;
  for (int i = 0; i < n; ++i) {
    Graph g = hard_sample(seed + i).graph;
    ++r.samples;
    RelationTable t(g);
    for (int x : t.inner)
      for (int y : t.inner)
        for (int z : t.inner)
          if (z != y && t.glt[x][y] && t.diamond[x][z] && !t.diamond[y][z])
            r.fail("triple " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + " in " +
                   describe(g));
  }
  return r;
}

/// The series factor of g at x, with its inner vertices named as in g.
inline Graph factor_in_place(const Graph& g, int x, std::vector<int>& vmap) {
  Graph h = append_source(g, x);
  InnerComponent all;
  for (const InnerComponent& c : inner_components(h)) {
    Graph part = subgraph(h, c);
    bool full = std::all_of(part.iface.begin(), part.iface.end(), [&](int s) { return part.degrees()[s] > 0; });
    if (!full) continue;
    all.vertices.insert(all.vertices.end(), c.vertices.begin(), c.vertices.end());
    all.edges.insert(all.edges.end(), c.edges.begin(), c.edges.end());
  }
  std::sort(all.vertices.begin(), all.vertices.end());
  std::sort(all.edges.begin(), all.edges.end());
  return subgraph(h, all, &vmap);
}

/// On hard graphs, for a forget point x and a forget point y of the series
/// factor at x, y is below x or (x,y) is a separation pair.
inline PropertyResult check_factor_forget_points(unsigned seed, int n) {
  PropertyResult r;
  for (int i = 0; i < n; ++i) {
    Graph g = hard_sample(seed + i).graph;
    ++r.samples;
    for (int x : forget_points(g)) {
      std::vector<int> vmap;
      Graph f = factor_in_place(g, x, vmap);
      if (!isomorphic(f, series_decomposition(g, x).factor)) {
        r.fail("factor reconstruction differs in " + describe(g));
        continue;
      }
      for (int y : forget_points(f)) {
        Relations rel = relations(g, x, vmap[y]);
        if (!rel.glt && !rel.diamond)
          r.fail("x=" + std::to_string(x) + " y=" + std::to_string(vmap[y]) + " unrelated in " + describe(g));
      }
    }
  }
  return r;
}

/// Arity-3 shapes without a sourced triangle: a path of two binary edges
/// through one source, or three binary edges from one inner vertex.
inline std::vector<Graph> triangle_free_shapes() {
  std::vector<Graph> out;
  for (int mid = 0; mid < 3; ++mid) {
    Graph v = graph_top(3);
    v.edges.push_back({"x", {(mid + 1) % 3, mid}});
    v.edges.push_back({"y", {mid, (mid + 2) % 3}});
    out.push_back(v);
  }
  Graph star = graph_top(3);
  star.nv = 4;
  for (int s = 0; s < 3; ++s) star.edges.push_back({std::string(1, static_cast<char>('x' + s)), {s, 3}});
  out.push_back(star);
  return out;
}

/// Arity-3 graphs of treewidth at most 3 have a sourced triangle or one of
/// the triangle-free shapes.
inline PropertyResult check_triangle_or_shape(unsigned seed, int n) {
  PropertyResult r;
  static const std::vector<Graph> shapes = triangle_free_shapes();
  for (const Graph& g : mixed_samples(seed, 3, n)) {
    ++r.samples;
    if (has_clique_sourced_minor(footprint(g), 3)) continue;
    if (!std::any_of(shapes.begin(), shapes.end(), [&](const Graph& s) { return has_shape(g, s).has_value(); }))
      r.fail(describe(g));
  }
  return r;
}

/// Chain A:(si,sk,x), B:(x,sk,y), C:(y,sk,sj) with x = 3, y = 4.
inline Graph two_anchor_shape(int i, int j, int k) {
  Graph s = graph_top(3);
  s.nv = 5;
  s.edges.push_back({"A", {i, k, 3}});
  s.edges.push_back({"B", {3, k, 4}});
  s.edges.push_back({"C", {4, k, j}});
  return s;
}

/// Arity-3 full prime graphs with two distinct anchors have the chain shape
/// with the anchors in the middle.
inline PropertyResult check_two_anchor_shape(unsigned seed, int n) {
  PropertyResult r;
  for (const Graph& g : full_prime_random_graphs(seed, 3, n * 12)) {
    auto an = anchors(g);
    if (an.size() < 2) continue;
    if (r.samples == n) break;
    ++r.samples;
    bool found = false;
    for (size_t a = 0; a < an.size() && !found; ++a)
      for (size_t b = 0; b < an.size() && !found; ++b) {
        if (a == b) continue;
        for (int k = 0; k < 3 && !found; ++k) {
          int i = (k + 1) % 3, j = (k + 2) % 3;
          found = has_shape_pinned(g, two_anchor_shape(i, j, k), {3, 4}, {an[a], an[b]}).has_value();
        }
      }
    if (!found) r.fail(describe(g) + " with " + std::to_string(an.size()) + " anchors");
  }
  return r;
}

}  // namespace tw3::testing
