// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include "tw3/structure.hpp"

#include <algorithm>
#include <set>

#include "tw3/errors.hpp"
#include "tw3/treewidth.hpp"

namespace tw3 {

namespace {

// Removes the given interface positions; those sources must be isolated.
Graph drop_sources(const Graph& g, const std::vector<int>& positions) {
  std::vector<char> drop(g.nv, 0);
  for (int i : positions) drop[g.iface.at(i)] = 1;
  auto deg = g.degrees();
  std::vector<int> to_new(g.nv, -1);
  Graph r;
  for (int v = 0; v < g.nv; ++v) {
    if (drop[v]) {
      if (deg[v] != 0) throw InternalError("dropping a non-isolated source");
      continue;
    }
    to_new[v] = r.nv++;
  }
  for (int s : g.iface)
    if (!drop[s]) r.iface.push_back(to_new[s]);
  for (const auto& e : g.edges) {
    Edge ne{e.label, {}};
    for (int v : e.nbrs) ne.nbrs.push_back(to_new[v]);
    r.edges.push_back(std::move(ne));
  }
  return r;
}

std::vector<int> isolated_positions(const Graph& g) {
  auto deg = g.degrees();
  std::vector<int> out;
  for (int i = 0; i < g.arity(); ++i)
    if (deg[g.iface[i]] == 0) out.push_back(i);
  return out;
}

bool is_full(const Graph& g) { return isolated_positions(g).empty(); }

bool full_prime(const Graph& g) {
  Classification c = classify(g);
  return c.full && c.prime;
}

// Vertices reachable from `from` along inner paths that never enter `blocked`.
// Sources other than `from` are reached but not expanded.
std::vector<char> inner_reach(const Graph& g, int from, const std::vector<char>& blocked) {
  auto pos = g.source_positions();
  std::vector<std::vector<int>> incident(g.nv);
  for (size_t e = 0; e < g.edges.size(); ++e)
    for (int v : g.edges[e].nbrs) incident[v].push_back(static_cast<int>(e));
  std::vector<char> seen(g.nv, 0), used(g.edges.size(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v != from && pos[v] >= 0) continue;
    for (int e : incident[v]) {
      if (used[e]) continue;
      used[e] = 1;
      for (int w : g.edges[e].nbrs)
        if (!seen[w] && !blocked[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return seen;
}

void require_inner(const Graph& g, int x, const char* what) {
  if (x < 0 || x >= g.nv) throw InputError(std::string(what) + " " + std::to_string(x) + " does not exist");
  if (g.source_positions()[x] >= 0) throw InputError(std::string(what) + " " + std::to_string(x) + " is not inner");
}

std::vector<int> anchors_unchecked(const Graph& g) {
  std::vector<int> out;
  for (int x : g.inner_vertices()) {
    int full = 0;
    for (const auto& c : prime_components(append_source(g, x)))
      if (is_full(c)) ++full;
    bool edge_cond = false;
    for (const auto& e : g.edges) {
      std::set<int> n(e.nbrs.begin(), e.nbrs.end());
      if (n.count(x) && std::all_of(g.iface.begin(), g.iface.end(), [&](int s) { return n.count(s) > 0; }))
        edge_cond = true;
    }
    if (full == 0 || edge_cond || full >= 2) out.push_back(x);
  }
  return out;
}

bool glt_unchecked(const Graph& g, int x, int y) {
  for (int s : g.iface)
    if (is_checkpoint(g, y, x, s)) return true;
  return false;
}

Graph diamond_shape() {
  Graph s = graph_top(4);
  s.edges.push_back({"a", {0, 2, 3}});
  s.edges.push_back({"b", {2, 3, 1}});
  return s;
}

bool diamond_unchecked(const Graph& g, int x, int y) {
  std::vector<char> blocked(g.nv, 0);
  blocked[x] = blocked[y] = 1;
  bool by_paths = !inner_reach(g, g.iface[0], blocked)[g.iface[1]];
  static const Graph shape = diamond_shape();
  bool by_shape = has_shape(append_source(append_source(g, x), y), shape).has_value();
  if (by_paths != by_shape) throw InternalError("separation-pair checks disagree");
  return by_paths;
}

bool easy_rec(const Graph& g) {
  for (const Graph& c : reduced_components(g)) {
    if (classify(c).atomic) continue;
    auto fp = forget_points(c, 3);
    if (fp.size() != 1) return false;
    if (!easy_rec(append_source(c, fp[0]))) return false;
  }
  return true;
}

}  // namespace

Classification classify(const Graph& g) {
  Classification c;
  const int inner_vertices = g.nv - g.arity();
  const int inner = inner_vertices + static_cast<int>(g.edges.size());
  c.empty = inner == 0;
  if (inner == 1 && g.edges.size() == 1) {
    std::set<int> n(g.edges[0].nbrs.begin(), g.edges[0].nbrs.end());
    c.atomic = std::all_of(g.iface.begin(), g.iface.end(), [&](int s) { return n.count(s) > 0; });
  }
  c.full = is_full(g);
  c.prime = !c.empty && inner_components(g).size() == 1;
  return c;
}

std::vector<Graph> prime_components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& c : inner_components(g)) out.push_back(subgraph(g, c));
  return out;
}

FullDecomposition full_decomposition(const Graph& g) {
  const int k = g.arity();
  auto iso = isolated_positions(g);
  std::vector<char> is_iso(k, 0);
  for (int i : iso) is_iso[i] = 1;
  FullDecomposition d;
  d.m = static_cast<int>(iso.size());
  for (int i = 0; i < k; ++i)
    if (!is_iso[i]) d.p.push_back(i + 1);
  for (int i : iso) d.p.push_back(i + 1);
  d.core = drop_sources(g, iso);
  return d;
}

std::vector<Graph> reduced_components(const Graph& g) {
  std::vector<Graph> out;
  for (const Graph& c : prime_components(g)) out.push_back(full_decomposition(c).core);
  return out;
}

SeriesDecomposition series_decomposition(const Graph& g, int x) {
  require_inner(g, x, "vertex");
  if (!full_prime(g)) throw InputError("series decomposition needs a full prime graph");
  const int k = g.arity();
  std::vector<std::vector<Graph>> parts(k);
  std::vector<Graph> factor_parts;
  for (const Graph& c : prime_components(append_source(g, x))) {
    auto iso = isolated_positions(c);
    if (iso.empty() || iso[0] == k) {
      factor_parts.push_back(c);
      continue;
    }
    int i = iso[0];
    Graph moved = graph_perm(perm_swap(k + 1, i + 1, k + 1), c);
    parts[i].push_back(drop_sources(moved, {k}));
  }
  SeriesDecomposition d;
  for (int i = 0; i < k; ++i) {
    Graph acc = graph_top(k);
    for (const Graph& p : parts[i]) acc = graph_par(acc, p);
    d.args.push_back(acc);
  }
  d.factor = graph_top(k + 1);
  for (const Graph& p : factor_parts) d.factor = graph_par(d.factor, p);
  return d;
}

bool is_checkpoint(const Graph& g, int x, int y, int z) {
  require_inner(g, x, "checkpoint");
  if (y < 0 || y >= g.nv || z < 0 || z >= g.nv) throw InputError("checkpoint endpoints must be vertices");
  if (x == y || x == z) return true;
  std::vector<char> blocked(g.nv, 0);
  blocked[x] = 1;
  return !inner_reach(g, y, blocked)[z];
}

std::vector<int> anchors(const Graph& g) {
  if (!full_prime(g)) throw InputError("anchors are defined on full prime graphs");
  if (g.arity() > 3) throw InputError("anchors at arity " + std::to_string(g.arity()) + " are not supported");
  return anchors_unchecked(g);
}

bool is_hard(const Graph& g) {
  Classification c = classify(g);
  return c.full && c.prime && !c.atomic && anchors_unchecked(g).empty();
}

Relations relations(const Graph& g, int x, int y) {
  if (g.arity() != 2) throw InputError("relations need arity 2, got " + std::to_string(g.arity()));
  if (!full_prime(g)) throw InputError("relations need a full prime graph");
  require_inner(g, x, "vertex");
  require_inner(g, y, "vertex");
  if (x == y) throw InputError("relations need distinct vertices");
  return {glt_unchecked(g, x, y), diamond_unchecked(g, x, y)};
}

std::vector<std::pair<int, int>> minimal_separation_pairs(const Graph& g) {
  if (!is_hard(g)) throw InputError("minimal separation pairs are defined on hard graphs");
  if (g.arity() != 2) throw InputError("minimal separation pairs need arity 2");
  auto inner = g.inner_vertices();
  std::vector<char> minimal(g.nv, 0);
  for (int x : inner) {
    minimal[x] = 1;
    for (int y : inner)
      if (y != x && glt_unchecked(g, x, y)) minimal[x] = 0;
  }
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < inner.size(); ++i)
    for (size_t j = i + 1; j < inner.size(); ++j) {
      int x = inner[i], y = inner[j];
      if (!minimal[x] || !minimal[y] || !diamond_unchecked(g, x, y)) continue;
      if (treewidth_at_most(append_source(append_source(g, x), y), 3)) out.emplace_back(x, y);
    }
  return out;
}

bool is_easy(const Graph& g) {
  if (!treewidth_at_most(g, 3)) throw InputError("is_easy needs treewidth at most 3");
  return easy_rec(g);
}

}  // namespace tw3
