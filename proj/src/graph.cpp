// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include "tw3/graph.hpp"

#include <algorithm>
#include <numeric>

#include "tw3/errors.hpp"

namespace tw3 {

std::vector<int> Graph::source_positions() const {
  std::vector<int> pos(nv, -1);
  for (int i = 0; i < arity(); ++i) pos[iface[i]] = i;
  return pos;
}

std::vector<int> Graph::inner_vertices() const {
  auto pos = source_positions();
  std::vector<int> out;
  for (int v = 0; v < nv; ++v)
    if (pos[v] < 0) out.push_back(v);
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(nv, 0);
  for (const auto& e : edges)
    for (int v : e.nbrs) ++d[v];
  return d;
}

static void check_list(const std::vector<int>& l, int nv, const std::string& what) {
  std::vector<bool> seen(nv, false);
  for (int v : l) {
    if (v < 0 || v >= nv) throw InputError(what + " mentions undeclared vertex " + std::to_string(v));
    if (seen[v]) throw InputError(what + " repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
}

void Graph::validate() const {
  if (nv < 0) throw InputError("negative vertex count");
  check_list(iface, nv, "interface");
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].label.empty()) throw InputError("edge " + std::to_string(i) + " has an empty label");
    check_list(edges[i].nbrs, nv, "neighbours of edge " + std::to_string(i));
  }
  (void)alphabet();
}

Alphabet Graph::alphabet() const {
  Alphabet a;
  for (const auto& e : edges) {
    auto [it, fresh] = a.emplace(e.label, static_cast<int>(e.nbrs.size()));
    if (!fresh && it->second != static_cast<int>(e.nbrs.size()))
      throw InputError("letter '" + e.label + "' used with arities " + std::to_string(it->second) + " and " +
                       std::to_string(e.nbrs.size()));
  }
  return a;
}

Graph graph_top(int k) {
  if (k < 0) throw InputError("negative arity");
  Graph g;
  g.nv = k;
  g.iface = perm_identity(k);
  for (auto& v : g.iface) --v;
  return g;
}

Graph graph_atom(const std::string& letter, int k) {
  Graph g = graph_top(k);
  g.edges.push_back({letter, g.iface});
  return g;
}

Graph graph_par(const Graph& g, const Graph& h) {
  if (g.arity() != h.arity())
    throw InputError("parallel composition of arities " + std::to_string(g.arity()) + " and " +
                     std::to_string(h.arity()));
  Graph r = g;
  auto hpos = h.source_positions();
  std::vector<int> map(h.nv);
  for (int v = 0; v < h.nv; ++v) map[v] = hpos[v] >= 0 ? g.iface[hpos[v]] : r.nv++;
  for (const auto& e : h.edges) {
    Edge ne{e.label, {}};
    for (int v : e.nbrs) ne.nbrs.push_back(map[v]);
    r.edges.push_back(std::move(ne));
  }
  return r;
}

Graph graph_forget(const Graph& g) {
  if (g.arity() == 0) throw InputError("forget applied to a graph of arity 0");
  Graph r = g;
  r.iface.pop_back();
  return r;
}

Graph graph_lift(const Graph& g) {
  Graph r = g;
  r.iface.push_back(r.nv++);
  return r;
}

Graph graph_perm(const Perm& p, const Graph& g) {
  if (static_cast<int>(p.size()) != g.arity())
    throw InputError("permutation of degree " + std::to_string(p.size()) + " applied to arity " +
                     std::to_string(g.arity()));
  if (!perm_valid(p)) throw InputError("invalid permutation " + perm_to_string(p));
  Graph r = g;
  for (int j = 0; j < g.arity(); ++j) r.iface[p[j] - 1] = g.iface[j];
  return r;
}

Graph append_source(const Graph& g, int x) {
  if (x < 0 || x >= g.nv) throw InputError("vertex " + std::to_string(x) + " does not exist");
  if (g.source_positions()[x] >= 0) throw InputError("vertex " + std::to_string(x) + " is already a source");
  Graph r = g;
  r.iface.push_back(x);
  return r;
}

Graph substitute(const Graph& g, const Substitution& sigma) {
  Graph r;
  r.nv = g.nv;
  r.iface = g.iface;
  for (const auto& e : g.edges) {
    auto it = sigma.find(e.label);
    if (it == sigma.end()) throw InputError("substitution does not assign letter '" + e.label + "'");
    const Graph& s = it->second;
    if (s.arity() != static_cast<int>(e.nbrs.size()))
      throw InputError("substitution assigns a graph of arity " + std::to_string(s.arity()) + " to letter '" +
                       e.label + "' of arity " + std::to_string(e.nbrs.size()));
    auto spos = s.source_positions();
    std::vector<int> map(s.nv);
    for (int v = 0; v < s.nv; ++v) map[v] = spos[v] >= 0 ? e.nbrs[spos[v]] : r.nv++;
    for (const auto& se : s.edges) {
      Edge ne{se.label, {}};
      for (int v : se.nbrs) ne.nbrs.push_back(map[v]);
      r.edges.push_back(std::move(ne));
    }
  }
  return r;
}

namespace {
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

std::vector<InnerComponent> inner_components(const Graph& g) {
  // elements: vertices 0..nv-1, edges nv..nv+m-1
  auto pos = g.source_positions();
  int m = static_cast<int>(g.edges.size());
  Dsu d(g.nv + m);
  for (int e = 0; e < m; ++e)
    for (int v : g.edges[e].nbrs)
      if (pos[v] < 0) d.unite(g.nv + e, v);
  std::map<int, InnerComponent> by_root;
  std::vector<int> order;  // roots by first appearance: inner vertices first, then edges
  auto touch = [&](int el) {
    int r = d.find(el);
    if (!by_root.count(r)) order.push_back(r);
    return r;
  };
  for (int v = 0; v < g.nv; ++v)
    if (pos[v] < 0) by_root[touch(v)].vertices.push_back(v);
  for (int e = 0; e < m; ++e) by_root[touch(g.nv + e)].edges.push_back(e);
  std::vector<InnerComponent> out;
  for (int r : order) out.push_back(by_root[r]);
  return out;
}

Graph subgraph(const Graph& g, const InnerComponent& c, std::vector<int>* vmap) {
  Graph r;
  std::vector<int> to_new(g.nv, -1), to_old;
  for (int s : g.iface) {
    to_new[s] = r.nv++;
    to_old.push_back(s);
    r.iface.push_back(to_new[s]);
  }
  for (int v : c.vertices) {
    to_new[v] = r.nv++;
    to_old.push_back(v);
  }
  for (int e : c.edges) {
    Edge ne{g.edges[e].label, {}};
    for (int v : g.edges[e].nbrs) {
      if (to_new[v] < 0) throw InternalError("component edge leaves its component");
      ne.nbrs.push_back(to_new[v]);
    }
    r.edges.push_back(std::move(ne));
  }
  if (vmap) *vmap = to_old;
  return r;
}

void SourcedSimpleGraph::validate() const {
  for (auto [u, v] : edges)
    if (u < 0 || v >= n || u >= v) throw InputError("bad simple edge");
  for (int s : sources)
    if (s < 0 || s >= n) throw InputError("bad source");
}

SourcedSimpleGraph footprint(const Graph& g) {
  SourcedSimpleGraph s;
  s.n = g.nv;
  for (const auto& e : g.edges)
    for (size_t i = 0; i < e.nbrs.size(); ++i)
      for (size_t j = i + 1; j < e.nbrs.size(); ++j)
        s.edges.emplace_back(std::min(e.nbrs[i], e.nbrs[j]), std::max(e.nbrs[i], e.nbrs[j]));
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  s.sources = g.iface;
  std::sort(s.sources.begin(), s.sources.end());
  return s;
}

SourcedSimpleGraph clique_of_sources(int k) {
  SourcedSimpleGraph s;
  s.n = k;
  for (int i = 0; i < k; ++i) {
    s.sources.push_back(i);
    for (int j = i + 1; j < k; ++j) s.edges.emplace_back(i, j);
  }
  return s;
}

}  // namespace tw3
