// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact isomorphism of ordered hypergraphs with interfaces by backtracking.
// Sources are forced by the interface; inner vertices are mapped in BFS
// order, candidates filtered by an incidence signature, and every edge is
// checked as soon as all its neighbours are mapped.
#include <algorithm>
#include <deque>
#include <tuple>
#include <unordered_map>

#include "tw3/graph.hpp"

namespace tw3 {

namespace {

using Signature = std::vector<std::tuple<std::string, int, int>>;  // (label, arity, slot)

std::vector<Signature> signatures(const Graph& g) {
  std::vector<Signature> sig(g.nv);
  for (const auto& e : g.edges)
    for (size_t i = 0; i < e.nbrs.size(); ++i)
      sig[e.nbrs[i]].emplace_back(e.label, static_cast<int>(e.nbrs.size()), static_cast<int>(i));
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

std::string edge_key(const std::string& label, const std::vector<int>& nbrs) {
  std::string k = label;
  k.push_back('\0');
  for (int v : nbrs) {
    k += std::to_string(v);
    k.push_back(',');
  }
  return k;
}

struct Search {
  const Graph& g;
  const Graph& h;
  std::vector<Signature> sg, sh;
  std::vector<int> order;                 // inner vertices of g in mapping order
  std::vector<std::vector<int>> closing;  // per order index: edges of g completed there
  std::vector<int> root_edges;            // edges with only source neighbours
  std::unordered_map<std::string, int> avail;
  std::vector<int> vmap, used;
  std::vector<std::vector<int>> h_inner_by_sig;
  std::vector<int> h_inner;

  Search(const Graph& g_, const Graph& h_) : g(g_), h(h_), sg(signatures(g_)), sh(signatures(h_)) {}

  bool consume(int e) {
    std::vector<int> img;
    for (int v : g.edges[e].nbrs) img.push_back(vmap[v]);
    auto it = avail.find(edge_key(g.edges[e].label, img));
    if (it == avail.end() || it->second == 0) return false;
    --it->second;
    return true;
  }
  void release(int e) {
    std::vector<int> img;
    for (int v : g.edges[e].nbrs) img.push_back(vmap[v]);
    ++avail[edge_key(g.edges[e].label, img)];
  }

  bool rec(size_t i) {
    if (i == order.size()) return true;
    int v = order[i];
    for (int w : h_inner) {
      if (used[w] || sh[w] != sg[v]) continue;
      vmap[v] = w;
      used[w] = 1;
      size_t done = 0;
      bool ok = true;
      for (int e : closing[i]) {
        if (!consume(e)) {
          ok = false;
          break;
        }
        ++done;
      }
      if (ok && rec(i + 1)) return true;
      for (size_t j = 0; j < done; ++j) release(closing[i][j]);
      used[w] = 0;
      vmap[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Isomorphism> isomorphic(const Graph& g, const Graph& h) {
  if (g.nv != h.nv || g.edges.size() != h.edges.size() || g.arity() != h.arity()) return std::nullopt;
  Search s(g, h);
  {
    auto a = s.sg, b = s.sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  s.vmap.assign(g.nv, -1);
  s.used.assign(h.nv, 0);
  for (int i = 0; i < g.arity(); ++i) {
    if (s.sg[g.iface[i]] != s.sh[h.iface[i]]) return std::nullopt;
    s.vmap[g.iface[i]] = h.iface[i];
    s.used[h.iface[i]] = 1;
  }
  for (const auto& e : h.edges) ++s.avail[edge_key(e.label, e.nbrs)];

  // BFS order over g's inner vertices
  auto gpos = g.source_positions();
  std::vector<std::vector<int>> inc(g.nv);
  for (size_t e = 0; e < g.edges.size(); ++e)
    for (int v : g.edges[e].nbrs) inc[v].push_back(static_cast<int>(e));
  std::vector<int> idx(g.nv, -1);
  std::deque<int> q;
  for (int src : g.iface) q.push_back(src);
  auto visit_from = [&](std::deque<int>& queue) {
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : inc[v])
        for (int w : g.edges[e].nbrs)
          if (gpos[w] < 0 && idx[w] < 0) {
            idx[w] = static_cast<int>(s.order.size());
            s.order.push_back(w);
            queue.push_back(w);
          }
    }
  };
  visit_from(q);
  for (int v = 0; v < g.nv; ++v)
    if (gpos[v] < 0 && idx[v] < 0) {
      idx[v] = static_cast<int>(s.order.size());
      s.order.push_back(v);
      q.push_back(v);
      visit_from(q);
    }
  s.closing.assign(s.order.size(), {});
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int last = -1;
    for (int v : g.edges[e].nbrs) last = std::max(last, idx[v]);
    if (last < 0)
      s.root_edges.push_back(static_cast<int>(e));
    else
      s.closing[last].push_back(static_cast<int>(e));
  }
  for (int e : s.root_edges)
    if (!s.consume(e)) return std::nullopt;
  auto hpos = h.source_positions();
  for (int w = 0; w < h.nv; ++w)
    if (hpos[w] < 0) s.h_inner.push_back(w);
  if (!s.rec(0)) return std::nullopt;

  Isomorphism iso;
  iso.vertex_map = s.vmap;
  std::unordered_map<std::string, std::vector<int>> pool;
  for (int e = static_cast<int>(h.edges.size()) - 1; e >= 0; --e)
    pool[edge_key(h.edges[e].label, h.edges[e].nbrs)].push_back(e);
  for (const auto& e : g.edges) {
    std::vector<int> img;
    for (int v : e.nbrs) img.push_back(s.vmap[v]);
    auto& lst = pool[edge_key(e.label, img)];
    iso.edge_map.push_back(lst.back());
    lst.pop_back();
  }
  return iso;
}

bool is_isomorphism(const Graph& g, const Graph& h, const Isomorphism& iso) {
  if (g.nv != h.nv || g.edges.size() != h.edges.size() || g.arity() != h.arity()) return false;
  if (iso.vertex_map.size() != static_cast<size_t>(g.nv) || iso.edge_map.size() != g.edges.size()) return false;
  std::vector<int> seen_v(h.nv, 0), seen_e(h.edges.size(), 0);
  for (int w : iso.vertex_map) {
    if (w < 0 || w >= h.nv || seen_v[w]) return false;
    seen_v[w] = 1;
  }
  for (int f : iso.edge_map) {
    if (f < 0 || f >= static_cast<int>(h.edges.size()) || seen_e[f]) return false;
    seen_e[f] = 1;
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& a = g.edges[e];
    const Edge& b = h.edges[iso.edge_map[e]];
    if (a.label != b.label || a.nbrs.size() != b.nbrs.size()) return false;
    for (size_t i = 0; i < a.nbrs.size(); ++i)
      if (iso.vertex_map[a.nbrs[i]] != b.nbrs[i]) return false;
  }
  for (int i = 0; i < g.arity(); ++i)
    if (iso.vertex_map[g.iface[i]] != h.iface[i]) return false;
  return true;
}

}  // namespace tw3
