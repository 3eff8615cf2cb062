// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Slow, obviously-correct reference implementations for tests.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "tw3/graph.hpp"

namespace tw3::testing {

/// Adjacency of the footprint with the sources made a clique.
inline std::vector<std::vector<char>> primal_with_source_clique(const Graph& g) {
  std::vector<std::vector<char>> adj(g.nv, std::vector<char>(g.nv, 0));
  auto link = [&](int u, int v) {
    if (u != v) adj[u][v] = adj[v][u] = 1;
  };
  for (const Edge& e : g.edges)
    for (int u : e.nbrs)
      for (int v : e.nbrs) link(u, v);
  for (int u : g.iface)
    for (int v : g.iface) link(u, v);
  return adj;
}

/// Treewidth by the elimination-ordering recurrence over vertex subsets:
/// TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v)
/// is the set of vertices outside S + v reachable from v through S.
inline int oracle_treewidth(const Graph& g) {
  const int n = g.nv;
  if (n == 0) return 0;
  auto adj = primal_with_source_clique(g);
  auto q_size = [&](unsigned s, int v) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{v};
    seen[v] = 1;
    int count = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (!adj[u][w] || seen[w]) continue;
        seen[w] = 1;
        if (s >> w & 1u)
          stack.push_back(w);
        else
          ++count;
      }
    }
    return count;
  };
  std::vector<int> tw(1u << n, 0);
  tw[0] = -1;
  for (unsigned s = 1; s < (1u << n); ++s) {
    int best = n;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1u)) continue;
      unsigned rest = s & ~(1u << v);
      best = std::min(best, std::max(tw[rest], q_size(rest, v)));
    }
    tw[s] = best;
  }
  return std::max(tw[(1u << n) - 1], 0);
}

/// All simple inner paths between two vertices, enumerated explicitly over the
/// vertex/edge incidence structure.  `visit` gets the inner vertices of each.
inline void for_each_inner_path(const Graph& g, int from, int to,
                                const std::function<void(const std::vector<int>&)>& visit) {
  auto pos = g.source_positions();
  std::vector<char> on(g.nv, 0), used(g.edges.size(), 0);
  std::vector<int> inner;
  std::function<void(int)> go = [&](int v) {
    for (size_t e = 0; e < g.edges.size(); ++e) {
      const auto& nb = g.edges[e].nbrs;
      if (used[e] || std::find(nb.begin(), nb.end(), v) == nb.end()) continue;
      used[e] = 1;
      for (int w : nb) {
        if (on[w]) continue;
        if (w == to) {
          visit(inner);
          continue;
        }
        if (pos[w] >= 0) continue;
        on[w] = 1;
        inner.push_back(w);
        go(w);
        inner.pop_back();
        on[w] = 0;
      }
      used[e] = 0;
    }
  };
  on[from] = 1;
  go(from);
}

/// x is on every inner path between y and z.
inline bool oracle_checkpoint(const Graph& g, int x, int y, int z) {
  if (x == y || x == z) return true;
  if (y == z) return false;  // the empty path avoids x
  bool avoided = false;
  for_each_inner_path(g, y, z, [&](const std::vector<int>& in) {
    if (std::find(in.begin(), in.end(), x) == in.end()) avoided = true;
  });
  return !avoided;
}

/// Every inner path between the two sources meets x or y.
inline bool oracle_separates(const Graph& g, int x, int y) {
  bool avoided = false;
  for_each_inner_path(g, g.iface[0], g.iface[1], [&](const std::vector<int>& in) {
    if (std::find(in.begin(), in.end(), x) == in.end() && std::find(in.begin(), in.end(), y) == in.end())
      avoided = true;
  });
  return !avoided;
}

/// Random hypergraph with at most `max_vertices` vertices and edges of arity
/// 1 to `max_edge_arity`.  Labels encode arities so alphabets stay consistent.
inline Graph random_graph(std::mt19937& rng, int max_vertices, int max_edges, int max_arity = 3,
                          int max_edge_arity = 3) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Graph g;
  g.nv = pick(1, max_vertices);
  std::vector<int> order(g.nv);
  for (int v = 0; v < g.nv; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  int k = pick(0, std::min(max_arity, g.nv));
  g.iface.assign(order.begin(), order.begin() + k);
  int m = pick(0, max_edges);
  for (int i = 0; i < m; ++i) {
    int a = pick(1, std::min(max_edge_arity, g.nv));
    std::shuffle(order.begin(), order.end(), rng);
    Edge e{std::string(1, static_cast<char>('a' + a - 1)) + std::to_string(pick(0, 1)),
           std::vector<int>(order.begin(), order.begin() + a)};
    g.edges.push_back(std::move(e));
  }
  return g;
}

}  // namespace tw3::testing
