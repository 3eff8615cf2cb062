// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include "tw3/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "tw3/errors.hpp"

namespace tw3 {

namespace {

using Mask = std::uint64_t;
constexpr int kMaxVertices = 48;
constexpr long kStateBudget = 4'000'000;

struct Adjacency {
  int n = 0;
  std::vector<Mask> nb;
};

Adjacency adjacency(const SourcedSimpleGraph& s) {
  if (s.n > kMaxVertices)
    throw ResourceError("treewidth: " + std::to_string(s.n) + " vertices exceed the limit of " +
                        std::to_string(kMaxVertices));
  Adjacency a{s.n, std::vector<Mask>(s.n, 0)};
  for (auto [u, v] : s.edges) {
    a.nb[u] |= Mask{1} << v;
    a.nb[v] |= Mask{1} << u;
  }
  for (int u : s.sources)
    for (int v : s.sources)
      if (u != v) a.nb[u] |= Mask{1} << v;
  return a;
}

Adjacency adjacency(const Graph& g) { return adjacency(footprint(g)); }

// Vertices outside S and v that v reaches through paths inside S.
Mask higher_neighbours(const Adjacency& a, Mask s, int v) {
  Mask seen = 0, frontier = a.nb[v] & s;
  while (frontier) {
    seen |= frontier;
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= a.nb[std::countr_zero(f)];
    frontier = next & s & ~seen;
  }
  Mask out = a.nb[v];
  for (Mask f = seen; f; f &= f - 1) out |= a.nb[std::countr_zero(f)];
  return out & ~s & ~(Mask{1} << v);
}

// Depth-first search for an elimination order of width <= k.  S is the set of
// eliminated vertices; sets known to fail are memoised.
class OrderSearch {
 public:
  OrderSearch(const Adjacency& a, int k) : a_(a), k_(k), all_(a.n == 64 ? ~Mask{0} : (Mask{1} << a.n) - 1) {}

  bool run() { return rec(0); }
  const std::vector<int>& order() const { return order_; }

 private:
  bool rec(Mask s) {
    if (std::popcount(all_ & ~s) <= k_ + 1) return true;
    if (failed_.count(s)) return false;
    if (++states_ > kStateBudget) throw ResourceError("treewidth search exceeded its state budget");
    for (int v = 0; v < a_.n; ++v) {
      if (s >> v & 1) continue;
      if (std::popcount(higher_neighbours(a_, s, v)) > k_) continue;
      order_.push_back(v);
      if (rec(s | Mask{1} << v)) return true;
      order_.pop_back();
    }
    failed_.insert(s);
    return false;
  }

  const Adjacency& a_;
  int k_;
  Mask all_;
  long states_ = 0;
  std::unordered_set<Mask> failed_;
  std::vector<int> order_;
};

TreeDecomposition from_order(const Adjacency& a, const std::vector<int>& order) {
  TreeDecomposition t;
  Mask s = 0;
  std::vector<int> pos(a.n, -1);
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<Mask> higher;
  for (int v : order) {
    higher.push_back(higher_neighbours(a, s, v));
    s |= Mask{1} << v;
  }
  const int m = static_cast<int>(order.size());
  // bag i for order[i]; bag m holds the vertices never eliminated
  for (int i = 0; i < m; ++i) {
    std::vector<int> bag{order[i]};
    for (Mask f = higher[i]; f; f &= f - 1) bag.push_back(std::countr_zero(f));
    std::sort(bag.begin(), bag.end());
    t.bags.push_back(bag);
  }
  std::vector<int> rest;
  for (int v = 0; v < a.n; ++v)
    if (!(s >> v & 1)) rest.push_back(v);
  t.bags.push_back(rest);
  for (int i = 0; i < m; ++i) {
    int parent = m;
    for (Mask f = higher[i]; f; f &= f - 1) {
      int w = std::countr_zero(f);
      if (pos[w] >= 0 && pos[w] < parent) parent = pos[w];
    }
    t.edges.emplace_back(i, parent);
  }
  return t;
}

int lower_bound(const Graph& g) {
  int lb = std::max(g.arity() - 1, 0);
  for (const auto& e : g.edges) lb = std::max(lb, static_cast<int>(e.nbrs.size()) - 1);
  return lb;
}

int exact_on(const Adjacency& a, int lb) {
  if (a.n == 0) return 0;
  for (int k = lb;; ++k)
    if (OrderSearch(a, k).run()) return k;
}

}  // namespace

int TreeDecomposition::width() const {
  size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

int exact_treewidth(const Graph& g) { return exact_on(adjacency(g), lower_bound(g)); }

int exact_treewidth(const SourcedSimpleGraph& s) {
  s.validate();
  return exact_on(adjacency(s), std::max(static_cast<int>(s.sources.size()) - 1, 0));
}

bool treewidth_at_most(const Graph& g, int k) {
  if (k < 0) return false;
  if (lower_bound(g) > k) return false;
  return OrderSearch(adjacency(g), k).run();
}

std::optional<TreeDecomposition> find_tree_decomposition(const Graph& g, int k) {
  if (k < 0 || lower_bound(g) > k) return std::nullopt;
  Adjacency a = adjacency(g);
  OrderSearch search(a, k);
  if (!search.run()) return std::nullopt;
  return from_order(a, search.order());
}

bool validate_tree_decomposition(const Graph& g, const TreeDecomposition& t, int k) {
  const int nb = static_cast<int>(t.bags.size());
  if (nb == 0) return false;
  if (static_cast<int>(t.edges.size()) != nb - 1) return false;
  std::vector<std::vector<int>> tree(nb);
  for (auto [u, v] : t.edges) {
    if (u < 0 || v < 0 || u >= nb || v >= nb || u == v) return false;
    tree[u].push_back(v);
    tree[v].push_back(u);
  }
  std::vector<std::vector<char>> in(nb, std::vector<char>(g.nv, 0));
  for (int b = 0; b < nb; ++b) {
    if (static_cast<int>(t.bags[b].size()) > k + 1) return false;
    for (int v : t.bags[b]) {
      if (v < 0 || v >= g.nv || in[b][v]) return false;
      in[b][v] = 1;
    }
  }
  // connectivity of the bags holding `keep`, or of the whole tree when keep < 0
  auto connected = [&](int keep) {
    std::vector<int> members;
    for (int b = 0; b < nb; ++b)
      if (keep < 0 || in[b][keep]) members.push_back(b);
    if (members.empty()) return false;
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{members[0]};
    seen[members[0]] = 1;
    size_t count = 1;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int c : tree[b])
        if (!seen[c] && (keep < 0 || in[c][keep])) {
          seen[c] = 1;
          ++count;
          stack.push_back(c);
        }
    }
    return count == members.size();
  };
  if (!connected(-1)) return false;
  auto covers = [&](const std::vector<int>& vs) {
    for (int b = 0; b < nb; ++b)
      if (std::all_of(vs.begin(), vs.end(), [&](int v) { return in[b][v]; })) return true;
    return false;
  };
  if (!covers(g.iface)) return false;
  for (const auto& e : g.edges)
    if (!covers(e.nbrs)) return false;
  for (int v = 0; v < g.nv; ++v)
    if (!connected(v)) return false;
  return true;
}

std::vector<int> forget_points(const Graph& g, int k) {
  if (g.arity() > k)
    throw InputError("forget points need arity at most " + std::to_string(k) + ", got " + std::to_string(g.arity()));
  std::vector<int> out;
  for (int x : g.inner_vertices())
    if (treewidth_at_most(append_source(g, x), k)) out.push_back(x);
  return out;
}

std::vector<std::pair<int, int>> forget_pairs(const Graph& g) {
  if (g.arity() > 2) throw InputError("forget pairs need arity at most 2, got " + std::to_string(g.arity()));
  std::vector<std::pair<int, int>> out;
  auto inner = g.inner_vertices();
  for (size_t i = 0; i < inner.size(); ++i)
    for (size_t j = i + 1; j < inner.size(); ++j)
      if (treewidth_at_most(append_source(append_source(g, inner[i]), inner[j]), 3))
        out.emplace_back(inner[i], inner[j]);
  return out;
}

}  // namespace tw3
