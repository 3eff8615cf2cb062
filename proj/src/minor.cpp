// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <functional>

#include "tw3/errors.hpp"
#include "tw3/graph.hpp"

namespace tw3 {

namespace {

// Fixed roots: every vertex gets a branch-set label in [-1, k); roots are
// pre-labelled, other sources are excluded.
bool search_with_roots(const SourcedSimpleGraph& s, const std::vector<int>& roots) {
  const int k = static_cast<int>(roots.size());
  std::vector<std::vector<int>> adj(s.n);
  for (auto [u, v] : s.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> label(s.n, -1);
  std::vector<char> is_src(s.n, 0);
  for (int x : s.sources) is_src[x] = 1;
  for (int i = 0; i < k; ++i) label[roots[i]] = i;

  // only vertices reachable from a root avoiding excluded sources matter
  std::vector<char> reach(s.n, 0);
  std::vector<int> stack(roots.begin(), roots.end());
  for (int r : roots) reach[r] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!reach[w] && !is_src[w]) {
        reach[w] = 1;
        stack.push_back(w);
      }
  }
  std::vector<int> free;
  for (int v = 0; v < s.n; ++v)
    if (reach[v] && !is_src[v]) free.push_back(v);
  if (std::pow(k + 1.0, static_cast<double>(free.size())) > 2e9)
    throw ResourceError("sourced-minor search too large (" + std::to_string(free.size()) + " free vertices)");

  auto check = [&]() {
    for (int i = 0; i < k; ++i) {
      // connectivity of branch set i
      std::vector<char> seen(s.n, 0);
      std::vector<int> st{roots[i]};
      seen[roots[i]] = 1;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[v])
          if (!seen[w] && label[w] == i) {
            seen[w] = 1;
            st.push_back(w);
          }
      }
      for (int v = 0; v < s.n; ++v)
        if (label[v] == i && !seen[v]) return false;
    }
    std::vector<std::vector<char>> touch(k, std::vector<char>(k, 0));
    for (auto [u, v] : s.edges)
      if (label[u] >= 0 && label[v] >= 0 && label[u] != label[v]) touch[label[u]][label[v]] = touch[label[v]][label[u]] = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (!touch[i][j]) return false;
    return true;
  };
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == free.size()) return check();
    for (int l = -1; l < k; ++l) {
      label[free[i]] = l;
      if (rec(i + 1)) return true;
    }
    label[free[i]] = -1;
    return false;
  };
  return rec(0);
}

}  // namespace

bool has_clique_sourced_minor(const SourcedSimpleGraph& s, int k) {
  s.validate();
  if (k < 0 || k > 5) throw InputError("clique minor test supports k <= 5");
  if (static_cast<int>(s.sources.size()) < k) return false;
  // choose which k sources survive
  std::vector<int> pick;
  std::function<bool(size_t)> choose = [&](size_t from) -> bool {
    if (static_cast<int>(pick.size()) == k) return search_with_roots(s, pick);
    for (size_t i = from; i < s.sources.size(); ++i) {
      pick.push_back(s.sources[i]);
      if (choose(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return choose(0);
}

}  // namespace tw3
