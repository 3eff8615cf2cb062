// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <functional>
#include <set>

#include "tw3/errors.hpp"
#include "tw3/graph.hpp"

namespace tw3 {

namespace {

void require_injective(const Graph& s) {
  std::set<std::string> seen;
  for (const auto& e : s.edges)
    if (!seen.insert(e.label).second)
      throw InputError("shape is not injectively labelled: letter '" + e.label + "' occurs twice");
}

// Tries one placement of S's inner vertices.  `phi` maps S inner vertices
// (in S order) to G inner vertices.
std::optional<Substitution> try_placement(const Graph& g, const Graph& s, const std::vector<int>& s_inner,
                                          const std::vector<int>& phi) {
  const int k = g.arity();
  Graph gx = g;
  for (int v : phi) gx.iface.push_back(v);
  // S vertex -> position in gx's interface
  std::vector<int> spos(s.nv, -1);
  for (int i = 0; i < k; ++i) spos[s.iface[i]] = i;
  for (size_t j = 0; j < s_inner.size(); ++j) spos[s_inner[j]] = k + static_cast<int>(j);

  auto gpos = gx.source_positions();
  std::vector<std::vector<InnerComponent>> assigned(s.edges.size());
  for (const auto& c : inner_components(gx)) {
    std::set<int> touched;
    for (int e : c.edges)
      for (int v : gx.edges[e].nbrs)
        if (gpos[v] >= 0) touched.insert(gpos[v]);
    int target = -1;
    for (size_t e = 0; e < s.edges.size() && target < 0; ++e) {
      std::set<int> slots;
      for (int v : s.edges[e].nbrs) slots.insert(spos[v]);
      if (std::includes(slots.begin(), slots.end(), touched.begin(), touched.end())) target = static_cast<int>(e);
    }
    if (target < 0) return std::nullopt;
    assigned[target].push_back(c);
  }

  Substitution sigma;
  for (size_t e = 0; e < s.edges.size(); ++e) {
    const auto& se = s.edges[e];
    Graph part = graph_top(static_cast<int>(se.nbrs.size()));
    // gx interface position -> part source vertex
    std::vector<int> slot_to_part(gx.arity(), -1);
    for (size_t i = 0; i < se.nbrs.size(); ++i) slot_to_part[spos[se.nbrs[i]]] = static_cast<int>(i);
    std::vector<int> to_part(gx.nv, -1);
    for (int v = 0; v < gx.nv; ++v)
      if (gpos[v] >= 0) to_part[v] = slot_to_part[gpos[v]];
    for (const auto& c : assigned[e]) {
      for (int v : c.vertices) to_part[v] = part.nv++;
      for (int ei : c.edges) {
        Edge ne{gx.edges[ei].label, {}};
        for (int v : gx.edges[ei].nbrs) ne.nbrs.push_back(to_part[v]);
        part.edges.push_back(std::move(ne));
      }
    }
    sigma[se.label] = std::move(part);
  }
  if (!isomorphic(substitute(s, sigma), g)) throw InternalError("shape reconstruction is not isomorphic");
  return sigma;
}

}  // namespace

std::optional<Substitution> has_shape_pinned(const Graph& g, const Graph& s, const std::vector<int>& pinned_s,
                                             const std::vector<int>& pinned_g) {
  s.validate();
  g.validate();
  require_injective(s);
  if (s.arity() != g.arity()) return std::nullopt;
  if (pinned_s.size() != pinned_g.size()) throw InputError("pin lists differ in length");
  std::vector<int> s_inner = s.inner_vertices();
  std::vector<int> g_inner = g.inner_vertices();
  if (s_inner.size() > g_inner.size()) return std::nullopt;
  auto spos = s.source_positions();
  auto gpos = g.source_positions();
  std::vector<int> pin(s.nv, -1);
  for (size_t i = 0; i < pinned_s.size(); ++i) {
    if (spos.at(pinned_s[i]) >= 0 || gpos.at(pinned_g[i]) >= 0) throw InputError("pinned vertices must be inner");
    pin[pinned_s[i]] = pinned_g[i];
  }
  std::vector<int> phi(s_inner.size(), -1);
  std::vector<char> used(g.nv, 0);
  std::optional<Substitution> found;
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == s_inner.size()) {
      found = try_placement(g, s, s_inner, phi);
      return found.has_value();
    }
    int sv = s_inner[i];
    for (int gv : g_inner) {
      if (used[gv] || (pin[sv] >= 0 && pin[sv] != gv)) continue;
      used[gv] = 1;
      phi[i] = gv;
      if (rec(i + 1)) return true;
      used[gv] = 0;
    }
    return false;
  };
  rec(0);
  return found;
}

std::optional<Substitution> has_shape(const Graph& g, const Graph& s) { return has_shape_pinned(g, s, {}, {}); }

}  // namespace tw3
