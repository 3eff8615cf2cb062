// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tw3/perm.hpp"

namespace tw3 {

/// Letter name -> arity.
using Alphabet = std::map<std::string, int>;

struct Edge {
  std::string label;
  std::vector<int> nbrs;  ///< ordered, duplicate-free; its length is the edge arity
};

/// Ordered labelled hypergraph with an interface.  Vertices are 0..nv-1,
/// edges are indexed by position.  Values are never mutated after a public
/// operation returns them.
struct Graph {
  int nv = 0;
  std::vector<Edge> edges;
  std::vector<int> iface;

  int arity() const { return static_cast<int>(iface.size()); }
  /// Number of elements (vertices plus edges).
  int size() const { return nv + static_cast<int>(edges.size()); }
  /// -1 for inner vertices, otherwise the 0-based interface position.
  std::vector<int> source_positions() const;
  std::vector<int> inner_vertices() const;
  std::vector<int> degrees() const;
  /// Throws InputError unless all structural invariants hold.
  void validate() const;
  /// Letters used, with their arities; throws if a letter is used at two arities.
  Alphabet alphabet() const;
};

Graph graph_top(int k);
Graph graph_atom(const std::string& letter, int k);
Graph graph_par(const Graph& g, const Graph& h);
Graph graph_forget(const Graph& g);
Graph graph_lift(const Graph& g);
Graph graph_perm(const Perm& p, const Graph& g);
/// (G,x): append inner vertex x to the interface.
Graph append_source(const Graph& g, int x);

struct Isomorphism {
  std::vector<int> vertex_map;  ///< G vertex -> H vertex
  std::vector<int> edge_map;    ///< G edge -> H edge
};

std::optional<Isomorphism> isomorphic(const Graph& g, const Graph& h);
bool is_isomorphism(const Graph& g, const Graph& h, const Isomorphism& iso);

using Substitution = std::map<std::string, Graph>;

Graph substitute(const Graph& g, const Substitution& sigma);

/// Inner elements grouped by inner-path connectivity.
struct InnerComponent {
  std::vector<int> vertices;  ///< inner vertices, increasing
  std::vector<int> edges;     ///< edge indices, increasing
};

std::vector<InnerComponent> inner_components(const Graph& g);

/// Subgraph made of the sources and the given inner elements.  Sources keep
/// their interface order and come first; inner vertices follow in increasing
/// order.  If `vmap` is given it receives new-vertex -> old-vertex.
Graph subgraph(const Graph& g, const InnerComponent& c, std::vector<int>* vmap = nullptr);

/// Simple graph with a set of sources.
struct SourcedSimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  ///< u < v, sorted, no duplicates
  std::vector<int> sources;                ///< sorted

  void validate() const;
};

SourcedSimpleGraph footprint(const Graph& g);
/// Complete graph on k vertices, all of them sources.
SourcedSimpleGraph clique_of_sources(int k);

/// K_k as a sourced minor (k <= 5): k disjoint connected branch sets, one
/// source each, pairwise adjacent.  Two sources are never merged.
bool has_clique_sourced_minor(const SourcedSimpleGraph& s, int k);

/// G has shape S: returns sigma with substitute(S, sigma) isomorphic to G.
/// S must be injectively labelled.  Orientation of S's edges is ignored.
std::optional<Substitution> has_shape(const Graph& g, const Graph& s);
/// Same, with S's inner vertices listed in `pinned_s` forced onto the G
/// vertices `pinned_g`.
std::optional<Substitution> has_shape_pinned(const Graph& g, const Graph& s, const std::vector<int>& pinned_s,
                                             const std::vector<int>& pinned_g);

}  // namespace tw3
