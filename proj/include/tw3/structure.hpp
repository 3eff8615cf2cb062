// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "tw3/graph.hpp"

namespace tw3 {

struct Classification {
  bool empty = false;
  bool atomic = false;
  bool full = false;
  bool prime = false;
};

Classification classify(const Graph& g);

/// One graph per inner component, each carrying all sources of g.
std::vector<Graph> prime_components(const Graph& g);

/// g is isomorphic to graph_perm(p, lift^m(core)) with core full.
struct FullDecomposition {
  Perm p;
  int m = 0;
  Graph core;
};

FullDecomposition full_decomposition(const Graph& g);
/// Cores of the prime components.
std::vector<Graph> reduced_components(const Graph& g);

/// s(args; factor) is isomorphic to (G,x).
struct SeriesDecomposition {
  std::vector<Graph> args;
  Graph factor;
};

SeriesDecomposition series_decomposition(const Graph& g, int x);

/// Every inner path between vertices y and z visits the inner vertex x.
bool is_checkpoint(const Graph& g, int x, int y, int z);

/// Anchors of a full prime graph of arity at most 3.
std::vector<int> anchors(const Graph& g);
bool is_hard(const Graph& g);

struct Relations {
  bool glt = false;      ///< y is a checkpoint between x and some source
  bool diamond = false;  ///< (x,y) is a separation pair
};

/// Requires g full prime of arity 2 and x, y distinct inner vertices.
Relations relations(const Graph& g, int x, int y);

/// Minimal separation pairs (x < y) that are also forget pairs.  Requires g hard.
std::vector<std::pair<int, int>> minimal_separation_pairs(const Graph& g);

/// Requires treewidth at most 3.
bool is_easy(const Graph& g);

}  // namespace tw3
