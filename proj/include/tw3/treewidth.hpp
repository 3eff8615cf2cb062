// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tw3/graph.hpp"

namespace tw3 {

/// Bags indexed 0..n-1 and the tree edges between them.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> edges;

  int width() const;
};

/// Exact treewidth of G, where some bag must hold every source.  The empty
/// graph has treewidth 0.  Throws ResourceError beyond desk scale.
int exact_treewidth(const Graph& g);
bool treewidth_at_most(const Graph& g, int k);
std::optional<TreeDecomposition> find_tree_decomposition(const Graph& g, int k);
bool validate_tree_decomposition(const Graph& g, const TreeDecomposition& t, int k);

/// Same notions on a sourced simple graph (sources must share a bag).
int exact_treewidth(const SourcedSimpleGraph& s);

/// Inner x such that (G,x) has treewidth at most k.  Requires arity(G) <= k.
std::vector<int> forget_points(const Graph& g, int k = 3);
/// Pairs x < y of inner vertices with (G,x,y) of treewidth at most 3.
/// Requires arity(G) <= 2.
std::vector<std::pair<int, int>> forget_pairs(const Graph& g);

}  // namespace tw3
