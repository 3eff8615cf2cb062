// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Text formats: graphs, derivations and tree decompositions as JSON, and
// DOT export.  All readers throw InputError on malformed input.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tw3/axioms.hpp"
#include "tw3/graph.hpp"
#include "tw3/treewidth.hpp"

namespace tw3 {

/// {"vertices": [...], "interface": [...], "edges": [{"id", "label", "neighbours"}]}
/// Vertex ids may be numbers or strings; they are renumbered in list order.
Graph graph_from_json(const std::string& text);
/// Vertices are written as 0..nv-1 and edges get ids 0..m-1.
std::string graph_to_json(const Graph& g);

/// {"start", "end", "steps": [{"axiom", "schema", "dir": "lr"|"rl", "pos", "subst"}]}
/// Terms and substitution images are written in the term syntax.
Derivation derivation_from_json(const std::string& text);
std::string derivation_to_json(const Derivation& d);

/// {"nodes": [0..n-1], "edges": [[i, j], ...], "bags": [[v, ...], ...]}
std::string tree_decomposition_to_json(const TreeDecomposition& t);
TreeDecomposition tree_decomposition_from_json(const std::string& text);

struct DotOptions {
  std::vector<int> highlight;                   ///< vertices to fill
  std::vector<std::pair<int, int>> pairs;       ///< vertex pairs, one colour each
  std::string name = "G";
};

/// Sources are numbered squares, binary edges arrows from the first to the
/// second neighbour, other edges boxes wired to their neighbours with port
/// numbers.
std::string graph_to_dot(const Graph& g, const DotOptions& opts = {});

std::string read_text_file(const std::string& path);

}  // namespace tw3
