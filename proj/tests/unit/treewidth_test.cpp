// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <random>

#include "../support/gen.hpp"
#include "../support/oracles.hpp"
#include "doctest.h"
#include "tw3/errors.hpp"
#include "tw3/term.hpp"
#include "tw3/treewidth.hpp"

using namespace tw3;

namespace {

Graph clique(int n) {
  Graph g;
  g.nv = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.push_back({"e", {u, v}});
  return g;
}

}  // namespace

TEST_SUITE("treewidth") {
  TEST_CASE("small fixed graphs") {
    CHECK(exact_treewidth(graph_top(0)) == 0);
    CHECK(exact_treewidth(clique(4)) == 3);
    CHECK(exact_treewidth(clique(5)) == 4);
    CHECK(exact_treewidth(graph_atom("h", 4)) == 3);
    CHECK(exact_treewidth(graph_top(4)) == 3);
    Graph path;
    path.nv = 4;
    path.edges = {{"e", {0, 1}}, {"e", {1, 2}}, {"e", {2, 3}}};
    CHECK(exact_treewidth(path) == 1);
    path.iface = {0, 3};
    CHECK(exact_treewidth(path) == 2);
    CHECK(treewidth_at_most(clique(5), 4));
    CHECK_FALSE(treewidth_at_most(clique(5), 3));
  }

  TEST_CASE("agrees with the elimination-ordering oracle") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 300; ++i) {
      Graph g = testing::random_graph(rng, 9, 12, 3, 4);
      INFO("graph " << i);
      CHECK(exact_treewidth(g) == testing::oracle_treewidth(g));
    }
  }

  TEST_CASE("decompositions are valid and optimal") {
    std::mt19937 rng(99);
    for (int i = 0; i < 150; ++i) {
      Graph g = testing::random_graph(rng, 8, 10, 3, 3);
      int w = exact_treewidth(g);
      auto td = find_tree_decomposition(g, w);
      REQUIRE(td);
      CHECK(td->width() <= w);
      CHECK(validate_tree_decomposition(g, *td, w));
      if (w > 0) CHECK_FALSE(find_tree_decomposition(g, w - 1));
    }
  }

  TEST_CASE("validation rejects broken decompositions") {
    Graph g = clique(4);
    auto td = find_tree_decomposition(g, 3);
    REQUIRE(td);
    CHECK_FALSE(validate_tree_decomposition(g, *td, 2));
    TreeDecomposition split{{{0, 1, 2}, {1, 2, 3}}, {{0, 1}}};
    CHECK_FALSE(validate_tree_decomposition(g, split, 3));
    TreeDecomposition gap{{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}}};
    Graph tri = clique(3);
    CHECK_FALSE(validate_tree_decomposition(tri, gap, 2));
    TreeDecomposition cyc{{{0, 1, 2}, {0, 1, 2}}, {{0, 1}, {1, 0}}};
    CHECK_FALSE(validate_tree_decomposition(tri, cyc, 2));
  }

  TEST_CASE("sourced simple graphs") {
    SourcedSimpleGraph s{4, {{0, 2}, {1, 2}, {2, 3}}, {0, 1}};
    CHECK(exact_treewidth(s) == 2);
    s.sources = {};
    CHECK(exact_treewidth(s) == 1);
  }

  TEST_CASE("forget points agree with the oracle") {
    std::mt19937 rng(31);
    for (int i = 0; i < 150; ++i) {
      Graph g = testing::random_graph(rng, 7, 8, 3, 3);
      if (g.arity() > 3) continue;
      auto pts = forget_points(g);
      for (int x : g.inner_vertices()) {
        bool want = testing::oracle_treewidth(append_source(g, x)) <= 3;
        CHECK((std::find(pts.begin(), pts.end(), x) != pts.end()) == want);
      }
    }
    CHECK_THROWS_AS(forget_points(graph_top(4), 3), InputError);
  }

  TEST_CASE("forget pairs agree with the oracle") {
    std::mt19937 rng(32);
    for (int i = 0; i < 100; ++i) {
      Graph g = testing::random_graph(rng, 7, 9, 2, 3);
      auto pairs = forget_pairs(g);
      auto in = g.inner_vertices();
      for (int x : in)
        for (int y : in) {
          if (x >= y) continue;
          bool want = testing::oracle_treewidth(append_source(append_source(g, x), y)) <= 3;
          bool got = std::find(pairs.begin(), pairs.end(), std::make_pair(x, y)) != pairs.end();
          CHECK(got == want);
        }
    }
    CHECK(forget_pairs(eval(parse_term("forget(forget(h:4))"))).size() == 1);
  }

  TEST_CASE("random terms of width 3 have treewidth at most 3") {
    testing::TermGen gen(5);
    for (int i = 0; i < 300; ++i) {
      Term t = gen.term(gen.pick(4), 12);
      CHECK(exact_treewidth(eval(t)) <= std::max(0, term_width(t)));
    }
  }

  TEST_CASE("graphs beyond the vertex limit are refused") {
    Graph big;
    big.nv = 60;
    CHECK_THROWS_AS(exact_treewidth(big), ResourceError);
  }
}
