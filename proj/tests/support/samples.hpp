// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Sample families for property tests: full prime graphs of treewidth at most
// 3 by arity, and hard graphs built from the FX and FD terms.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "gen.hpp"
#include "oracles.hpp"
#include "tw3/axioms.hpp"
#include "tw3/errors.hpp"
#include "tw3/structure.hpp"
#include "tw3/treewidth.hpp"

namespace tw3::testing {

/// Non-atomic full prime graphs of the given arity, taken from the reduced
/// components of random terms.  Stops after `want` samples or `attempts` terms.
inline std::vector<Graph> full_prime_samples(unsigned seed, int arity, int want, int attempts = 20000) {
  TermGen gen(seed);
  std::vector<Graph> out;
  for (int i = 0; i < attempts && static_cast<int>(out.size()) < want; ++i) {
    int k = std::min(4, arity + gen.pick(2));
    Graph g = eval(gen.term(k, 4 + gen.pick(16)));
    for (Graph& c : reduced_components(g)) {
      if (c.arity() != arity || classify(c).atomic) continue;
      out.push_back(std::move(c));
      if (static_cast<int>(out.size()) == want) break;
    }
  }
  return out;
}

/// Non-atomic full prime graphs of treewidth at most 3 drawn from random
/// hypergraphs rather than terms, which reach shapes terms rarely produce.
inline std::vector<Graph> full_prime_random_graphs(unsigned seed, int arity, int want, bool with_atomic = false,
                                                  int attempts = 400000) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < attempts && static_cast<int>(out.size()) < want; ++i) {
    Graph g = random_graph(rng, 8, 8, arity, std::max(3, arity));
    if (g.arity() != arity) continue;
    Classification c = classify(g);
    if (c.full && c.prime && (with_atomic || !c.atomic) && treewidth_at_most(g, 3)) out.push_back(std::move(g));
  }
  return out;
}

/// A full prime arity-2 term, or a bare letter when none turns up quickly.
inline Term full_prime_binary(TermGen& gen) {
  for (int tries = 0; tries < 50; ++tries) {
    Term u = gen.term(2, 3 + gen.pick(6));
    Classification c = classify(eval(u));
    if (c.full && c.prime) return u;
  }
  return mk_letter("u", 2);
}

struct HardSample {
  Graph graph;
  /// The pair forgotten last by each side of the axiom, as vertices of `graph`.
  std::pair<int, int> lhs_pair, rhs_pair;
};

/// FX or FD with some of its letters replaced by random full prime arity-2
/// terms.  Both sides of the instance forget a separation pair at the root.
inline HardSample hard_sample(unsigned seed) {
  TermGen gen(seed);
  AxiomInstance ax = seed % 2 ? axiom_fx() : axiom_fd();
  TermSubstitution sigma;
  // untouched letters are renamed away from the generator's alphabet
  for (const auto& [name, k] : term_alphabet(ax.lhs))
    sigma[name] = gen.pick(2) ? full_prime_binary(gen) : mk_letter("p" + name, k);
  Term lhs = term_substitute(sigma, ax.lhs), rhs = term_substitute(sigma, ax.rhs);
  // forget keeps vertex ids, so the inner graphs name the forgotten vertices
  Graph lin = eval(subterm_at(lhs, {0, 0})), rin = eval(subterm_at(rhs, {0, 0}));
  HardSample s{eval(lhs), {}, {}};
  auto iso = isomorphic(eval(rhs), s.graph);
  if (!iso) throw InternalError("axiom sides are not isomorphic");
  auto ordered = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  s.lhs_pair = ordered(lin.iface[2], lin.iface[3]);
  s.rhs_pair = ordered(iso->vertex_map[rin.iface[2]], iso->vertex_map[rin.iface[3]]);
  return s;
}

}  // namespace tw3::testing
