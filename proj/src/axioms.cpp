// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include "tw3/axioms.hpp"

#include <unordered_map>

#include "tw3/errors.hpp"
#include "tw3/structure.hpp"
#include "tw3/treewidth.hpp"

namespace tw3 {

namespace {

constexpr int kMaxArity = 4;

Term L(const std::string& name, int k) { return mk_letter(name, k); }

// Swap of the last two positions at degree k.
Perm last_swap(int k) { return perm_swap(k, k - 1, k); }

std::vector<AxiomInstance> build_all() {
  std::vector<AxiomInstance> out;
  auto add = [&](std::string key, std::string schema, Term l, Term r) {
    out.push_back({std::move(key), std::move(schema), std::move(l), std::move(r)});
  };
  for (int k = 0; k <= kMaxArity; ++k) {
    Term a = L("a", k), b = L("b", k), c = L("c", k);
    add(axiom_key("A1a", k), "A1a", mk_par(a, mk_par(b, c)), mk_par(mk_par(a, b), c));
    add(axiom_key("A1b", k), "A1b", mk_par(a, b), mk_par(b, a));
    add(axiom_key("A1c", k), "A1c", mk_par(a, mk_top(k)), a);
  }
  for (int k = 0; k <= kMaxArity; ++k) {
    Term a = L("a", k);
    auto all = perm_all(k);
    for (const Perm& p : all)
      for (const Perm& q : all)
        add(axiom_key("A2a", k, {p, q}), "A2a", mk_perm(p, mk_perm(q, a)), mk_perm(perm_compose(p, q), a));
  }
  for (int k = 0; k <= kMaxArity; ++k)
    add(axiom_key("A2b", k), "A2b", mk_perm(perm_identity(k), L("a", k)), L("a", k));
  for (int k = 0; k <= kMaxArity; ++k) {
    Term a = L("a", k), b = L("b", k);
    for (const Perm& p : perm_all(k))
      add(axiom_key("A3a", k, {p}), "A3a", mk_perm(p, mk_par(a, b)), mk_par(mk_perm(p, a), mk_perm(p, b)));
  }
  for (int k = 0; k <= kMaxArity; ++k)
    for (const Perm& p : perm_all(k)) add(axiom_key("A3b", k, {p}), "A3b", mk_perm(p, mk_top(k)), mk_top(k));
  for (int k = 0; k < kMaxArity; ++k) {
    Term a = L("a", k), b = L("b", k);
    add(axiom_key("A4a", k), "A4a", mk_lift(mk_par(a, b)), mk_par(mk_lift(a), mk_lift(b)));
  }
  for (int k = 0; k < kMaxArity; ++k) add(axiom_key("A4b", k), "A4b", mk_lift(mk_top(k)), mk_top(k + 1));
  for (int k = 0; k < kMaxArity; ++k) {
    Term a = L("a", k + 1);
    for (const Perm& p : perm_all(k))
      add(axiom_key("A5a", k + 1, {p}), "A5a", mk_perm(p, mk_forget(a)), mk_forget(mk_perm(perm_extend(p), a)));
  }
  for (int k = 0; k < kMaxArity; ++k) {
    Term a = L("a", k);
    for (const Perm& p : perm_all(k))
      add(axiom_key("A5b", k, {p}), "A5b", mk_lift(mk_perm(p, a)), mk_perm(perm_extend(p), mk_lift(a)));
  }
  for (int k = 1; k < kMaxArity; ++k) {
    Term a = L("a", k);
    add(axiom_key("A6a", k), "A6a", mk_lift(mk_forget(a)), mk_forget(mk_perm(last_swap(k + 1), mk_lift(a))));
  }
  for (int k = 0; k + 2 <= kMaxArity; ++k) {
    Term a = L("a", k);
    add(axiom_key("A6b", k), "A6b", mk_lift(mk_lift(a)), mk_perm(last_swap(k + 2), mk_lift(mk_lift(a))));
  }
  for (int k = 1; k <= kMaxArity; ++k) {
    Term a = L("a", k), b = L("b", k - 1);
    add(axiom_key("A7", k), "A7", mk_par(mk_forget(a), b), mk_forget(mk_par(a, mk_lift(b))));
  }
  for (int k = 2; k <= kMaxArity; ++k) {
    Term a = L("a", k);
    std::string schema = "FS" + std::to_string(k - 2);
    add(axiom_key(schema, k), schema, mk_forget(mk_forget(a)), mk_forget(mk_forget(mk_perm(last_swap(k), a))));
  }
  out.push_back(axiom_fk());
  out.push_back(axiom_fx());
  out.push_back(axiom_fd());
  return out;
}

Term par3(const Term& x, const Term& y, const Term& z) { return mk_par(x, mk_par(y, z)); }
Term sw4(int i, int j, const Term& t) { return mk_perm(perm_swap(4, i, j), t); }
Term b2(const std::string& n) { return mk_letter(n, 2); }
Term tc(const std::string& n) { return mk_tc(b2(n)); }

}  // namespace

std::string axiom_key(const std::string& schema, int n, const std::vector<Perm>& perms) {
  std::string k = schema + "/" + std::to_string(n);
  for (const Perm& p : perms) k += "/" + perm_to_string(p);
  return k;
}

AxiomInstance axiom_fk() {
  Term a = L("a", 3), b = L("b", 3), c = L("c", 3);
  return {"FK", "FK", mk_dot(a, mk_dot(b, c)), mk_dot(mk_dot(a, b), c)};
}

AxiomInstance axiom_fx() {
  Term lhs = mk_forget(mk_forget(par3(sw4(2, 3, mk_lifts(2, b2("a"))), sw4(4, 2, mk_lifts(2, b2("b"))),
                                      sw4(1, 4, mk_lift(mk_par(mk_star(b2("d"), tc("e"), b2("c")),
                                                               mk_star(b2("f"), tc("h"), b2("g"))))))));
  Term rhs = mk_forget(mk_forget(par3(sw4(1, 3, mk_lifts(2, b2("e"))), sw4(1, 4, mk_lifts(2, b2("h"))),
                                      sw4(2, 4, mk_lift(mk_par(mk_star(b2("a"), tc("g"), tc("c")),
                                                               mk_star(b2("b"), tc("f"), tc("d"))))))));
  return {"FX", "FX", lhs, rhs};
}

AxiomInstance axiom_fd() {
  Term lhs = mk_forget(mk_forget(par3(
      sw4(2, 3, mk_lifts(2, b2("a"))), sw4(4, 2, mk_lifts(2, b2("b"))),
      sw4(1, 4, mk_lift(mk_tss(mk_star(tc("i"), tc("h"), b2("c")), mk_star(b2("f"), tc("g"), b2("e")),
                               mk_star(b2("d"), tc("k"), tc("j"))))))));
  Term rhs = mk_forget(mk_forget(par3(
      sw4(1, 3, mk_lifts(2, b2("k"))), sw4(1, 4, mk_lifts(2, b2("h"))),
      sw4(2, 4, mk_lift(mk_tss(mk_star(b2("g"), b2("i"), b2("j")), mk_star(b2("b"), tc("f"), tc("d")),
                               mk_star(b2("a"), tc("c"), tc("e"))))))));
  return {"FD", "FD", lhs, rhs};
}

const std::vector<AxiomInstance>& enumerate_axioms() {
  static const std::vector<AxiomInstance> all = build_all();
  return all;
}

const AxiomInstance* find_axiom(const std::string& key) {
  static const std::unordered_map<std::string, size_t> index = [] {
    std::unordered_map<std::string, size_t> m;
    const auto& all = enumerate_axioms();
    for (size_t i = 0; i < all.size(); ++i) m.emplace(all[i].key, i);
    return m;
  }();
  auto it = index.find(key);
  return it == index.end() ? nullptr : &enumerate_axioms()[it->second];
}

bool check_soundness(const AxiomInstance& ax) {
  return ax.lhs->arity == ax.rhs->arity && isomorphic(eval(ax.lhs), eval(ax.rhs)).has_value();
}

Term apply_step(const Term& t, const DerivationStep& step) {
  const AxiomInstance* ax = find_axiom(step.axiom);
  if (!ax) throw InputError("unknown axiom instance '" + step.axiom + "'");
  const bool lr = step.dir == Direction::LeftToRight;
  const Term& from = lr ? ax->lhs : ax->rhs;
  const Term& to = lr ? ax->rhs : ax->lhs;
  Alphabet letters = term_alphabet(ax->lhs);
  for (const auto& [name, k] : term_alphabet(ax->rhs)) letters.emplace(name, k);
  for (const auto& [name, k] : letters) {
    auto it = step.subst.find(name);
    if (it == step.subst.end()) throw InputError("substitution misses letter '" + name + "' of " + step.axiom);
    if (it->second->arity != k)
      throw InputError("substitution gives letter '" + name + "' arity " + std::to_string(it->second->arity) +
                       ", expected " + std::to_string(k));
  }
  for (const auto& [name, u] : step.subst)
    if (!letters.count(name)) throw InputError("substitution binds '" + name + "', unused by " + step.axiom);
  Term redex = term_substitute(step.subst, from);
  Term sub = subterm_at(t, step.pos);
  if (!term_equal(sub, redex))
    throw InputError("step " + step.axiom + " does not match: expected " + print_term(redex) + ", found " +
                     print_term(sub));
  return replace_at(t, step.pos, term_substitute(step.subst, to));
}

DerivationStep reverse_step(const DerivationStep& step) {
  DerivationStep r = step;
  r.dir = step.dir == Direction::LeftToRight ? Direction::RightToLeft : Direction::LeftToRight;
  return r;
}

DerivationCheck validate_derivation(const Derivation& d) {
  DerivationCheck c;
  Term cur = d.start;
  for (size_t i = 0; i < d.steps.size(); ++i) {
    try {
      cur = apply_step(cur, d.steps[i]);
    } catch (const InputError& e) {
      return {false, static_cast<int>(i), e.what()};
    }
  }
  if (!term_equal(cur, d.end))
    return {false, static_cast<int>(d.steps.size()), "derivation ends at " + print_term(cur) + ", not at " +
                                                         print_term(d.end)};
  return c;
}

bool equivalent(const Term& t, const Term& u) {
  if (t->arity != u->arity) return false;
  Graph g = eval(t), h = eval(u);
  for (const Graph* x : {&g, &h})
    if (!treewidth_at_most(*x, 3)) throw InputError("equivalence is decided only for graphs of treewidth at most 3");
  return isomorphic(g, h).has_value();
}

namespace {

Term parse_full_prime(const Graph& g);

Term parse_rec(const Graph& g) {
  Term acc;
  for (const Graph& c : prime_components(g)) {
    FullDecomposition fd = full_decomposition(c);
    Term part = mk_perm_opt(fd.p, mk_lifts(fd.m, parse_full_prime(fd.core)));
    acc = acc ? mk_par(acc, part) : part;
  }
  return acc ? acc : mk_top(g.arity());
}

Term parse_full_prime(const Graph& g) {
  if (classify(g).atomic) {
    const Edge& e = g.edges[0];
    auto pos = g.source_positions();
    Perm q;
    for (int v : e.nbrs) q.push_back(pos[v] + 1);
    return mk_perm_opt(q, mk_letter(e.label, static_cast<int>(e.nbrs.size())));
  }
  auto fps = forget_points(g, 3);
  if (fps.empty()) throw InternalError("full prime graph of treewidth at most 3 without forget point");
  return mk_forget(parse_rec(append_source(g, fps[0])));
}

}  // namespace

Term parse_graph(const Graph& g) {
  g.validate();
  g.alphabet();
  int tw = exact_treewidth(g);
  if (tw > 3) throw InputError("graph has treewidth " + std::to_string(tw) + ", above 3");
  return parse_rec(g);
}

}  // namespace tw3
