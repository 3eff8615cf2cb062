// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include "tw3/term.hpp"

#include <algorithm>

#include "tw3/errors.hpp"

namespace tw3 {

namespace {
Term node(Kind k, int arity, Term l = nullptr, Term r = nullptr, Perm p = {}, std::string name = {}) {
  return std::make_shared<const TermNode>(TermNode{k, arity, std::move(l), std::move(r), std::move(p), std::move(name)});
}
}  // namespace

Term mk_par(const Term& t, const Term& u) {
  if (t->arity != u->arity)
    throw InputError("sort error: par of arities " + std::to_string(t->arity) + " and " + std::to_string(u->arity) +
                     " in par(" + print_term(t) + ", " + print_term(u) + ")");
  return node(Kind::Par, t->arity, t, u);
}

Term mk_lift(const Term& t) { return node(Kind::Lift, t->arity + 1, t); }

Term mk_forget(const Term& t) {
  if (t->arity == 0) throw InputError("sort error: forget of arity 0 in forget(" + print_term(t) + ")");
  return node(Kind::Forget, t->arity - 1, t);
}

Term mk_perm(const Perm& p, const Term& t) {
  if (!perm_valid(p)) throw InputError("sort error: " + perm_to_string(p) + " is not a permutation");
  if (static_cast<int>(p.size()) != t->arity)
    throw InputError("sort error: permutation of degree " + std::to_string(p.size()) + " on arity " +
                     std::to_string(t->arity) + " in perm" + perm_to_string(p) + "(" + print_term(t) + ")");
  return node(Kind::Perm, t->arity, t, nullptr, p);
}

Term mk_top(int k) {
  if (k < 0) throw InputError("sort error: negative arity");
  return node(Kind::Top, k);
}

Term mk_letter(const std::string& name, int k) {
  if (k < 0) throw InputError("sort error: negative arity for letter " + name);
  if (name.empty() || name == "top") throw InputError("invalid letter name '" + name + "'");
  return node(Kind::Letter, k, nullptr, nullptr, {}, name);
}

Term mk_lifts(int n, Term t) {
  for (int i = 0; i < n; ++i) t = mk_lift(t);
  return t;
}

Term mk_perm_opt(const Perm& p, const Term& t) { return perm_is_identity(p) ? t : mk_perm(p, t); }

bool term_equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->arity != b->arity) return false;
  switch (a->kind) {
    case Kind::Par:
      return term_equal(a->left, b->left) && term_equal(a->right, b->right);
    case Kind::Lift:
    case Kind::Forget:
      return term_equal(a->left, b->left);
    case Kind::Perm:
      return a->perm == b->perm && term_equal(a->left, b->left);
    case Kind::Top:
      return true;
    case Kind::Letter:
      return a->name == b->name;
  }
  return false;
}

int term_size(const Term& t) {
  int n = 1;
  if (t->left) n += term_size(t->left);
  if (t->right) n += term_size(t->right);
  return n;
}

namespace {
void measure_rec(const Term& t, int& max_ar, int& forgets) {
  max_ar = std::max(max_ar, t->arity);
  if (t->kind == Kind::Forget) ++forgets;
  if (t->left) measure_rec(t->left, max_ar, forgets);
  if (t->right) measure_rec(t->right, max_ar, forgets);
}
}  // namespace

Measure measure(const Term& t) {
  int max_ar = 0, forgets = 0;
  measure_rec(t, max_ar, forgets);
  return {t->arity, max_ar - 1, forgets};
}

int term_width(const Term& t) { return measure(t).width; }

Graph eval(const Term& t) {
  switch (t->kind) {
    case Kind::Par:
      return graph_par(eval(t->left), eval(t->right));
    case Kind::Lift:
      return graph_lift(eval(t->left));
    case Kind::Forget:
      return graph_forget(eval(t->left));
    case Kind::Perm:
      return graph_perm(t->perm, eval(t->left));
    case Kind::Top:
      return graph_top(t->arity);
    case Kind::Letter:
      return graph_atom(t->name, t->arity);
  }
  throw InternalError("unknown term kind");
}

Term term_substitute(const TermSubstitution& sigma, const Term& t) {
  switch (t->kind) {
    case Kind::Par: {
      Term l = term_substitute(sigma, t->left), r = term_substitute(sigma, t->right);
      return (l == t->left && r == t->right) ? t : mk_par(l, r);
    }
    case Kind::Lift: {
      Term c = term_substitute(sigma, t->left);
      return c == t->left ? t : mk_lift(c);
    }
    case Kind::Forget: {
      Term c = term_substitute(sigma, t->left);
      return c == t->left ? t : mk_forget(c);
    }
    case Kind::Perm: {
      Term c = term_substitute(sigma, t->left);
      return c == t->left ? t : mk_perm(t->perm, c);
    }
    case Kind::Top:
      return t;
    case Kind::Letter: {
      auto it = sigma.find(t->name);
      if (it == sigma.end()) return t;
      if (it->second->arity != t->arity)
        throw InputError("substitution maps letter " + t->name + ":" + std::to_string(t->arity) +
                         " to a term of arity " + std::to_string(it->second->arity));
      return it->second;
    }
  }
  throw InternalError("unknown term kind");
}

namespace {
void alphabet_rec(const Term& t, Alphabet& a) {
  if (t->kind == Kind::Letter) {
    auto [it, fresh] = a.emplace(t->name, t->arity);
    if (!fresh && it->second != t->arity)
      throw InputError("sort error: letter " + t->name + " used at arities " + std::to_string(it->second) + " and " +
                       std::to_string(t->arity));
  }
  if (t->left) alphabet_rec(t->left, a);
  if (t->right) alphabet_rec(t->right, a);
}

int count_letter(const Term& t, const std::string& name, int& arity) {
  int n = 0;
  if (t->kind == Kind::Letter && t->name == name) {
    arity = t->arity;
    ++n;
  }
  if (t->left) n += count_letter(t->left, name, arity);
  if (t->right) n += count_letter(t->right, name, arity);
  return n;
}
}  // namespace

Alphabet term_alphabet(const Term& t) {
  Alphabet a;
  alphabet_rec(t, a);
  return a;
}

Context make_context(const Term& body, const std::string& hole) {
  int ar = -1;
  int n = count_letter(body, hole, ar);
  if (n != 1) throw InputError("context must contain exactly one hole '" + hole + "', found " + std::to_string(n));
  return {body, hole, ar};
}

Term plug(const Context& c, const Term& t) {
  if (t->arity != c.hole_arity)
    throw InputError("plugging a term of arity " + std::to_string(t->arity) + " into a hole of arity " +
                     std::to_string(c.hole_arity));
  return term_substitute({{c.hole, t}}, c.body);
}

Term subterm_at(const Term& t, const Position& pos) {
  Term cur = t;
  for (size_t i = 0; i < pos.size(); ++i) {
    int c = pos[i];
    if (c == 0 && cur->left)
      cur = cur->left;
    else if (c == 1 && cur->right)
      cur = cur->right;
    else
      throw InputError("invalid position: no child " + std::to_string(c) + " at depth " + std::to_string(i));
  }
  return cur;
}

namespace {
Term rebuild(const Term& t, const Term& l, const Term& r) {
  switch (t->kind) {
    case Kind::Par:
      return mk_par(l, r);
    case Kind::Lift:
      return mk_lift(l);
    case Kind::Forget:
      return mk_forget(l);
    case Kind::Perm:
      return mk_perm(t->perm, l);
    default:
      throw InternalError("rebuild on a leaf");
  }
}

Term replace_rec(const Term& t, const Position& pos, size_t i, const Term& u) {
  if (i == pos.size()) {
    if (u->arity != t->arity)
      throw InputError("replacement changes arity " + std::to_string(t->arity) + " to " + std::to_string(u->arity));
    return u;
  }
  int c = pos[i];
  if (c == 0 && t->left) return rebuild(t, replace_rec(t->left, pos, i + 1, u), t->right);
  if (c == 1 && t->right) return rebuild(t, t->left, replace_rec(t->right, pos, i + 1, u));
  throw InputError("invalid position: no child " + std::to_string(c) + " at depth " + std::to_string(i));
}
}  // namespace

Term replace_at(const Term& t, const Position& pos, const Term& u) { return replace_rec(t, pos, 0, u); }

Term mk_series(const std::vector<Term>& args, const Term& factor) {
  const int k = static_cast<int>(args.size());
  if (factor->arity != k + 1)
    throw InputError("series factor must have arity " + std::to_string(k + 1) + ", got " +
                     std::to_string(factor->arity));
  Term acc = factor;
  for (int i = k; i >= 1; --i) {
    if (args[i - 1]->arity != k)
      throw InputError("series argument " + std::to_string(i) + " must have arity " + std::to_string(k));
    acc = mk_par(mk_perm(perm_swap(k + 1, i, k + 1), mk_lift(args[i - 1])), acc);
  }
  return acc;
}

Term mk_tss(const Term& x, const Term& y, const Term& z) {
  for (const Term* t : {&x, &y, &z})
    if ((*t)->arity != 3) throw InputError("tss arguments must be ternary");
  return mk_forget(mk_par(mk_perm(perm_swap(4, 1, 4), mk_lift(x)),
                          mk_par(mk_perm(perm_swap(4, 2, 4), mk_lift(y)), mk_perm(perm_swap(4, 3, 4), mk_lift(z)))));
}

Term mk_dot(const Term& u, const Term& v) { return mk_tss(u, v, mk_top(3)); }

Term mk_tc(const Term& u) {
  if (u->arity != 2) throw InputError("tc expects a binary argument");
  return mk_perm(perm_swap(2, 1, 2), u);
}

Term mk_star(const Term& u, const Term& v, const Term& w) {
  for (const Term* t : {&u, &v, &w})
    if ((*t)->arity != 2) throw InputError("star arguments must be binary");
  return mk_tss(mk_perm(perm_swap(3, 2, 1), mk_lift(v)), mk_perm(perm_swap(3, 1, 3), mk_lift(w)),
                mk_perm(perm_swap(3, 2, 3), mk_lift(u)));
}

}  // namespace tw3
