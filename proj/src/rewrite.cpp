// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Normal forms and the derivations reaching them.
//
//   NF    ::= top:k | [p] lift^m Chain
//   Chain ::= Q | par(Q, Chain)          parts sorted by their printed form
//   Q     ::= [q] lift^j F
//   F     ::= a | perm[q](a) | forget(top:1) | forget(Chain)
//
// Every part of a forgotten chain touches its last source.
//
// p and q are omitted when they are the identity and are otherwise canonical:
// the non-lifted positions go, in order, to the non-isolated sources, and the
// lifted positions go, in order, to the isolated ones.  The parts of a chain
// have no isolated source in common, so an NF mirrors the prime components of
// its graph, each one reduced to a full prime core.
#include <algorithm>
#include <functional>

#include "tw3/axioms.hpp"
#include "tw3/errors.hpp"
#include "tw3/structure.hpp"

namespace tw3 {

namespace {

constexpr Direction kLR = Direction::LeftToRight;
constexpr Direction kRL = Direction::RightToLeft;

Position child(Position p, int c) {
  p.push_back(c);
  return p;
}

Position down(Position p, int n) {
  for (int i = 0; i < n; ++i) p.push_back(0);
  return p;
}

Perm last_swap(int k) { return perm_swap(k, k - 1, k); }

Perm restrict_last(const Perm& p) {
  if (p.empty() || p.back() != static_cast<int>(p.size())) throw InternalError("permutation moves its last point");
  return Perm(p.begin(), p.end() - 1);
}

// Canonical permutation of degree k whose lifted block lands on `iso`.
Perm canonical_perm(int k, const std::vector<int>& iso) {
  std::vector<char> is(k + 1, 0);
  for (int i : iso) is[i] = 1;
  Perm p;
  for (int i = 1; i <= k; ++i)
    if (!is[i]) p.push_back(i);
  for (int i = 1; i <= k; ++i)
    if (is[i]) p.push_back(i);
  return p;
}

// Image of the top m positions under p (identity when p is empty).
std::vector<int> image_of_lifts(const Perm& p, int k, int m) {
  std::vector<int> out;
  for (int i = k - m + 1; i <= k; ++i) out.push_back(p.empty() ? i : p[i - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

bool matches(const Term& pat, const Term& t, TermSubstitution& s) {
  if (pat->kind == Kind::Letter) {
    if (pat->arity != t->arity) return false;
    auto [it, fresh] = s.emplace(pat->name, t);
    return fresh || term_equal(it->second, t);
  }
  if (pat->kind != t->kind || pat->arity != t->arity) return false;
  switch (pat->kind) {
    case Kind::Par:
      return matches(pat->left, t->left, s) && matches(pat->right, t->right, s);
    case Kind::Perm:
      return pat->perm == t->perm && matches(pat->left, t->left, s);
    case Kind::Lift:
    case Kind::Forget:
      return matches(pat->left, t->left, s);
    default:
      return true;
  }
}

struct QView {
  Perm q;  ///< empty when absent
  int j = 0;
  Term f;
};

QView view_q(const Term& t) {
  QView v;
  Term cur = t;
  if (cur->kind == Kind::Perm && cur->left->kind == Kind::Lift) {
    v.q = cur->perm;
    cur = cur->left;
  }
  while (cur->kind == Kind::Lift) {
    ++v.j;
    cur = cur->left;
  }
  v.f = cur;
  return v;
}

std::vector<int> isolated_of(const QView& v, int k) { return image_of_lifts(v.q, k, v.j); }

Position inner_of(const QView& v, const Position& p) { return down(v.q.empty() ? p : child(p, 0), v.j); }

std::vector<Term> chain_parts(Term t) {
  std::vector<Term> out;
  while (t->kind == Kind::Par) {
    out.push_back(t->left);
    t = t->right;
  }
  out.push_back(t);
  return out;
}

std::vector<int> common_isolated(const std::vector<Term>& parts) {
  const int k = parts[0]->arity;
  std::vector<int> acc;
  for (size_t i = 0; i < parts.size(); ++i) {
    auto iso = isolated_of(view_q(parts[i]), k);
    if (i == 0) {
      acc = iso;
    } else {
      std::vector<int> both;
      std::set_intersection(acc.begin(), acc.end(), iso.begin(), iso.end(), std::back_inserter(both));
      acc = both;
    }
  }
  return acc;
}

bool is_chain(const Term& t, bool allow_common);

bool is_f(const Term& t) {
  switch (t->kind) {
    case Kind::Letter:
      return true;
    case Kind::Perm:
      return t->left->kind == Kind::Letter && !perm_is_identity(t->perm);
    case Kind::Forget:
      if (t->left->kind == Kind::Top) return t->left->arity == 1;
      if (!is_chain(t->left, false)) return false;
      for (const Term& q : chain_parts(t->left)) {
        auto iso = isolated_of(view_q(q), q->arity);
        if (!iso.empty() && iso.back() == q->arity) return false;
      }
      return true;
    default:
      return false;
  }
}

bool is_q(const Term& t) {
  QView v = view_q(t);
  if (t->kind == Kind::Par || !is_f(v.f)) return false;
  if (v.q.empty()) return true;
  return !perm_is_identity(v.q) && v.q == canonical_perm(t->arity, isolated_of(v, t->arity));
}

bool is_chain(const Term& t, bool allow_common) {
  auto parts = chain_parts(t);
  for (const Term& q : parts)
    if (!is_q(q)) return false;
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (print_term(parts[i]) > print_term(parts[i + 1])) return false;
  return allow_common || common_isolated(parts).empty();
}

// Records every step it applies to the current term.
class Trace {
 public:
  explicit Trace(Term t) : cur_(std::move(t)) {}

  const Term& term() const { return cur_; }
  const std::vector<DerivationStep>& steps() const { return steps_; }
  Term at(const Position& p) const { return subterm_at(cur_, p); }

  void record(DerivationStep st) {
    try {
      cur_ = apply_step(cur_, st);
    } catch (const InputError& e) {
      throw InternalError(std::string("rewriter built an invalid step: ") + e.what());
    }
    steps_.push_back(std::move(st));
  }

  void rw(const std::string& key, Direction d, const Position& p) {
    const AxiomInstance* ax = find_axiom(key);
    if (!ax) throw InternalError("rewriter asked for unknown axiom " + key);
    TermSubstitution s;
    Term t = at(p);
    if (!matches(d == kLR ? ax->lhs : ax->rhs, t, s))
      throw InternalError("rewriter: " + key + " does not match " + print_term(t));
    record({key, d, p, std::move(s)});
  }

 private:
  Term cur_;
  std::vector<DerivationStep> steps_;
};

class Rewriter {
 public:
  explicit Rewriter(Trace& tr) : tr_(tr) {}

  void normalize(const Position& p) {
    Term t = tr_.at(p);
    if (is_normal_form(t)) return;
    switch (t->kind) {
      case Kind::Par:
        normalize(child(p, 0));
        normalize(child(p, 1));
        par_case(p);
        return;
      case Kind::Lift:
        normalize(child(p, 0));
        lift_case(p);
        return;
      case Kind::Perm:
        normalize(child(p, 0));
        perm_case(p);
        return;
      case Kind::Forget:
        normalize(child(p, 0));
        forget_case(p);
        return;
      default:
        return;
    }
  }

  // Turns the normal form at p into the iso normal form `target`, given that
  // their graphs are easy.
  void match_nf(const Position& p, const Term& target) {
    Term t = tr_.at(p);
    if (term_equal(t, target)) return;
    if (t->kind == Kind::Top || target->kind == Kind::Top) throw InternalError("normal forms differ at top");
    QView a = view_q(t), b = view_q(target);
    if (a.q != b.q || a.j != b.j) throw InternalError("normal forms differ in isolated sources");
    match_chain(inner_of(a, p), b.f);
  }

 private:
  // ---- single axiom applications, keyed from the subterm at p ----
  int ar(const Position& p) const { return tr_.at(p)->arity; }

  void a1a(Direction d, const Position& p) { tr_.rw(axiom_key("A1a", ar(p)), d, p); }
  void a1b(const Position& p) { tr_.rw(axiom_key("A1b", ar(p)), kLR, p); }
  void a1c(Direction d, const Position& p) { tr_.rw(axiom_key("A1c", ar(p)), d, p); }
  void a2a_lr(const Position& p) {
    Term t = tr_.at(p);
    tr_.rw(axiom_key("A2a", t->arity, {t->perm, t->left->perm}), kLR, p);
  }
  void a2a_rl(const Position& p, const Perm& a, const Perm& b) { tr_.rw(axiom_key("A2a", ar(p), {a, b}), kRL, p); }
  void a2b(Direction d, const Position& p) { tr_.rw(axiom_key("A2b", ar(p)), d, p); }
  void a3a_lr(const Position& p) { tr_.rw(axiom_key("A3a", ar(p), {tr_.at(p)->perm}), kLR, p); }
  void a3a_rl(const Position& p) { tr_.rw(axiom_key("A3a", ar(p), {tr_.at(p)->left->perm}), kRL, p); }
  void a3b_lr(const Position& p) { tr_.rw(axiom_key("A3b", ar(p), {tr_.at(p)->perm}), kLR, p); }
  void a3b_rl(const Position& p, const Perm& q) { tr_.rw(axiom_key("A3b", ar(p), {q}), kRL, p); }
  void a4a(Direction d, const Position& p) { tr_.rw(axiom_key("A4a", ar(p) - 1), d, p); }
  void a4b(Direction d, const Position& p) { tr_.rw(axiom_key("A4b", ar(p) - 1), d, p); }
  void a5a_lr(const Position& p) { tr_.rw(axiom_key("A5a", ar(p) + 1, {tr_.at(p)->perm}), kLR, p); }
  void a5a_rl(const Position& p) {
    tr_.rw(axiom_key("A5a", ar(p) + 1, {restrict_last(tr_.at(p)->left->perm)}), kRL, p);
  }
  void a5b_lr(const Position& p) { tr_.rw(axiom_key("A5b", ar(p) - 1, {tr_.at(p)->left->perm}), kLR, p); }
  void a5b_rl(const Position& p) { tr_.rw(axiom_key("A5b", ar(p) - 1, {restrict_last(tr_.at(p)->perm)}), kRL, p); }
  void a6a(Direction d, const Position& p) { tr_.rw(axiom_key("A6a", ar(p)), d, p); }
  void a6b_rl(const Position& p) { tr_.rw(axiom_key("A6b", ar(p) - 2), kRL, p); }
  void a7_rl(const Position& p) { tr_.rw(axiom_key("A7", ar(p) + 1), kRL, p); }

  // Proves source -> (current subterm at p) in a scratch trace with `proc`,
  // then replays it backwards here.
  void reach_from(const Position& p, const Term& source, const std::function<void(Rewriter&)>& proc) {
    Trace scratch(source);
    Rewriter r(scratch);
    proc(r);
    if (!term_equal(scratch.term(), tr_.at(p)))
      throw InternalError("rewriter: backward proof ends at " + print_term(scratch.term()) + ", expected " +
                          print_term(tr_.at(p)));
    const auto& st = scratch.steps();
    for (auto it = st.rbegin(); it != st.rend(); ++it) {
      DerivationStep s = reverse_step(*it);
      Position full = p;
      full.insert(full.end(), s.pos.begin(), s.pos.end());
      s.pos = full;
      tr_.record(std::move(s));
    }
  }

  // ---- chain maintenance ----
  void swap_adjacent(const Position& chain, size_t i, size_t n) {
    Position node = chain;
    for (size_t t = 0; t < i; ++t) node.push_back(1);
    if (i + 2 == n) {
      a1b(node);
    } else {
      a1a(kLR, node);
      a1b(child(node, 0));
      a1a(kRL, node);
    }
  }

  template <class Key>
  void sort_by(const Position& chain, std::vector<Key> keys) {
    const size_t n = keys.size();
    for (size_t pass = 0; pass < n; ++pass)
      for (size_t i = 0; i + 1 < n; ++i)
        if (keys[i + 1] < keys[i]) {
          swap_adjacent(chain, i, n);
          std::swap(keys[i], keys[i + 1]);
        }
  }

  void sort_chain(const Position& chain) {
    std::vector<std::string> keys;
    for (const Term& q : chain_parts(tr_.at(chain))) keys.push_back(print_term(q));
    sort_by(chain, keys);
  }

  void flatten(const Position& p) {
    while (tr_.at(p)->kind == Kind::Par && tr_.at(p)->left->kind == Kind::Par) a1a(kRL, p);
    if (tr_.at(p)->kind == Kind::Par && tr_.at(p)->right->kind == Kind::Par) flatten(child(p, 1));
  }

  // ---- pushing lifts and permutations into parts ----
  void lift_into_q(const Position& p) {
    QView v = view_q(tr_.at(p)->left);
    if (!v.q.empty()) a5b_lr(p);
  }

  void lift_into_chain(const Position& p) {
    if (tr_.at(p)->left->kind == Kind::Par) {
      a4a(kLR, p);
      lift_into_q(child(p, 0));
      lift_into_chain(child(p, 1));
    } else {
      lift_into_q(p);
    }
  }

  void perm_into_chain(const Position& p) {
    if (tr_.at(p)->left->kind == Kind::Par) {
      a3a_lr(p);
      perm_into_q(child(p, 0));
      perm_into_chain(child(p, 1));
    } else {
      perm_into_q(p);
    }
  }

  void perm_into_q(const Position& p) {
    Term t = tr_.at(p);
    QView v = view_q(t->left);
    if (!v.q.empty()) {
      Perm r = perm_compose(t->perm, v.q);
      a2a_lr(p);
      if (perm_is_identity(r)) {
        a2b(kLR, p);
        return;
      }
    }
    canon_perm_lifts(p, v.j, false);
  }

  void perm_into_f(const Position& p) {
    Term t = tr_.at(p);
    const Term& f = t->left;
    if (f->kind == Kind::Perm) {
      Perm r = perm_compose(t->perm, f->perm);
      a2a_lr(p);
      if (perm_is_identity(r)) a2b(kLR, p);
    } else if (f->kind == Kind::Forget) {
      a5a_lr(p);
      perm_into_chain(child(p, 0));
      sort_chain(child(p, 0));
    }
  }

  // Subterm perm r (lift^m X): make r canonical and push the rest into X
  // (a chain, or an F when `into_f`).
  void canon_perm_lifts(const Position& p, int m, bool into_chain) {
    Term t = tr_.at(p);
    const Perm r = t->perm;
    const int k = t->arity, c = k - m;
    Perm pc = canonical_perm(k, image_of_lifts(r, k, m));
    Perm tau = perm_compose(perm_inverse(pc), r);
    if (perm_is_identity(tau)) return;
    Position tp = p;
    if (!perm_is_identity(pc)) {
      a2a_rl(p, pc, tau);
      tp = child(p, 0);
    }
    Perm core = perm_identity(k), lifts = perm_identity(k);
    for (int i = 0; i < c; ++i) core[i] = tau[i];
    for (int i = c; i < k; ++i) lifts[i] = tau[i];
    if (!perm_is_identity(lifts)) {
      if (!perm_is_identity(core)) {
        a2a_rl(tp, core, lifts);
        drop_lift_perm(child(tp, 0), c);
      } else {
        drop_lift_perm(tp, c);
      }
    }
    if (perm_is_identity(core)) return;
    for (int d = 0; d < m; ++d) a5b_rl(down(tp, d));
    Position xp = down(tp, m);
    if (into_chain) {
      perm_into_chain(xp);
      sort_chain(xp);
    } else {
      perm_into_f(xp);
    }
  }

  // Subterm perm rho (lift^m X) with rho only moving the lifted block
  // (positions above c); rewrites it to lift^m X.
  void drop_lift_perm(const Position& p, int c) {
    while (true) {
      const Perm rho = tr_.at(p)->perm;
      const int k = static_cast<int>(rho.size());
      int i = c + 1;
      while (i < k && rho[i - 1] < rho[i]) ++i;
      if (i >= k) throw InternalError("drop_lift_perm on the identity");
      Perm s = perm_swap(k, i, i + 1);
      Perm rest = perm_compose(rho, s);
      if (perm_is_identity(rest)) {
        drop_adjacent(p, i);
        return;
      }
      a2a_rl(p, rest, s);
      drop_adjacent(child(p, 0), i);
    }
  }

  // Subterm perm (i i+1) (lift^m Y) with both positions lifted.
  void drop_adjacent(const Position& p, int i) {
    const int k = ar(p);
    if (i + 1 < k) {
      a5b_rl(p);
      drop_adjacent(child(p, 0), i);
    } else {
      a6b_rl(p);
    }
  }

  // Subterm [p] lift^m Chain: rewrites it into a chain of parts of full arity.
  void expand(const Position& p) {
    Term t = tr_.at(p);
    QView v = view_q(t);
    Position lp = v.q.empty() ? p : child(p, 0);
    for (int d = v.j - 1; d >= 0; --d) lift_into_chain(down(lp, d));
    if (!v.q.empty()) perm_into_chain(p);
  }

  // Chain at p: pulls the isolated sources shared by all parts out as
  // c lift^i (chain).  Returns the position of the remaining chain.
  Position extract_common(const Position& p, std::vector<int>* shared = nullptr) {
    auto parts = chain_parts(tr_.at(p));
    const int k = parts[0]->arity;
    auto iso = common_isolated(parts);
    if (shared) *shared = iso;
    if (iso.empty()) return p;
    const int i = static_cast<int>(iso.size());
    Perm c = canonical_perm(k, iso);
    Perm cinv = perm_inverse(c);
    const bool has_c = !perm_is_identity(c);
    const size_t n = parts.size();
    for (size_t t = 0; t < n; ++t) {
      Position qp = p;
      for (size_t s = 0; s < t; ++s) qp.push_back(1);
      if (t + 1 < n) qp.push_back(0);
      QView v = view_q(parts[t]);
      std::vector<int> rest;
      for (int x : isolated_of(v, k))
        if (!std::binary_search(iso.begin(), iso.end(), x)) rest.push_back(cinv[x - 1]);
      std::sort(rest.begin(), rest.end());
      Term inner = mk_perm_opt(canonical_perm(k - i, rest), mk_lifts(v.j - i, v.f));
      Term source = mk_perm_opt(c, mk_lifts(i, inner));
      reach_from(qp, source, [&](Rewriter& r) {
        Position base = has_c ? Position{0} : Position{};
        for (int d = i - 1; d >= 0; --d) r.lift_into_q(down(base, d));
        if (has_c) r.perm_into_q({});
      });
    }
    for (size_t t = n - 1; t-- > 0;) {
      Position node = p;
      for (size_t s = 0; s < t; ++s) node.push_back(1);
      Position lp = node;
      if (has_c) {
        a3a_rl(node);
        lp = child(node, 0);
      }
      for (int d = 0; d < i; ++d) a4a(kRL, down(lp, d));
    }
    return down(has_c ? child(p, 0) : p, i);
  }

  // Subterm forget(top:k) -> lift^(k-1) forget(top:1).
  void forget_top(const Position& p) {
    const int k = ar(child(p, 0));
    if (k == 1) return;
    a3b_rl(child(p, 0), last_swap(k));
    a4b(kRL, down(p, 2));
    a6a(kRL, p);
    forget_top(child(p, 0));
  }

  // Subterm lift^j forget(W) -> forget(R_j lift^j W).
  void lifts_into_forget(const Position& p, int j) {
    if (j == 0) return;
    lifts_into_forget(child(p, 0), j - 1);
    a6a(kLR, p);
    if (j > 1) {
      a5b_lr(down(p, 2));
      a2a_lr(child(p, 0));
    }
  }

  // ---- the five constructor cases, children already normal ----
  void par_case(const Position& p) {
    Term t = tr_.at(p);
    if (t->left->kind == Kind::Top) {
      a1b(p);
      a1c(kLR, p);
      return;
    }
    if (t->right->kind == Kind::Top) {
      a1c(kLR, p);
      return;
    }
    expand(child(p, 0));
    expand(child(p, 1));
    flatten(p);
    sort_chain(extract_common(p));
  }

  void lift_case(const Position& p) {
    Term c = tr_.at(p)->left;
    if (c->kind == Kind::Top) {
      a4b(kLR, p);
      return;
    }
    if (!view_q(c).q.empty()) a5b_lr(p);
  }

  void perm_case(const Position& p) {
    Term t = tr_.at(p);
    if (perm_is_identity(t->perm)) {
      a2b(kLR, p);
      return;
    }
    if (t->left->kind == Kind::Top) {
      a3b_lr(p);
      return;
    }
    QView v = view_q(t->left);
    if (!v.q.empty()) {
      Perm r = perm_compose(t->perm, v.q);
      a2a_lr(p);
      if (perm_is_identity(r)) {
        a2b(kLR, p);
        return;
      }
    }
    canon_perm_lifts(p, v.j, true);
  }

  void forget_case(const Position& p) {
    Term b = tr_.at(child(p, 0));
    const int k = b->arity;
    if (b->kind == Kind::Top) {
      forget_top(p);
      return;
    }
    QView v = view_q(b);
    auto iso = isolated_of(v, k);
    if (!iso.empty() && iso.back() == k) {
      // the forgotten source is isolated: split off an isolated inner vertex
      Position fp = p;
      if (!v.q.empty()) {
        a5a_rl(p);
        fp = child(p, 0);
      }
      a1c(kRL, child(fp, 0));
      a1b(child(fp, 0));
      a7_rl(fp);
      forget_top(child(fp, 0));
      par_case(fp);
      if (!v.q.empty()) perm_case(p);
      return;
    }
    Position cp = child(p, 0);
    expand(cp);
    std::vector<int> touches;  // 0: part touches the forgotten source, 1: it does not
    for (const Term& q : chain_parts(tr_.at(cp))) {
      auto qi = isolated_of(view_q(q), k);
      touches.push_back(!qi.empty() && qi.back() == k ? 1 : 0);
    }
    sort_by(cp, touches);
    const int nz = static_cast<int>(std::count(touches.begin(), touches.end(), 0));
    const int ny = static_cast<int>(touches.size()) - nz;
    Position fp = p;
    if (ny > 0) {
      split_chain(cp, nz);
      Position yp = child(cp, 1);
      for (int t = 0; t < ny; ++t) {
        Position qp = yp;
        for (int s = 0; s < t; ++s) qp.push_back(1);
        if (t + 1 < ny) qp.push_back(0);
        if (!view_q(tr_.at(qp)).q.empty()) a5b_rl(qp);
      }
      for (int t = ny - 2; t >= 0; --t) {
        Position node = yp;
        for (int s = 0; s < t; ++s) node.push_back(1);
        a4a(kRL, node);
      }
      a7_rl(p);
      fp = child(p, 0);
    }
    std::vector<int> shared;
    Position core = extract_common(child(fp, 0), &shared);
    const int i = static_cast<int>(shared.size());
    if (i > 0) {
      const int n = k - i;
      Perm c = canonical_perm(k - 1, shared);
      Perm rj = perm_identity(n);
      for (int j = 1; j <= i; ++j) rj = perm_compose(last_swap(n + j), perm_extend(rj));
      Position gp = fp;
      if (!perm_is_identity(c)) {
        if (perm_compose(perm_extend(c), rj) != tr_.at(child(fp, 0))->perm)
          throw InternalError("rewriter: unexpected shared-source permutation");
        a2a_rl(child(fp, 0), perm_extend(c), rj);
        a5a_rl(fp);
        gp = child(fp, 0);
      }
      Term w = subterm_at(tr_.at(gp), down(Position{0, 0}, i));
      reach_from(gp, mk_lifts(i, mk_forget(w)), [&](Rewriter& r) { r.lifts_into_forget({}, i); });
      core = child(down(gp, i), 0);
    }
    sort_chain(core);
    if (ny > 0) par_case(p);
  }

  // Chain at p with nz >= 1 leading parts: regroup as par(first nz, rest).
  void split_chain(const Position& p, int nz) {
    if (nz == 1) return;
    split_chain(child(p, 1), nz - 1);
    a1a(kLR, p);
  }

  // ---- matching two normal forms of an easy graph ----
  void match_chain(const Position& p, const Term& target) {
    auto cur = chain_parts(tr_.at(p));
    auto want = chain_parts(target);
    if (cur.size() != want.size()) throw InternalError("normal forms have different numbers of parts");
    const size_t n = cur.size();
    std::vector<int> assigned(n, -1);  // current part -> target index
    std::vector<Graph> cur_g;
    for (const Term& q : cur) cur_g.push_back(eval(q));
    for (size_t s = 0; s < n; ++s) {
      Graph g = eval(want[s]);
      bool found = false;
      for (size_t t = 0; t < n && !found; ++t)
        if (assigned[t] < 0 && isomorphic(cur_g[t], g)) {
          assigned[t] = static_cast<int>(s);
          found = true;
        }
      if (!found) throw InternalError("normal forms have non-isomorphic parts");
    }
    for (size_t t = 0; t < n; ++t) {
      Position qp = p;
      for (size_t s = 0; s < t; ++s) qp.push_back(1);
      if (t + 1 < n) qp.push_back(0);
      match_q(qp, want[assigned[t]]);
    }
    sort_by(p, assigned);
  }

  void match_q(const Position& p, const Term& target) {
    Term t = tr_.at(p);
    if (term_equal(t, target)) return;
    QView a = view_q(t), b = view_q(target);
    if (a.q != b.q || a.j != b.j) throw InternalError("parts differ in isolated sources");
    Position fp = inner_of(a, p);
    if (a.f->kind != Kind::Forget || b.f->kind != Kind::Forget)
      throw InternalError("atomic parts differ: " + print_term(a.f) + " vs " + print_term(b.f));
    match_chain(child(fp, 0), b.f->left);
  }

  Trace& tr_;
};

}  // namespace

bool is_normal_form(const Term& t) {
  if (t->kind == Kind::Top) return true;
  QView v = view_q(t);
  if (!v.q.empty() &&
      (perm_is_identity(v.q) || v.q != canonical_perm(t->arity, isolated_of(v, t->arity))))
    return false;
  return v.f->kind != Kind::Top && is_chain(v.f, false);
}

Normalized normalize(const Term& t) {
  if (term_width(t) > 3) throw InputError("normalize needs width at most 3, got " + std::to_string(term_width(t)));
  Trace tr(t);
  Rewriter(tr).normalize({});
  if (!is_normal_form(tr.term())) throw InternalError("normalize ended outside normal form: " + print_term(tr.term()));
  return {tr.term(), {t, tr.steps(), tr.term()}};
}

EasyResult derive_easy(const Term& t, const Term& u) {
  EasyResult r;
  if (term_width(t) > 3 || term_width(u) > 3) {
    r.reason = "terms must have width at most 3";
    return r;
  }
  Graph g = eval(t);
  if (t->arity != u->arity || !isomorphic(g, eval(u))) {
    r.reason = "terms denote non-isomorphic graphs";
    return r;
  }
  if (!is_easy(g)) {
    r.reason = "graph is not easy";
    return r;
  }
  Normalized nt = normalize(t), nu = normalize(u);
  Trace mid(nt.normal);
  Rewriter(mid).match_nf({}, nu.normal);
  if (!term_equal(mid.term(), nu.normal)) throw InternalError("normal forms of an easy graph did not meet");
  Derivation d{t, nt.derivation.steps, u};
  d.steps.insert(d.steps.end(), mid.steps().begin(), mid.steps().end());
  for (auto it = nu.derivation.steps.rbegin(); it != nu.derivation.steps.rend(); ++it)
    d.steps.push_back(reverse_step(*it));
  r.derivation = std::move(d);
  return r;
}

}  // namespace tw3
