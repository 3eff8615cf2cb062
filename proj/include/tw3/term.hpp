// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tw3/graph.hpp"
#include "tw3/perm.hpp"

namespace tw3 {

enum class Kind { Par, Lift, Forget, Perm, Top, Letter };

struct TermNode;
/// Immutable, shared term.  Construct only through the mk_* functions, which
/// check sorts.
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  Kind kind;
  int arity;
  Term left;   ///< Par: first operand; Lift/Forget/Perm: the child
  Term right;  ///< Par: second operand
  tw3::Perm perm;
  std::string name;  ///< Letter
};

Term mk_par(const Term& t, const Term& u);
Term mk_lift(const Term& t);
Term mk_forget(const Term& t);
Term mk_perm(const Perm& p, const Term& t);
Term mk_top(int k);
Term mk_letter(const std::string& name, int k);

/// Convenience: lift applied n times.
Term mk_lifts(int n, Term t);
/// Convenience: perm omitted when p is the identity.
Term mk_perm_opt(const Perm& p, const Term& t);

bool term_equal(const Term& a, const Term& b);
int term_size(const Term& t);

struct Measure {
  int arity;
  int width;
  int inner_vertices;
};
Measure measure(const Term& t);
int term_width(const Term& t);

Graph eval(const Term& t);

/// Letter name -> image term (arity-preserving).  Letters absent from the map
/// are left untouched.
using TermSubstitution = std::map<std::string, Term>;
Term term_substitute(const TermSubstitution& sigma, const Term& t);
/// Letters of t with their arities; throws on inconsistent use.
Alphabet term_alphabet(const Term& t);

/// A context is a term with exactly one occurrence of the hole letter.
struct Context {
  Term body;
  std::string hole;
  int hole_arity;
};
Context make_context(const Term& body, const std::string& hole);
Term plug(const Context& c, const Term& t);

/// Child-index path (Par: 0/1, unary nodes: 0).
using Position = std::vector<int>;
Term subterm_at(const Term& t, const Position& pos);
Term replace_at(const Term& t, const Position& pos, const Term& u);

/// s(G1..Gk; H) = p1 l G1 || ... || pk l Gk || H with pi swapping i and k+1.
Term mk_series(const std::vector<Term>& args, const Term& factor);
/// tss(x,y,z) = f((14) l x || (24) l y || (34) l z).
Term mk_tss(const Term& x, const Term& y, const Term& z);
/// u . v = tss(u, v, top).
Term mk_dot(const Term& u, const Term& v);
/// tc u = (12) u.
Term mk_tc(const Term& u);
/// star(u,v,w) = tss((21) l v, (13) l w, (23) l u).
Term mk_star(const Term& u, const Term& v, const Term& w);

/// Text syntax:  top:k | name:k | name | par(t,u) | lift(t) | forget(t)
///   | perm[i1,...,ik](t) | perm(c1 ...)(c2 ...)(t)
/// with an optional leading header `alphabet { a:2 b:3 }`.
Term parse_term(const std::string& text);
std::string print_term(const Term& t);

}  // namespace tw3
