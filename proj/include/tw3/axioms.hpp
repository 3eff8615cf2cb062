// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tw3/term.hpp"

namespace tw3 {

/// A fully instantiated axiom.  `key` identifies it uniquely, e.g.
/// "A5b/3/[2,1,3]": schema, arity of the first letter (or of top when there
/// is no letter), then the permutation parameters.
struct AxiomInstance {
  std::string key;
  std::string schema;
  Term lhs;
  Term rhs;
};

std::string axiom_key(const std::string& schema, int n, const std::vector<Perm>& perms = {});

/// A1-A7 and FS at all arities up to 4, plus FK, FX, FD.  Built once.
const std::vector<AxiomInstance>& enumerate_axioms();
/// nullptr when the key is unknown.
const AxiomInstance* find_axiom(const std::string& key);
bool check_soundness(const AxiomInstance& ax);

/// The concrete terms used for the forget axioms.
AxiomInstance axiom_fk();
AxiomInstance axiom_fx();
AxiomInstance axiom_fd();

enum class Direction { LeftToRight, RightToLeft };

struct DerivationStep {
  std::string axiom;  ///< instance key
  Direction dir = Direction::LeftToRight;
  Position pos;
  TermSubstitution subst;
};

/// Throws InputError with a diagnostic when the step does not apply.
Term apply_step(const Term& t, const DerivationStep& step);
DerivationStep reverse_step(const DerivationStep& step);

struct Derivation {
  Term start;
  std::vector<DerivationStep> steps;
  Term end;
};

struct DerivationCheck {
  bool ok = true;
  int failed_step = -1;  ///< index of the failing step, or steps.size() on an end mismatch
  std::string reason;
};

DerivationCheck validate_derivation(const Derivation& d);

struct Normalized {
  Term normal;
  Derivation derivation;
};

/// Rewrites t into normal form with A1-A7 only.  Requires width(t) <= 3.
Normalized normalize(const Term& t);
bool is_normal_form(const Term& t);

struct EasyResult {
  std::optional<Derivation> derivation;
  std::string reason;  ///< set when no derivation is produced
};

/// Derivation between two parsings of the same easy graph, using A1-A7 only.
EasyResult derive_easy(const Term& t, const Term& u);

/// Decided by isomorphism of the denoted graphs.  Both graphs must have
/// treewidth at most 3.
bool equivalent(const Term& t, const Term& u);

/// A width <= 3 parsing of g.  Requires treewidth(g) <= 3.
Term parse_graph(const Graph& g);

}  // namespace tw3
