// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include "tw3/tw3.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "tw3/axioms.hpp"
#include "tw3/errors.hpp"
#include "tw3/io.hpp"
#include "tw3/structure.hpp"
#include "tw3/treewidth.hpp"

struct tw3_graph {
  tw3::Graph g;
};
struct tw3_term {
  tw3::Term t;
};
struct tw3_derivation {
  tw3::Derivation d;
};

namespace {

thread_local std::string g_last_error;

template <class F>
tw3_status guarded(F&& f) {
  try {
    return f();
  } catch (const tw3::InputError& e) {
    g_last_error = e.what();
    return TW3_INPUT_ERROR;
  } catch (const tw3::ResourceError& e) {
    g_last_error = e.what();
    return TW3_RESOURCE_LIMIT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TW3_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return TW3_INTERNAL_ERROR;
  }
}

tw3_status null_arg(const char* name) {
  g_last_error = std::string("null argument: ") + name;
  return TW3_INPUT_ERROR;
}

#define TW3_REQUIRE(p)                   \
  do {                                   \
    if (!(p)) return null_arg(#p);       \
  } while (0)

// Out-parameters are cleared up front so failures leave nothing dangling.
#define TW3_OUT(p) \
  do {             \
    TW3_REQUIRE(p); \
    *(p) = {};     \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int* dup_ints(const std::vector<int>& v) {
  int* out = static_cast<int*>(std::malloc(sizeof(int) * (v.empty() ? 1 : v.size())));
  if (!out) throw std::bad_alloc();
  std::copy(v.begin(), v.end(), out);
  return out;
}

tw3_graph** dup_graphs(const std::vector<tw3::Graph>& gs) {
  auto** out = static_cast<tw3_graph**>(std::calloc(gs.empty() ? 1 : gs.size(), sizeof(tw3_graph*)));
  if (!out) throw std::bad_alloc();
  for (size_t i = 0; i < gs.size(); ++i) out[i] = new tw3_graph{gs[i]};
  return out;
}

tw3_status yes_no(bool b) { return b ? TW3_OK : TW3_NO; }

}  // namespace

extern "C" {

const char* tw3_version(void) { return "1.0.0"; }
const char* tw3_last_error(void) { return g_last_error.c_str(); }
void tw3_string_free(char* s) { std::free(s); }
void tw3_int_array_free(int* a) { std::free(a); }

tw3_status tw3_graph_from_json(const char* text, tw3_graph** out) {
  TW3_REQUIRE(text);
  TW3_OUT(out);
  return guarded([&] {
    *out = new tw3_graph{tw3::graph_from_json(text)};
    return TW3_OK;
  });
}

tw3_status tw3_graph_to_json(const tw3_graph* g, char** out) {
  TW3_REQUIRE(g);
  TW3_OUT(out);
  return guarded([&] {
    *out = dup_string(tw3::graph_to_json(g->g));
    return TW3_OK;
  });
}

tw3_status tw3_graph_to_dot(const tw3_graph* g, const int* highlight, size_t nhighlight, const int* pairs,
                            size_t npairs, char** out) {
  TW3_REQUIRE(g);
  TW3_OUT(out);
  if (nhighlight) TW3_REQUIRE(highlight);
  if (npairs) TW3_REQUIRE(pairs);
  return guarded([&] {
    tw3::DotOptions opts;
    for (size_t i = 0; i < nhighlight; ++i) opts.highlight.push_back(highlight[i]);
    for (size_t i = 0; i < npairs; ++i) opts.pairs.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = dup_string(tw3::graph_to_dot(g->g, opts));
    return TW3_OK;
  });
}

void tw3_graph_free(tw3_graph* g) { delete g; }

void tw3_graph_array_free(tw3_graph** gs, size_t n) {
  if (!gs) return;
  for (size_t i = 0; i < n; ++i) delete gs[i];
  std::free(gs);
}

int tw3_graph_arity(const tw3_graph* g) { return g ? g->g.arity() : -1; }
int tw3_graph_vertex_count(const tw3_graph* g) { return g ? g->g.nv : -1; }
int tw3_graph_edge_count(const tw3_graph* g) { return g ? static_cast<int>(g->g.edges.size()) : -1; }

tw3_status tw3_graph_append_source(const tw3_graph* g, int x, tw3_graph** out) {
  TW3_REQUIRE(g);
  TW3_OUT(out);
  return guarded([&] {
    if (x < 0 || x >= g->g.nv || g->g.source_positions()[x] >= 0)
      throw tw3::InputError("vertex " + std::to_string(x) + " is not an inner vertex");
    *out = new tw3_graph{tw3::append_source(g->g, x)};
    return TW3_OK;
  });
}

tw3_status tw3_isomorphic(const tw3_graph* g, const tw3_graph* h) {
  TW3_REQUIRE(g);
  TW3_REQUIRE(h);
  return guarded([&] { return yes_no(tw3::isomorphic(g->g, h->g).has_value()); });
}

tw3_status tw3_term_parse(const char* text, tw3_term** out) {
  TW3_REQUIRE(text);
  TW3_OUT(out);
  return guarded([&] {
    *out = new tw3_term{tw3::parse_term(text)};
    return TW3_OK;
  });
}

tw3_status tw3_term_print(const tw3_term* t, char** out) {
  TW3_REQUIRE(t);
  TW3_OUT(out);
  return guarded([&] {
    *out = dup_string(tw3::print_term(t->t));
    return TW3_OK;
  });
}

void tw3_term_free(tw3_term* t) { delete t; }
int tw3_term_arity(const tw3_term* t) { return t ? t->t->arity : -1; }
int tw3_term_width(const tw3_term* t) { return t ? tw3::term_width(t->t) : -1; }
int tw3_term_size(const tw3_term* t) { return t ? tw3::term_size(t->t) : -1; }

tw3_status tw3_term_eval(const tw3_term* t, tw3_graph** out) {
  TW3_REQUIRE(t);
  TW3_OUT(out);
  return guarded([&] {
    *out = new tw3_graph{tw3::eval(t->t)};
    return TW3_OK;
  });
}

tw3_status tw3_parse_graph(const tw3_graph* g, tw3_term** out) {
  TW3_REQUIRE(g);
  TW3_OUT(out);
  return guarded([&] {
    *out = new tw3_term{tw3::parse_graph(g->g)};
    return TW3_OK;
  });
}

tw3_status tw3_equivalent(const tw3_term* t, const tw3_term* u) {
  TW3_REQUIRE(t);
  TW3_REQUIRE(u);
  return guarded([&] { return yes_no(tw3::equivalent(t->t, u->t)); });
}

tw3_status tw3_treewidth(const tw3_graph* g, int* out) {
  TW3_REQUIRE(g);
  TW3_OUT(out);
  return guarded([&] {
    *out = tw3::exact_treewidth(g->g);
    return TW3_OK;
  });
}

tw3_status tw3_tree_decomposition(const tw3_graph* g, int k, char** json_out) {
  TW3_REQUIRE(g);
  TW3_OUT(json_out);
  return guarded([&] {
    auto td = tw3::find_tree_decomposition(g->g, k);
    if (!td) return TW3_NO;
    *json_out = dup_string(tw3::tree_decomposition_to_json(*td));
    return TW3_OK;
  });
}

tw3_status tw3_check_tree_decomposition(const tw3_graph* g, const char* json, int k) {
  TW3_REQUIRE(g);
  TW3_REQUIRE(json);
  return guarded([&] {
    return yes_no(tw3::validate_tree_decomposition(g->g, tw3::tree_decomposition_from_json(json), k));
  });
}

tw3_status tw3_forget_points(const tw3_graph* g, int k, int** out, size_t* n) {
  TW3_REQUIRE(g);
  TW3_OUT(out);
  TW3_OUT(n);
  return guarded([&] {
    auto fp = tw3::forget_points(g->g, k);
    *out = dup_ints(fp);
    *n = fp.size();
    return TW3_OK;
  });
}

tw3_status tw3_classify(const tw3_graph* g, unsigned* flags) {
  TW3_REQUIRE(g);
  TW3_OUT(flags);
  return guarded([&] {
    tw3::Classification c = tw3::classify(g->g);
    *flags = (c.empty ? TW3_CLASS_EMPTY : 0) | (c.atomic ? TW3_CLASS_ATOMIC : 0) | (c.full ? TW3_CLASS_FULL : 0) |
             (c.prime ? TW3_CLASS_PRIME : 0);
    return TW3_OK;
  });
}

tw3_status tw3_prime_components(const tw3_graph* g, tw3_graph*** out, size_t* n) {
  TW3_REQUIRE(g);
  TW3_OUT(out);
  TW3_OUT(n);
  return guarded([&] {
    auto cs = tw3::prime_components(g->g);
    *out = dup_graphs(cs);
    *n = cs.size();
    return TW3_OK;
  });
}

tw3_status tw3_full_decomposition(const tw3_graph* g, int** perm, int* m, tw3_graph** core) {
  TW3_REQUIRE(g);
  TW3_OUT(perm);
  TW3_OUT(m);
  TW3_OUT(core);
  return guarded([&] {
    tw3::FullDecomposition d = tw3::full_decomposition(g->g);
    *perm = dup_ints(d.p);
    *m = d.m;
    *core = new tw3_graph{std::move(d.core)};
    return TW3_OK;
  });
}

tw3_status tw3_series_decomposition(const tw3_graph* g, int x, tw3_graph*** args, tw3_graph** factor) {
  TW3_REQUIRE(g);
  TW3_OUT(args);
  TW3_OUT(factor);
  return guarded([&] {
    tw3::SeriesDecomposition d = tw3::series_decomposition(g->g, x);
    *args = dup_graphs(d.args);
    *factor = new tw3_graph{std::move(d.factor)};
    return TW3_OK;
  });
}

tw3_status tw3_anchors(const tw3_graph* g, int** out, size_t* n) {
  TW3_REQUIRE(g);
  TW3_OUT(out);
  TW3_OUT(n);
  return guarded([&] {
    auto a = tw3::anchors(g->g);
    *out = dup_ints(a);
    *n = a.size();
    return TW3_OK;
  });
}

tw3_status tw3_is_hard(const tw3_graph* g) {
  TW3_REQUIRE(g);
  return guarded([&] { return yes_no(tw3::is_hard(g->g)); });
}

tw3_status tw3_separation_pairs(const tw3_graph* g, int** out, size_t* npairs) {
  TW3_REQUIRE(g);
  TW3_OUT(out);
  TW3_OUT(npairs);
  return guarded([&] {
    std::vector<int> flat;
    auto ps = tw3::minimal_separation_pairs(g->g);
    for (auto [x, y] : ps) {
      flat.push_back(x);
      flat.push_back(y);
    }
    *out = dup_ints(flat);
    *npairs = ps.size();
    return TW3_OK;
  });
}

tw3_status tw3_is_easy(const tw3_graph* g) {
  TW3_REQUIRE(g);
  return guarded([&] { return yes_no(tw3::is_easy(g->g)); });
}

size_t tw3_axiom_count(void) { return tw3::enumerate_axioms().size(); }

tw3_status tw3_axiom_info(size_t i, char** key, char** schema, tw3_term** lhs, tw3_term** rhs) {
  if (key) *key = nullptr;
  if (schema) *schema = nullptr;
  if (lhs) *lhs = nullptr;
  if (rhs) *rhs = nullptr;
  return guarded([&] {
    const auto& all = tw3::enumerate_axioms();
    if (i >= all.size()) throw tw3::InputError("axiom index " + std::to_string(i) + " out of range");
    const auto& ax = all[i];
    if (key) *key = dup_string(ax.key);
    if (schema) *schema = dup_string(ax.schema);
    if (lhs) *lhs = new tw3_term{ax.lhs};
    if (rhs) *rhs = new tw3_term{ax.rhs};
    return TW3_OK;
  });
}

tw3_status tw3_axiom_sound(size_t i) {
  return guarded([&] {
    const auto& all = tw3::enumerate_axioms();
    if (i >= all.size()) throw tw3::InputError("axiom index " + std::to_string(i) + " out of range");
    return yes_no(tw3::check_soundness(all[i]));
  });
}

tw3_status tw3_normalize(const tw3_term* t, tw3_term** normal, tw3_derivation** d) {
  TW3_REQUIRE(t);
  TW3_OUT(normal);
  if (d) *d = nullptr;
  return guarded([&] {
    tw3::Normalized n = tw3::normalize(t->t);
    *normal = new tw3_term{n.normal};
    if (d) *d = new tw3_derivation{std::move(n.derivation)};
    return TW3_OK;
  });
}

tw3_status tw3_derive_easy(const tw3_term* t, const tw3_term* u, tw3_derivation** d, char** reason) {
  TW3_REQUIRE(t);
  TW3_REQUIRE(u);
  TW3_OUT(d);
  if (reason) *reason = nullptr;
  return guarded([&] {
    tw3::EasyResult r = tw3::derive_easy(t->t, u->t);
    if (!r.derivation) {
      if (reason) *reason = dup_string(r.reason);
      return TW3_NO;
    }
    *d = new tw3_derivation{std::move(*r.derivation)};
    return TW3_OK;
  });
}

tw3_status tw3_derivation_from_json(const char* text, tw3_derivation** out) {
  TW3_REQUIRE(text);
  TW3_OUT(out);
  return guarded([&] {
    *out = new tw3_derivation{tw3::derivation_from_json(text)};
    return TW3_OK;
  });
}

tw3_status tw3_derivation_to_json(const tw3_derivation* d, char** out) {
  TW3_REQUIRE(d);
  TW3_OUT(out);
  return guarded([&] {
    *out = dup_string(tw3::derivation_to_json(d->d));
    return TW3_OK;
  });
}

size_t tw3_derivation_length(const tw3_derivation* d) { return d ? d->d.steps.size() : 0; }

tw3_status tw3_derivation_check(const tw3_derivation* d, int* failed_step, char** reason) {
  TW3_REQUIRE(d);
  if (failed_step) *failed_step = -1;
  if (reason) *reason = nullptr;
  return guarded([&] {
    tw3::DerivationCheck c = tw3::validate_derivation(d->d);
    if (c.ok) return TW3_OK;
    if (failed_step) *failed_step = c.failed_step;
    if (reason) *reason = dup_string(c.reason);
    return TW3_NO;
  });
}

void tw3_derivation_free(tw3_derivation* d) { delete d; }

}  // extern "C"
