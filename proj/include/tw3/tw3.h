/* Copyright 2026 The tw3 Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libtw3.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Strings and arrays returned through out-parameters belong to the caller:
 * release them with tw3_string_free / tw3_int_array_free / tw3_graph_array_free.
 * Every function returns a tw3_status; on TW3_INPUT_ERROR and above,
 * tw3_last_error() describes the failure.  Predicates answer with TW3_OK
 * (yes) or TW3_NO (no).
 */
#ifndef TW3_TW3_H
#define TW3_TW3_H

#include <stddef.h>

#if defined(_WIN32)
#define TW3_API __declspec(dllexport)
#else
#define TW3_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tw3_status {
  TW3_OK = 0,
  TW3_NO = 1,
  TW3_INPUT_ERROR = 2,
  TW3_RESOURCE_LIMIT = 3,
  TW3_INTERNAL_ERROR = 4
} tw3_status;

enum {
  TW3_CLASS_EMPTY = 1,
  TW3_CLASS_ATOMIC = 2,
  TW3_CLASS_FULL = 4,
  TW3_CLASS_PRIME = 8
};

typedef struct tw3_graph tw3_graph;
typedef struct tw3_term tw3_term;
typedef struct tw3_derivation tw3_derivation;

TW3_API const char* tw3_version(void);
/* Message of the last failure on the calling thread. */
TW3_API const char* tw3_last_error(void);

TW3_API void tw3_string_free(char* s);
TW3_API void tw3_int_array_free(int* a);

/* ---- graphs ---- */
TW3_API tw3_status tw3_graph_from_json(const char* text, tw3_graph** out);
TW3_API tw3_status tw3_graph_to_json(const tw3_graph* g, char** out);
/* highlight: vertex ids; pairs: 2 * npairs vertex ids. */
TW3_API tw3_status tw3_graph_to_dot(const tw3_graph* g, const int* highlight, size_t nhighlight, const int* pairs,
                                    size_t npairs, char** out);
TW3_API void tw3_graph_free(tw3_graph* g);
TW3_API void tw3_graph_array_free(tw3_graph** gs, size_t n);
TW3_API int tw3_graph_arity(const tw3_graph* g);
TW3_API int tw3_graph_vertex_count(const tw3_graph* g);
TW3_API int tw3_graph_edge_count(const tw3_graph* g);
/* Appends inner vertex x to the interface. */
TW3_API tw3_status tw3_graph_append_source(const tw3_graph* g, int x, tw3_graph** out);

TW3_API tw3_status tw3_isomorphic(const tw3_graph* g, const tw3_graph* h);

/* ---- terms ---- */
TW3_API tw3_status tw3_term_parse(const char* text, tw3_term** out);
TW3_API tw3_status tw3_term_print(const tw3_term* t, char** out);
TW3_API void tw3_term_free(tw3_term* t);
TW3_API int tw3_term_arity(const tw3_term* t);
TW3_API int tw3_term_width(const tw3_term* t);
TW3_API int tw3_term_size(const tw3_term* t);
TW3_API tw3_status tw3_term_eval(const tw3_term* t, tw3_graph** out);
/* A width <= 3 parsing; TW3_INPUT_ERROR above treewidth 3. */
TW3_API tw3_status tw3_parse_graph(const tw3_graph* g, tw3_term** out);
TW3_API tw3_status tw3_equivalent(const tw3_term* t, const tw3_term* u);

/* ---- treewidth ---- */
TW3_API tw3_status tw3_treewidth(const tw3_graph* g, int* out);
/* JSON {nodes, edges, bags} of a decomposition of width <= k, or TW3_NO. */
TW3_API tw3_status tw3_tree_decomposition(const tw3_graph* g, int k, char** json_out);
TW3_API tw3_status tw3_check_tree_decomposition(const tw3_graph* g, const char* json, int k);
TW3_API tw3_status tw3_forget_points(const tw3_graph* g, int k, int** out, size_t* n);

/* ---- structure ---- */
TW3_API tw3_status tw3_classify(const tw3_graph* g, unsigned* flags);
TW3_API tw3_status tw3_prime_components(const tw3_graph* g, tw3_graph*** out, size_t* n);
/* g is isomorphic to perm(lift^m(core)); perm has arity(g) entries. */
TW3_API tw3_status tw3_full_decomposition(const tw3_graph* g, int** perm, int* m, tw3_graph** core);
/* args receives arity(g) graphs. */
TW3_API tw3_status tw3_series_decomposition(const tw3_graph* g, int x, tw3_graph*** args, tw3_graph** factor);
TW3_API tw3_status tw3_anchors(const tw3_graph* g, int** out, size_t* n);
TW3_API tw3_status tw3_is_hard(const tw3_graph* g);
/* out receives 2 * npairs vertex ids. */
TW3_API tw3_status tw3_separation_pairs(const tw3_graph* g, int** out, size_t* npairs);
TW3_API tw3_status tw3_is_easy(const tw3_graph* g);

/* ---- axioms and derivations ---- */
TW3_API size_t tw3_axiom_count(void);
TW3_API tw3_status tw3_axiom_info(size_t i, char** key, char** schema, tw3_term** lhs, tw3_term** rhs);
TW3_API tw3_status tw3_axiom_sound(size_t i);

TW3_API tw3_status tw3_normalize(const tw3_term* t, tw3_term** normal, tw3_derivation** d);
/* TW3_NO with *reason set when the graphs are not isomorphic easy graphs. */
TW3_API tw3_status tw3_derive_easy(const tw3_term* t, const tw3_term* u, tw3_derivation** d, char** reason);

TW3_API tw3_status tw3_derivation_from_json(const char* text, tw3_derivation** out);
TW3_API tw3_status tw3_derivation_to_json(const tw3_derivation* d, char** out);
TW3_API size_t tw3_derivation_length(const tw3_derivation* d);
/* TW3_NO on an invalid derivation, with the failing step index and reason. */
TW3_API tw3_status tw3_derivation_check(const tw3_derivation* d, int* failed_step, char** reason);
TW3_API void tw3_derivation_free(tw3_derivation* d);

#ifdef __cplusplus
}
#endif

#endif /* TW3_TW3_H */
