/* C interface to the inscriber library.
 *
 * Objects are opaque handles created by *_parse or a builder function and
 * released with the matching *_free. Every function returns an insc_status;
 * on failure insc_last_error() describes the problem for the calling thread.
 * Strings handed out by the library are NUL-terminated, owned by the caller,
 * and released with insc_string_free.
 *
 * Exact scalars cross the boundary as "p/q" text inside JSON documents.
 */
#ifndef INSCRIBER_H
#define INSCRIBER_H

#include <stddef.h>
#include <stdint.h>

#if defined(INSC_BUILDING_LIBRARY)
#define INSC_API __attribute__((visibility("default")))
#else
#define INSC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum insc_status {
  INSC_OK = 0,
  INSC_E_DIMENSION_MISMATCH,
  INSC_E_DEGENERATE_SIMPLEX,
  INSC_E_CENTER_INVERSION,
  INSC_E_NORTH_POLE,
  INSC_E_NOT_ON_SPHERE,
  INSC_E_EMPTY_INTERSECTION,
  INSC_E_DEGENERATE_FACET,
  INSC_E_NON_MANIFOLD_RIDGE,
  INSC_E_DANGLING_VERTEX,
  INSC_E_OVERLAPPING_FACETS,
  INSC_E_NON_CONVEX_SUPPORT,
  INSC_E_NOT_INTERIOR,
  INSC_E_UNKNOWN_FACET,
  INSC_E_UNKNOWN_VERTEX,
  INSC_E_NOT_SIMPLE_INTERIOR,
  INSC_E_DEGENERATE_POINT_SET,
  INSC_E_EMPTY_TREE,
  INSC_E_INVALID_TREE,
  INSC_E_UNKNOWN_NODE,
  INSC_E_INVALID_PLAN,
  INSC_E_NOT_STACKED,
  INSC_E_BAD_DIMENSION,
  INSC_E_DEGENERATE_NORMALS,
  INSC_E_SEARCH_EXHAUSTED,
  INSC_E_PLAN_NOT_BUILDABLE,
  INSC_E_NOT_DELAUNAY,
  INSC_E_SUPPORT_NOT_SIMPLEX,
  INSC_E_BAD_INPUT,
  INSC_E_WRONG_COMBINATORIAL_TYPE,
  INSC_E_INVERSION_CENTER_HIT,
  INSC_E_BAD_PARAMETERS,
  INSC_E_GROWTH_CAP_EXCEEDED,
  INSC_E_NON_DISTINCT_PARAMS,
  INSC_E_ODD_DIMENSION,
  INSC_E_PARSE_ERROR,
  INSC_E_VERIFICATION_FAILED,
  INSC_E_HYPOTHESIS_FAILED,
  INSC_E_NOT_OBSTRUCTED,
  INSC_E_NULL_ARGUMENT,
  INSC_E_OUT_OF_MEMORY,
  INSC_E_INTERNAL
} insc_status;

typedef struct insc_tree insc_tree;
typedef struct insc_plan insc_plan;
typedef struct insc_triangulation insc_triangulation;
typedef struct insc_polytope insc_polytope;
typedef struct insc_build insc_build;

INSC_API const char* insc_version(void);
INSC_API const char* insc_status_name(insc_status status);
/* Message of the last failure on this thread; empty after a success. */
INSC_API const char* insc_last_error(void);
INSC_API void insc_string_free(char* s);

/* Dual trees: {"nodes": n, "edges": [[a, b], ...]} */
INSC_API insc_status insc_tree_parse(const char* json, insc_tree** out);
INSC_API insc_status insc_tree_to_json(const insc_tree* t, char** out);
INSC_API void insc_tree_free(insc_tree* t);
/* witness is -1 when the tree is inscribable. */
INSC_API insc_status insc_tree_decide(const insc_tree* t, int* inscribable, int* max_degree, int* witness);
/* Smallest leaf id, the default apex of tree builds. */
INSC_API insc_status insc_tree_default_apex(const insc_tree* t, int* apex);

/* Rooted plans: {"d": d, "root": r, "children": {"r": [{"node": c, "face": l}]}} */
INSC_API insc_status insc_plan_parse(const char* json, insc_plan** out);
INSC_API insc_status insc_plan_to_json(const insc_plan* p, char** out);
INSC_API void insc_plan_free(insc_plan* p);
INSC_API int insc_plan_dimension(const insc_plan* p);
/* diagnosis: 0 buildable, 1 a node has more than two children, 2 a face
 * label is out of range; node is -1 when buildable. d = 0 uses the plan's d. */
INSC_API insc_status insc_plan_check(const insc_plan* p, int d, int* diagnosis, int* node);

/* Triangulations: {"dim": m, "vertices": [[...]], "facets": [[...]]} */
INSC_API insc_status insc_triangulation_parse(const char* json, insc_triangulation** out);
INSC_API insc_status insc_triangulation_to_json(const insc_triangulation* t, char** out);
INSC_API void insc_triangulation_free(insc_triangulation* t);
/* mode 1..4; report receives the violation list as JSON (may be NULL). */
INSC_API insc_status insc_triangulation_check_delaunay(const insc_triangulation* t, int mode, int* ok, char** report);
INSC_API insc_status insc_triangulation_lift(const insc_triangulation* t, insc_polytope** out);

/* Inscribed polytopes: {"d", "north", "vertices", "facets", optional "sphere"} */
INSC_API insc_status insc_polytope_parse(const char* json, insc_polytope** out);
INSC_API insc_status insc_polytope_to_json(const insc_polytope* p, char** out);
INSC_API void insc_polytope_free(insc_polytope* p);
INSC_API insc_status insc_polytope_verify(const insc_polytope* p, int* ok, char** report);
INSC_API insc_status insc_polytope_to_off(const insc_polytope* p, int digits, char** out);
/* Vertices i, j of the output are adjacent exactly when |i - j| <= d. */
INSC_API insc_status insc_bounded_degree(int d, int n, int halving_cap, insc_polytope** out);
/* Inscribed (n+3)-gon, the d = 2 case of every build. */
INSC_API insc_status insc_polygon(int n, insc_polytope** out);
/* method: "standard", "spherical" or "trig"; default parameters. */
INSC_API insc_status insc_cyclic(const char* method, int d, int n, insc_polytope** out);

/* Builds. scale is "p/q" text (NULL means 1); halving_cap <= 0 means 256. */
INSC_API insc_status insc_build_path(int d, int n, const char* scale, int halving_cap, insc_build** out);
INSC_API insc_status insc_build_plan(const insc_plan* p, int d, const char* scale, int halving_cap, insc_build** out);
/* apex < 0 picks the smallest leaf. */
INSC_API insc_status insc_build_tree(const insc_tree* t, int apex, int d, const char* scale, int halving_cap,
                                     insc_build** out);
INSC_API void insc_build_free(insc_build* b);
INSC_API insc_status insc_build_triangulation(const insc_build* b, insc_triangulation** out);
INSC_API insc_status insc_build_polytope(const insc_build* b, insc_polytope** out);
INSC_API insc_status insc_build_trace_json(const insc_build* b, char** out);
/* The plan that was executed; NULL into *out when the build is a bare simplex. */
INSC_API insc_status insc_build_plan_json(const insc_build* b, char** out);
/* Delaunay modes 1 and 4, trace replay, and the inscribed-polytope checks. */
INSC_API insc_status insc_build_verify(const insc_build* b, int* ok, char** report);

/* Replays a trace document into the triangulation it records. */
INSC_API insc_status insc_trace_replay(const char* trace_json, insc_triangulation** out);

/* f-vector families as CSV with header f0,f1,f2,family. */
INSC_API insc_status insc_fvectors_csv(long long f0_max, char** out);

/* Obstruction sweep for a tree with a node of degree >= 4. all_violated is 1
 * when every trial showed a Delaunay violation. */
INSC_API insc_status insc_certify(const insc_tree* t, int d, int trials, uint64_t seed, int* all_violated,
                                  char** report);

#ifdef __cplusplus
}
#endif

#endif /* INSCRIBER_H */
