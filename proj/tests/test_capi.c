/* Exercises the shared library from plain C: handle lifetimes, status codes,
 * last-error text and the JSON strings handed across the boundary. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "inscriber/inscriber.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void trees(void) {
  insc_tree* t = NULL;
  EXPECT(insc_tree_parse("{\"nodes\": 5, \"edges\": [[0,1],[0,2],[0,3],[0,4]]}", &t) == INSC_OK);
  int ok = -1, degree = -1, witness = -2;
  EXPECT(insc_tree_decide(t, &ok, &degree, &witness) == INSC_OK);
  EXPECT(ok == 0 && degree == 4 && witness == 0);
  int apex = -1;
  EXPECT(insc_tree_default_apex(t, &apex) == INSC_OK && apex == 1);

  insc_build* b = NULL;
  EXPECT(insc_build_tree(t, -1, 3, NULL, 0, &b) == INSC_E_PLAN_NOT_BUILDABLE);
  EXPECT(b == NULL);
  EXPECT(strncmp(insc_last_error(), "PlanNotBuildable", 16) == 0);

  char* report = NULL;
  int all = 0;
  EXPECT(insc_certify(t, 4, 8, 11, &all, &report) == INSC_OK);
  EXPECT(all == 1);
  EXPECT(report != NULL && strstr(report, "\"witness_node\"") != NULL);
  insc_string_free(report);
  insc_tree_free(t);

  insc_tree* path = NULL;
  EXPECT(insc_tree_parse("{\"nodes\": 3, \"edges\": [[0,1],[1,2]]}", &path) == INSC_OK);
  EXPECT(insc_tree_decide(path, &ok, &degree, &witness) == INSC_OK);
  EXPECT(ok == 1 && witness == -1);
  EXPECT(insc_certify(path, 3, 4, 1, &all, NULL) == INSC_E_NOT_OBSTRUCTED);
  EXPECT(insc_build_tree(path, -1, 3, NULL, 0, &b) == INSC_OK);
  EXPECT(insc_last_error()[0] == '\0');
  insc_build_free(b);
  insc_tree_free(path);

  EXPECT(insc_tree_parse("{\"nodes\": 3, \"edges\": [[0,1]]}", &t) == INSC_E_INVALID_TREE);
  EXPECT(insc_tree_parse("not json", &t) == INSC_E_PARSE_ERROR);
}

static void builds(void) {
  insc_build* b = NULL;
  EXPECT(insc_build_path(3, 5, "3/2", 0, &b) == INSC_OK);
  int ok = 0;
  char* report = NULL;
  EXPECT(insc_build_verify(b, &ok, &report) == INSC_OK && ok == 1);
  EXPECT(strstr(report, "\"replay_identical\": true") != NULL);
  insc_string_free(report);

  insc_triangulation* t = NULL;
  EXPECT(insc_build_triangulation(b, &t) == INSC_OK);
  for (int mode = 1; mode <= 4; ++mode) {
    EXPECT(insc_triangulation_check_delaunay(t, mode, &ok, NULL) == INSC_OK && ok == 1);
  }
  EXPECT(insc_triangulation_check_delaunay(t, 5, &ok, NULL) == INSC_E_BAD_PARAMETERS);

  char* trace = NULL;
  EXPECT(insc_build_trace_json(b, &trace) == INSC_OK);
  insc_triangulation* replayed = NULL;
  EXPECT(insc_trace_replay(trace, &replayed) == INSC_OK);
  char *a = NULL, *c = NULL;
  insc_triangulation_to_json(t, &a);
  insc_triangulation_to_json(replayed, &c);
  EXPECT(a && c && strcmp(a, c) == 0);
  insc_string_free(a);
  insc_string_free(c);
  insc_string_free(trace);
  insc_triangulation_free(replayed);

  insc_polytope* p = NULL;
  EXPECT(insc_triangulation_lift(t, &p) == INSC_OK);
  EXPECT(insc_polytope_verify(p, &ok, NULL) == INSC_OK && ok == 1);
  char* off = NULL;
  EXPECT(insc_polytope_to_off(p, 8, &off) == INSC_OK);
  EXPECT(strncmp(off, "OFF\n", 4) == 0);
  insc_string_free(off);
  insc_polytope_free(p);
  insc_triangulation_free(t);

  char* plan = NULL;
  EXPECT(insc_build_plan_json(b, &plan) == INSC_OK && plan != NULL);
  insc_plan* parsed = NULL;
  EXPECT(insc_plan_parse(plan, &parsed) == INSC_OK);
  EXPECT(insc_plan_dimension(parsed) == 3);
  int diagnosis = -1, node = -2;
  EXPECT(insc_plan_check(parsed, 0, &diagnosis, &node) == INSC_OK && diagnosis == 0 && node == -1);
  insc_plan_free(parsed);
  insc_string_free(plan);
  insc_build_free(b);

  EXPECT(insc_plan_parse("{\"d\": 3, \"root\": 0, \"children\": {\"0\": [{\"node\": 1}, {\"node\": 2}, {\"node\": 3}]}}",
                         &parsed) == INSC_OK);
  EXPECT(insc_plan_check(parsed, 0, &diagnosis, &node) == INSC_OK && diagnosis == 1 && node == 0);
  EXPECT(insc_build_plan(parsed, 0, NULL, 0, &b) == INSC_E_PLAN_NOT_BUILDABLE);
  insc_plan_free(parsed);

  EXPECT(insc_build_path(3, 2, "0", 0, &b) == INSC_E_BAD_PARAMETERS);
  EXPECT(insc_build_path(3, 2, "x", 0, &b) == INSC_E_PARSE_ERROR);
}

static void generators(void) {
  insc_polytope* p = NULL;
  int ok = 0;
  EXPECT(insc_cyclic("spherical", 4, 7, &p) == INSC_OK);
  EXPECT(insc_polytope_verify(p, &ok, NULL) == INSC_OK && ok == 1);
  insc_polytope_free(p);
  EXPECT(insc_cyclic("trig", 3, 6, &p) == INSC_E_ODD_DIMENSION);
  EXPECT(insc_cyclic("moment", 3, 6, &p) == INSC_E_BAD_PARAMETERS);
  EXPECT(insc_bounded_degree(4, 3, 0, &p) == INSC_OK);
  insc_polytope_free(p);
  EXPECT(insc_polygon(2, &p) == INSC_OK);
  insc_polytope_free(p);

  char* csv = NULL;
  EXPECT(insc_fvectors_csv(6, &csv) == INSC_OK);
  EXPECT(strncmp(csv, "f0,f1,f2,family\n4,6,4,left\n", 27) == 0);
  insc_string_free(csv);
}

static void boundary(void) {
  EXPECT(insc_tree_parse(NULL, NULL) == INSC_E_NULL_ARGUMENT);
  EXPECT(insc_polytope_verify(NULL, NULL, NULL) == INSC_E_NULL_ARGUMENT);
  EXPECT(strcmp(insc_status_name(INSC_OK), "Ok") == 0);
  EXPECT(strcmp(insc_status_name(INSC_E_NOT_DELAUNAY), "NotDelaunay") == 0);
  EXPECT(strcmp(insc_status_name(INSC_E_INTERNAL), "Internal") == 0);
  EXPECT(insc_version()[0] != '\0');
  /* Freeing NULL is a no-op for every handle type. */
  insc_tree_free(NULL);
  insc_plan_free(NULL);
  insc_triangulation_free(NULL);
  insc_polytope_free(NULL);
  insc_build_free(NULL);
  insc_string_free(NULL);
}

int main(void) {
  trees();
  builds();
  generators();
  boundary();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
