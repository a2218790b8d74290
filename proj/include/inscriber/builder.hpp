#pragma once

// Realizations of buildable subdivision plans as exact Delaunay
// triangulations, and their lift to inscribed polytopes.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inscriber/complex.hpp"
#include "inscriber/trees.hpp"

namespace inscriber {

struct InscribedPolytope {
  int d = 0;
  std::vector<Point> vertices;
  std::optional<int> north;
  std::vector<Face> facets;  // sorted d-element index sets
  // Circumscribing sphere; the unit sphere unless a generator says otherwise.
  Sphere sphere;
};

Sphere unit_sphere(int d);

struct TraceStep {
  int node;
  Face facet;  // the facet that was subdivided
  Point point;
  int vertex;  // index the point received
  std::optional<Line> line;
  std::optional<Scalar> lambda;
  std::size_t denominator_bits;
};

struct BuildTrace {
  int d = 0;
  std::vector<Point> initial_simplex;
  std::vector<TraceStep> steps;
};

struct BuildResult {
  Triangulation triangulation;
  BuildTrace trace;
  std::map<int, int> node_vertex;
};

struct BuildOptions {
  Scalar scale = 1;
  int halving_cap = 256;
};

// Scaled standard simplex in R^(d-1), stellar-subdivided at its barycenter
// (vertex index d).
Triangulation init_root(int d, const Scalar& scale);

// Line through c tangent to the circumspheres of the kept facets.
Line tangent_line(const Triangulation& t, int c, const std::vector<Face>& keep);

struct ChosenPoints {
  Point x1;
  Point x2;
  Scalar lambda;
};

// x1 = c + lambda*dir in relint f1, x2 = c - lambda*dir in relint f2, both
// outside every circumsphere of a facet avoiding c. |lambda| is halved from 1
// until that holds; its sign selects which way along the line x1 lies.
ChosenPoints choose_points(const Triangulation& t, int c, const Face& f1, const Face& f2, const Line& line,
                           int halving_cap = 256);

struct Expansion {
  Triangulation triangulation;
  std::vector<int> new_vertices;  // one per requested face, same order
  Line line;
  ChosenPoints points;
};

// Subdivides one or two facets at the interior degree-d vertex c, keeping the
// triangulation Delaunay. With one face a second facet at c plays the part of
// f2 but is left alone.
Expansion expand_at(const Triangulation& t, int c, const std::vector<Face>& faces, int halving_cap = 256);

BuildResult build_from_plan(const RootedPlan& p, int d, const BuildOptions& opts = {});

// n points on the ray from vertex 0 through the barycenter.
BuildResult build_path(int d, int n, const BuildOptions& opts = {});

// Polytope with dual tree t; the leaf `apex` carries the north pole.
struct TreeBuild {
  std::optional<RootedPlan> plan;
  BuildResult build;
};
TreeBuild build_from_tree(const DualTree& t, int apex, int d, const BuildOptions& opts = {});

// Replays the steps from the initial simplex.
Triangulation replay(const BuildTrace& trace);

// The rooted subdivision tree recorded in a trace.
RootedPlan recovered_plan(const BuildTrace& trace);

// Inverse stereographic lift plus the north pole. With require_simplex the
// support must be a simplex with nothing but its corners on the boundary.
InscribedPolytope lift_to_inscribed(const Triangulation& t, bool require_simplex = true);

struct PolytopeViolation {
  std::string check;  // "sphere", "support", "ridge", "shape"
  Face face;
  int witness;
};

struct InscribedReport {
  bool ok;
  std::vector<PolytopeViolation> violations;
};

InscribedReport verify_inscribed(const InscribedPolytope& p);

// Vertices labeled so that i and j are adjacent iff |i - j| <= d; the north
// pole is vertex 0.
InscribedPolytope build_bounded_degree(int d, int n, int halving_cap = 256);

// Convex (3+n)-gon on the unit circle with the north pole as last vertex.
InscribedPolytope inscribed_polygon(int n);

// Edge graph of a polytope as adjacency sets.
std::vector<std::vector<int>> vertex_adjacency(const InscribedPolytope& p);

}  // namespace inscriber
