#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inscriber/kernel.hpp"

namespace inscriber {

// Sorted vertex indices of a simplex (facet, ridge or lower face).
using Face = std::vector<int>;

// Pure simplicial complex of full dimension m in R^m with exact vertices.
// Immutable: operations return new triangulations.
class Triangulation {
 public:
  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  // Lexicographically sorted.
  const std::vector<Face>& facets() const { return facets_; }
  // ridge -> indices into facets(); one entry on the boundary, two inside.
  const std::map<Face, std::vector<std::size_t>>& ridges() const { return ridges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t facet_count() const { return facets_.size(); }
  std::optional<std::size_t> find_facet(const Face& f) const;
  std::vector<Point> points_of(const Face& f) const;
  std::vector<Face> boundary_ridges() const;
  std::vector<Face> interior_ridges() const;

  // Trusted construction used by operations that preserve the invariants by
  // construction; only rebuilds adjacency and checks the pseudomanifold
  // condition.
  static Triangulation assemble(int dim, std::vector<Point> vertices, std::vector<Face> facets);

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Face> facets_;
  std::map<Face, std::vector<std::size_t>> ridges_;
};

// Validates every invariant: affinely independent facets, pseudomanifold,
// no dangling vertex, facets with disjoint interiors covering the convex hull.
Triangulation build_triangulation(int dim, std::vector<Point> vertices, std::vector<Face> facets);

Triangulation stellar_subdivide(const Triangulation& t, const Face& facet, const Point& p);
Triangulation undo_stellar(const Triangulation& t, int v);

int vertex_degree(const Triangulation& t, int v);
bool is_interior_vertex(const Triangulation& t, int v);

enum class DelaunayMode { FacetsEmpty = 1, AllFacesSupported = 2, RidgesSupported = 3, InteriorRidgesLocal = 4 };

const char* mode_name(DelaunayMode mode);

struct Violation {
  Face face;
  int witness;
  auto operator<=>(const Violation&) const = default;
};

struct DelaunayReport {
  DelaunayMode mode;
  bool ok;
  std::vector<Violation> violations;  // sorted
};

DelaunayReport check_delaunay(const Triangulation& t, DelaunayMode mode);

// Does some sphere through the face vertices have every other listed vertex
// strictly outside? Decided exactly; `witness` receives the first vertex (in
// the given order) whose constraint makes the system infeasible.
bool has_supporting_sphere(const std::vector<Point>& face, const std::vector<Point>& others,
                           std::size_t* witness = nullptr);

// All affinely independent (m+1)-subsets with empty circumsphere. Refuses
// inputs with m+2 cospherical (or co-hyperplanar) points.
Triangulation brute_force_delaunay(const std::vector<Point>& points);

// |det| of the edge matrix, i.e. m! times the volume.
Scalar scaled_volume(const std::vector<Point>& simplex);

}  // namespace inscriber
