#pragma once

// Inscribed cyclic polytopes three ways, Gale's evenness criterion, and the
// f-vector families of inscribable 3-polytopes.

#include <string>
#include <vector>

#include "inscriber/builder.hpp"

namespace inscriber {

// d-subsets of {1..n} (1-based) passing Gale's evenness condition, sorted.
std::vector<Face> gale_evenness_facets(int d, int n);

// Facet count of C_d(n) in closed form.
unsigned long long cyclic_facet_count(int d, int n);

// Simplicial facets of the convex hull of points in general position in R^d,
// by testing every d-subset. Throws DegeneratePointSet on a non-simplicial
// face.
std::vector<Face> facets_by_enumeration(const std::vector<Point>& vertices, int d);

struct CyclicStandard {
  InscribedPolytope polytope;  // curve points in parameter order, north pole last
  std::vector<Scalar> params;  // n-1 parameters
};

// Moment-curve points in R^(d-1), each parameter grown until the new point
// clears every circumsphere of the Delaunay triangulation so far; then lifted.
CyclicStandard cyclic_standard(int d, int n, int growth_cap = 64);

// Curve (1, t, ..., t^(d-1)) / (1 + t^2 + ... + t^(2d-2)), which lies on the
// sphere around e_1/2 through the origin, mapped onto the unit sphere.
InscribedPolytope cyclic_spherical(int d, int n, const std::vector<Scalar>& params);

// Trigonometric moment curve at half-angle tangents s: vertex coordinates
// (cos jt, sin jt), j = 1..d/2, on the sphere of squared radius d/2. Vertices
// come out sorted by s.
InscribedPolytope cyclic_trig(int d, int n, const std::vector<Scalar>& half_tangents);

std::vector<Scalar> default_spherical_params(int n);
std::vector<Scalar> default_half_tangents(int n);

struct FVector3 {
  long long f0, f1, f2;
  auto operator<=>(const FVector3&) const = default;
};

struct FamilyVector {
  FVector3 f;
  std::vector<std::string> families;  // subset of left, middle, right
};

FamilyVector family_value(const std::string& family, long long n, long long k);

// All family members with f0 <= f0_max, merged by f-vector, sorted.
std::vector<FamilyVector> fvector_families(long long f0_max);

bool steinitz_member(long long f0, long long f2);

// "f0,f1,f2,family" rows; merged families are joined with '|'.
std::string fvectors_csv(const std::vector<FamilyVector>& rows);

}  // namespace inscriber
