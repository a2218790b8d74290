#pragma once

// Exact rational geometry: spheres, hyperplanes, lines, orientation and
// in-sphere predicates, sphere inversion and stereographic projection.
//
// Nothing in here ever rounds. Spheres carry squared radii so that every
// construction stays inside the rationals.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inscriber/error.hpp"
#include "inscriber/linalg.hpp"

namespace inscriber {

struct Sphere {
  Point center;
  Scalar radius_sq;
};

// The locus <normal, x> = offset.
struct Hyperplane {
  Point normal;
  Scalar offset;
};

// base + lambda * direction
struct Line {
  Point base;
  Point direction;

  Point at(const Scalar& lambda) const;
};

enum class SphereSide { Inside, On, Outside };
enum class Side { Negative, On, Positive };

// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Scalar& s);
Scalar parse_scalar(std::string_view text);

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Point& a, const Scalar& s);
Scalar dot(const Point& a, const Point& b);
Scalar norm_sq(const Point& a);
Scalar dist_sq(const Point& a, const Point& b);
bool is_zero(const Point& a);

// Multiplies by the common denominator and divides by the content, so the
// direction keeps its orientation but gets small integer entries.
Point primitive_direction(const Point& a);

void require_dimension(std::span<const Point> pts, std::size_t dim);

// Sign of det[p1 - p0, ..., pm - p0] for m+1 points in R^m.
int orientation(std::span<const Point> simplex);

// Sphere through k+1 affinely independent points with center in their affine
// hull (k <= m). For a full simplex this is the circumsphere.
Sphere circumsphere(std::span<const Point> simplex);

SphereSide sphere_side(const Sphere& s, const Point& p);
Side hyperplane_side(const Hyperplane& h, const Point& p);

// In-sphere test via the lifted (m+2)x(m+2) determinant, independent of the
// center/radius route above.
SphereSide insphere_by_determinant(std::span<const Point> simplex, const Point& p);

// Barycentric coordinates of p relative to k+1 affinely independent points.
// Empty if p is not in their affine hull.
std::optional<Point> barycentric(std::span<const Point> simplex, const Point& p);
bool strictly_inside(std::span<const Point> simplex, const Point& p);

Point invert_in_sphere(const Point& center, const Scalar& radius_sq, const Point& p);

// Unit sphere in R^d, north pole (0, ..., 0, 1), projection onto x_d = 0.
Point stereographic_project(const Point& p);
Point inverse_stereographic(const Point& q);

// The line meets s at parameter `known`; returns the other root (equal to
// `known` for a tangent line).
Scalar line_sphere_second_root(const Line& l, const Sphere& s, const Scalar& known);

// Line through the common first point of both spans, along a direction lying
// in both direction spaces.
Line affine_intersection_line(std::span<const Point> span_a, std::span<const Point> span_b);

// Hyperplane through d affinely independent points in R^d.
Hyperplane hyperplane_through(std::span<const Point> pts);

}  // namespace inscriber
