#include "inscriber/kernel.hpp"

#include <algorithm>
#include <cctype>

namespace inscriber {

Point Line::at(const Scalar& lambda) const { return add(base, scale(direction, lambda)); }

std::string to_string(const Scalar& s) { return s.get_str(10); }

Scalar parse_scalar(std::string_view text) {
  std::string t(text);
  const bool ok = !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/';
  });
  if (!ok) fail(Errc::ParseError, "not a rational: '" + t + "'");
  mpq_class q;
  if (q.set_str(t, 10) != 0) fail(Errc::ParseError, "not a rational: '" + t + "'");
  if (sgn(q.get_den()) == 0) fail(Errc::ParseError, "zero denominator: '" + t + "'");
  q.canonicalize();
  return q;
}

Point add(const Point& a, const Point& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "add");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "sub");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale(const Point& a, const Scalar& s) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Scalar dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "dot");
  Scalar r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Scalar norm_sq(const Point& a) { return dot(a, a); }

Scalar dist_sq(const Point& a, const Point& b) { return norm_sq(sub(a, b)); }

bool is_zero(const Point& a) {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Point primitive_direction(const Point& a) {
  mpz_class den = 1;
  for (const auto& s : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.get_den_mpz_t());
  mpz_class content = 0;
  std::vector<mpz_class> ints;
  for (const auto& s : a) {
    mpz_class v = s.get_num() * (den / s.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (content == 0) return a;
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpq_class(ints[i] / content);
  return r;
}

void require_dimension(std::span<const Point> pts, std::size_t dim) {
  for (const auto& p : pts)
    if (p.size() != dim)
      fail(Errc::DimensionMismatch,
           "expected dimension " + std::to_string(dim) + ", got " + std::to_string(p.size()));
}

int orientation(std::span<const Point> simplex) {
  if (simplex.empty()) fail(Errc::DimensionMismatch, "empty simplex");
  const std::size_t m = simplex.size() - 1;
  require_dimension(simplex, m);
  Matrix rows;
  rows.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) rows.push_back(sub(simplex[i], simplex[0]));
  return sgn(determinant(std::move(rows)));
}

Sphere circumsphere(std::span<const Point> simplex) {
  if (simplex.empty()) fail(Errc::DegenerateSimplex, "empty point set");
  const std::size_t m = simplex[0].size();
  require_dimension(simplex, m);
  const std::size_t k = simplex.size() - 1;
  if (k > m) fail(Errc::DegenerateSimplex, "more than m+1 points");
  std::vector<Point> edges;
  for (std::size_t i = 1; i <= k; ++i) edges.push_back(sub(simplex[i], simplex[0]));
  // center = p0 + sum alpha_j e_j with 2 <e_i, e_j> alpha_j = |e_i|^2
  Matrix gram(k, std::vector<Scalar>(k));
  Point rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = 2 * dot(edges[i], edges[j]);
    rhs[i] = norm_sq(edges[i]);
  }
  auto alpha = solve_unique(gram, rhs);
  if (!alpha) fail(Errc::DegenerateSimplex, "affinely dependent points");
  Point center = simplex[0];
  for (std::size_t j = 0; j < k; ++j) center = add(center, scale(edges[j], (*alpha)[j]));
  Scalar r2 = dist_sq(center, simplex[0]);
  return Sphere{std::move(center), std::move(r2)};
}

SphereSide sphere_side(const Sphere& s, const Point& p) {
  if (p.size() != s.center.size()) fail(Errc::DimensionMismatch, "sphere_side");
  const int c = cmp(dist_sq(p, s.center), s.radius_sq);
  return c < 0 ? SphereSide::Inside : c == 0 ? SphereSide::On : SphereSide::Outside;
}

Side hyperplane_side(const Hyperplane& h, const Point& p) {
  if (p.size() != h.normal.size()) fail(Errc::DimensionMismatch, "hyperplane_side");
  const int c = cmp(dot(h.normal, p), h.offset);
  return c < 0 ? Side::Negative : c == 0 ? Side::On : Side::Positive;
}

SphereSide insphere_by_determinant(std::span<const Point> simplex, const Point& p) {
  const std::size_t m = simplex.size() - 1;
  require_dimension(simplex, m);
  if (p.size() != m) fail(Errc::DimensionMismatch, "insphere");
  const int orient = orientation(simplex);
  if (orient == 0) fail(Errc::DegenerateSimplex, "insphere of a flat simplex");
  Matrix rows;
  for (const auto& v : simplex) {
    Point row = sub(v, p);
    row.push_back(norm_sq(row));
    rows.push_back(std::move(row));
  }
  // Subtracting the first row turns this into the edge-based determinant of
  // the lifted points; its sign relative to the orientation decides the side.
  int s = sgn(determinant(std::move(rows))) * orient;
  if (m % 2 == 1) s = -s;
  return s > 0 ? SphereSide::Inside : s == 0 ? SphereSide::On : SphereSide::Outside;
}

std::optional<Point> barycentric(std::span<const Point> simplex, const Point& p) {
  const std::size_t k = simplex.size() - 1;
  const std::size_t m = p.size();
  require_dimension(simplex, m);
  Matrix a(m, std::vector<Scalar>(k));
  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t i = 0; i < m; ++i) a[i][j - 1] = simplex[j][i] - simplex[0][i];
  auto x = solve_unique(a, sub(p, simplex[0]));
  if (!x) return std::nullopt;
  Point bary(k + 1);
  Scalar rest = 1;
  for (std::size_t j = 0; j < k; ++j) {
    bary[j + 1] = (*x)[j];
    rest -= (*x)[j];
  }
  bary[0] = rest;
  return bary;
}

bool strictly_inside(std::span<const Point> simplex, const Point& p) {
  auto b = barycentric(simplex, p);
  if (!b) return false;
  return std::all_of(b->begin(), b->end(), [](const Scalar& s) { return sgn(s) > 0; });
}

Point invert_in_sphere(const Point& center, const Scalar& radius_sq, const Point& p) {
  const Point diff = sub(p, center);
  const Scalar n = norm_sq(diff);
  if (sgn(n) == 0) fail(Errc::CenterInversion, "point coincides with the inversion center");
  return add(center, scale(diff, radius_sq / n));
}

Point stereographic_project(const Point& p) {
  if (p.size() < 2) fail(Errc::DimensionMismatch, "stereographic projection needs d >= 2");
  if (norm_sq(p) != 1) fail(Errc::NotOnSphere, "point is not on the unit sphere");
  const Scalar last = p.back();
  if (last == 1) fail(Errc::NorthPole, "cannot project the north pole");
  const Scalar s = 1 / (1 - last);
  Point q(p.begin(), p.end() - 1);
  for (auto& v : q) v *= s;
  return q;
}

Point inverse_stereographic(const Point& q) {
  const Scalar n = norm_sq(q);
  const Scalar den = n + 1;
  Point p;
  p.reserve(q.size() + 1);
  for (const auto& v : q) p.push_back(2 * v / den);
  p.push_back((n - 1) / den);
  return p;
}

Scalar line_sphere_second_root(const Line& l, const Sphere& s, const Scalar& known) {
  if (l.base.size() != s.center.size()) fail(Errc::DimensionMismatch, "line/sphere");
  if (is_zero(l.direction)) fail(Errc::DegenerateSimplex, "zero line direction");
  if (sphere_side(s, l.at(known)) != SphereSide::On)
    fail(Errc::NotOnSphere, "the known parameter is not on the sphere");
  // |u|^2 t^2 + 2 <u, b - c> t + ... = 0, sum of roots = -2 <u, b - c> / |u|^2
  const Scalar sum = -2 * dot(l.direction, sub(l.base, s.center)) / norm_sq(l.direction);
  return sum - known;
}

Line affine_intersection_line(std::span<const Point> span_a, std::span<const Point> span_b) {
  if (span_a.empty() || span_b.empty()) fail(Errc::EmptyIntersection, "empty span");
  const std::size_t m = span_a[0].size();
  require_dimension(span_a, m);
  require_dimension(span_b, m);
  if (span_a[0] != span_b[0]) fail(Errc::EmptyIntersection, "spans must share their first point");
  std::vector<Point> cols;
  for (std::size_t i = 1; i < span_a.size(); ++i) cols.push_back(sub(span_a[i], span_a[0]));
  const std::size_t na = cols.size();
  for (std::size_t i = 1; i < span_b.size(); ++i) cols.push_back(scale(sub(span_b[i], span_b[0]), -1));
  Matrix mat(m, std::vector<Scalar>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) mat[i][j] = cols[j][i];
  for (const auto& k : kernel_basis(mat, cols.size())) {
    Point dir(m, Scalar(0));
    for (std::size_t j = 0; j < na; ++j) dir = add(dir, scale(cols[j], k[j]));
    if (!is_zero(dir)) return Line{span_a[0], primitive_direction(dir)};
  }
  fail(Errc::EmptyIntersection, "direction spaces meet only in 0");
}

Hyperplane hyperplane_through(std::span<const Point> pts) {
  const std::size_t d = pts.size();
  require_dimension(pts, d);
  Matrix rows;
  for (std::size_t i = 1; i < d; ++i) rows.push_back(sub(pts[i], pts[0]));
  auto k = kernel_basis(rows, d);
  if (k.size() != 1) fail(Errc::DegenerateSimplex, "points do not span a hyperplane");
  Point n = primitive_direction(k[0]);
  Scalar off = dot(n, pts[0]);
  return Hyperplane{std::move(n), std::move(off)};
}

}  // namespace inscriber
