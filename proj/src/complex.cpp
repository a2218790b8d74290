#include "inscriber/complex.hpp"

#include <algorithm>
#include <set>

#include "inscriber/subsets.hpp"

namespace inscriber {

namespace {

Face without(const Face& f, std::size_t pos) {
  Face r;
  r.reserve(f.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != pos) r.push_back(f[i]);
  return r;
}

int opposite_vertex(const Face& facet, const Face& ridge) {
  for (int v : facet)
    if (!std::binary_search(ridge.begin(), ridge.end(), v)) return v;
  return -1;
}

std::string face_str(const Face& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

// A strict linear system: each row says constant + <coeffs, t> > 0.
struct StrictRow {
  std::vector<Scalar> coeffs;
  Scalar constant;
};

bool strict_feasible(std::vector<StrictRow> rows, std::size_t vars) {
  for (std::size_t var = vars; var-- > 0;) {
    std::vector<StrictRow> pos, neg, next;
    for (auto& r : rows) {
      const int s = sgn(r.coeffs[var]);
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Scalar wp = -n.coeffs[var];
        const Scalar wn = p.coeffs[var];
        StrictRow c;
        c.coeffs.resize(var);
        for (std::size_t j = 0; j < var; ++j) c.coeffs[j] = wp * p.coeffs[j] + wn * n.coeffs[j];
        c.constant = wp * p.constant + wn * n.constant;
        next.push_back(std::move(c));
      }
    }
    for (auto& r : next) r.coeffs.resize(var);
    rows = std::move(next);
  }
  return std::all_of(rows.begin(), rows.end(), [](const StrictRow& r) { return sgn(r.constant) > 0; });
}

}  // namespace

std::optional<std::size_t> Triangulation::find_facet(const Face& f) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
  if (it == facets_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

std::vector<Point> Triangulation::points_of(const Face& f) const {
  std::vector<Point> pts;
  pts.reserve(f.size());
  for (int v : f) pts.push_back(vertices_.at(v));
  return pts;
}

std::vector<Face> Triangulation::boundary_ridges() const {
  std::vector<Face> out;
  for (const auto& [r, fs] : ridges_)
    if (fs.size() == 1) out.push_back(r);
  return out;
}

std::vector<Face> Triangulation::interior_ridges() const {
  std::vector<Face> out;
  for (const auto& [r, fs] : ridges_)
    if (fs.size() == 2) out.push_back(r);
  return out;
}

Triangulation Triangulation::assemble(int dim, std::vector<Point> vertices, std::vector<Face> facets) {
  Triangulation t;
  t.dim_ = dim;
  t.vertices_ = std::move(vertices);
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
    fail(Errc::DegenerateFacet, "duplicate facet");
  t.facets_ = std::move(facets);
  for (std::size_t i = 0; i < t.facets_.size(); ++i) {
    const Face& f = t.facets_[i];
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
      auto& slot = t.ridges_[without(f, pos)];
      slot.push_back(i);
      if (slot.size() > 2)
        fail(Errc::NonManifoldRidge, "ridge " + face_str(without(f, pos)) + " lies in three or more facets");
    }
  }
  return t;
}

Triangulation build_triangulation(int dim, std::vector<Point> vertices, std::vector<Face> facets) {
  if (dim < 2) fail(Errc::BadDimension, "triangulations need dimension >= 2");
  require_dimension(vertices, dim);
  const int n = static_cast<int>(vertices.size());
  std::vector<bool> used(n, false);
  for (auto& f : facets) {
    if (static_cast<int>(f.size()) != dim + 1) fail(Errc::DegenerateFacet, "facet " + face_str(f) + " has wrong size");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      fail(Errc::DegenerateFacet, "facet " + face_str(f) + " repeats a vertex");
    for (int v : f) {
      if (v < 0 || v >= n) fail(Errc::UnknownVertex, "facet " + face_str(f) + " references a missing vertex");
      used[v] = true;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!used[v]) fail(Errc::DanglingVertex, "vertex " + std::to_string(v) + " is in no facet");

  Triangulation t = Triangulation::assemble(dim, std::move(vertices), std::move(facets));
  for (const auto& f : t.facets())
    if (orientation(t.points_of(f)) == 0) fail(Errc::DegenerateFacet, "facet " + face_str(f) + " is flat");

  for (const auto& [ridge, fs] : t.ridges()) {
    const auto pts = t.points_of(ridge);
    // The ridge hyperplane, oriented by an arbitrary opposite vertex.
    std::vector<Point> probe = pts;
    probe.push_back(t.vertices()[opposite_vertex(t.facets()[fs[0]], ridge)]);
    const int side0 = orientation(probe);
    if (fs.size() == 2) {
      probe.back() = t.vertices()[opposite_vertex(t.facets()[fs[1]], ridge)];
      if (orientation(probe) != -side0)
        fail(Errc::OverlappingFacets, "facets at ridge " + face_str(ridge) + " fold over");
    } else {
      for (const auto& w : t.vertices()) {
        probe.back() = w;
        if (orientation(probe) == -side0)
          fail(Errc::NonConvexSupport, "boundary ridge " + face_str(ridge) + " is not on the hull");
      }
    }
  }

  // Barycenter sampling: each facet's barycenter must avoid every other
  // closed facet.
  std::vector<Point> bary;
  for (const auto& f : t.facets()) {
    Point b(dim, Scalar(0));
    for (int v : f) b = add(b, t.vertices()[v]);
    bary.push_back(scale(b, Scalar(1, dim + 1)));
  }
  for (std::size_t i = 0; i < t.facet_count(); ++i) {
    for (std::size_t j = 0; j < t.facet_count(); ++j) {
      if (i == j) continue;
      auto b = barycentric(t.points_of(t.facets()[j]), bary[i]);
      if (b && std::all_of(b->begin(), b->end(), [](const Scalar& s) { return sgn(s) >= 0; }))
        fail(Errc::OverlappingFacets,
             "facets " + face_str(t.facets()[i]) + " and " + face_str(t.facets()[j]) + " overlap");
    }
  }
  return t;
}

Triangulation stellar_subdivide(const Triangulation& t, const Face& facet, const Point& p) {
  Face key = facet;
  std::sort(key.begin(), key.end());
  if (!t.find_facet(key)) fail(Errc::UnknownFacet, "no facet " + face_str(key));
  if (p.size() != static_cast<std::size_t>(t.dim())) fail(Errc::DimensionMismatch, "subdivision point");
  if (!strictly_inside(t.points_of(key), p))
    fail(Errc::NotInterior, "point is not strictly inside facet " + face_str(key));
  const int fresh = static_cast<int>(t.vertex_count());
  std::vector<Face> facets;
  for (const auto& f : t.facets())
    if (f != key) facets.push_back(f);
  for (std::size_t pos = 0; pos < key.size(); ++pos) {
    Face nf = without(key, pos);
    nf.push_back(fresh);
    facets.push_back(std::move(nf));
  }
  std::vector<Point> verts = t.vertices();
  verts.push_back(p);
  return Triangulation::assemble(t.dim(), std::move(verts), std::move(facets));
}

Triangulation undo_stellar(const Triangulation& t, int v) {
  if (v < 0 || v >= static_cast<int>(t.vertex_count())) fail(Errc::UnknownVertex, std::to_string(v));
  const int m = t.dim();
  if (!is_interior_vertex(t, v) || vertex_degree(t, v) != m + 1)
    fail(Errc::NotSimpleInterior, "vertex " + std::to_string(v) + " is not interior of degree " + std::to_string(m + 1));
  std::set<int> link;
  std::vector<Face> star;
  for (const auto& f : t.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    star.push_back(f);
    for (int w : f)
      if (w != v) link.insert(w);
  }
  if (static_cast<int>(link.size()) != m + 1)
    fail(Errc::NotSimpleInterior, "star of vertex " + std::to_string(v) + " is not a subdivided simplex");
  Face merged(link.begin(), link.end());
  if (!strictly_inside(t.points_of(merged), t.vertices()[v]))
    fail(Errc::NotSimpleInterior, "vertex " + std::to_string(v) + " is not inside its link simplex");

  auto relabel = [v](int w) { return w > v ? w - 1 : w; };
  std::vector<Face> facets;
  for (const auto& f : t.facets()) {
    if (std::binary_search(f.begin(), f.end(), v)) continue;
    Face g;
    for (int w : f) g.push_back(relabel(w));
    facets.push_back(std::move(g));
  }
  Face g;
  for (int w : merged) g.push_back(relabel(w));
  facets.push_back(std::move(g));
  std::vector<Point> verts;
  for (int w = 0; w < static_cast<int>(t.vertex_count()); ++w)
    if (w != v) verts.push_back(t.vertices()[w]);
  return Triangulation::assemble(m, std::move(verts), std::move(facets));
}

int vertex_degree(const Triangulation& t, int v) {
  if (v < 0 || v >= static_cast<int>(t.vertex_count())) fail(Errc::UnknownVertex, std::to_string(v));
  int deg = 0;
  for (const auto& f : t.facets())
    if (std::binary_search(f.begin(), f.end(), v)) ++deg;
  return deg;
}

bool is_interior_vertex(const Triangulation& t, int v) {
  if (v < 0 || v >= static_cast<int>(t.vertex_count())) fail(Errc::UnknownVertex, std::to_string(v));
  for (const auto& [r, fs] : t.ridges())
    if (fs.size() == 1 && std::binary_search(r.begin(), r.end(), v)) return false;
  return true;
}

const char* mode_name(DelaunayMode mode) {
  switch (mode) {
    case DelaunayMode::FacetsEmpty: return "FacetsEmpty";
    case DelaunayMode::AllFacesSupported: return "AllFacesSupported";
    case DelaunayMode::RidgesSupported: return "RidgesSupported";
    case DelaunayMode::InteriorRidgesLocal: return "InteriorRidgesLocal";
  }
  return "?";
}

bool has_supporting_sphere(const std::vector<Point>& face, const std::vector<Point>& others, std::size_t* witness) {
  const std::size_t m = face.at(0).size();
  const Sphere base = circumsphere(face);
  Matrix dirs;
  for (std::size_t i = 1; i < face.size(); ++i) dirs.push_back(sub(face[i], face[0]));
  // Centers of spheres through the face: base.center + sum t_j normals[j].
  const auto normals = kernel_basis(dirs, m);
  const Point& g0 = face[0];
  std::vector<StrictRow> rows;
  for (std::size_t w = 0; w < others.size(); ++w) {
    const Point rel = sub(others[w], g0);
    StrictRow r;
    r.constant = norm_sq(others[w]) - norm_sq(g0) - 2 * dot(base.center, rel);
    for (const auto& n : normals) r.coeffs.push_back(-2 * dot(n, rel));
    rows.push_back(std::move(r));
    if (witness && !strict_feasible(rows, normals.size())) {
      *witness = w;
      return false;
    }
  }
  return witness ? true : strict_feasible(std::move(rows), normals.size());
}

DelaunayReport check_delaunay(const Triangulation& t, DelaunayMode mode) {
  DelaunayReport rep{mode, true, {}};
  const int n = static_cast<int>(t.vertex_count());

  auto check_face = [&](const Face& face) {
    std::vector<Point> others;
    std::vector<int> ids;
    for (int w = 0; w < n; ++w) {
      if (std::binary_search(face.begin(), face.end(), w)) continue;
      others.push_back(t.vertices()[w]);
      ids.push_back(w);
    }
    std::size_t wit = 0;
    if (!has_supporting_sphere(t.points_of(face), others, &wit)) rep.violations.push_back({face, ids[wit]});
  };

  switch (mode) {
    case DelaunayMode::FacetsEmpty:
      for (const auto& f : t.facets()) {
        const Sphere s = circumsphere(t.points_of(f));
        for (int w = 0; w < n; ++w) {
          if (std::binary_search(f.begin(), f.end(), w)) continue;
          if (sphere_side(s, t.vertices()[w]) != SphereSide::Outside) rep.violations.push_back({f, w});
        }
      }
      break;
    case DelaunayMode::AllFacesSupported: {
      std::set<Face> faces;
      for (const auto& f : t.facets()) {
        for (int k = 1; k <= t.dim(); ++k)
          for_each_subset(static_cast<int>(f.size()), k, [&](const std::vector<int>& idx) {
            Face g;
            for (int i : idx) g.push_back(f[i]);
            faces.insert(std::move(g));
            return true;
          });
      }
      for (const auto& g : faces) check_face(g);
      break;
    }
    case DelaunayMode::RidgesSupported:
      for (const auto& [r, fs] : t.ridges()) check_face(r);
      break;
    case DelaunayMode::InteriorRidgesLocal:
      for (const auto& [r, fs] : t.ridges()) {
        if (fs.size() != 2) continue;
        const int v1 = opposite_vertex(t.facets()[fs[0]], r);
        const int v2 = opposite_vertex(t.facets()[fs[1]], r);
        auto pts = t.points_of(r);
        pts.push_back(t.vertices()[v1]);
        if (sphere_side(circumsphere(pts), t.vertices()[v2]) != SphereSide::Outside)
          rep.violations.push_back({r, v2});
      }
      break;
  }
  std::sort(rep.violations.begin(), rep.violations.end());
  rep.ok = rep.violations.empty();
  return rep;
}

Triangulation brute_force_delaunay(const std::vector<Point>& points) {
  if (points.empty()) fail(Errc::DegeneratePointSet, "no points");
  const int m = static_cast<int>(points[0].size());
  require_dimension(points, m);
  const int n = static_cast<int>(points.size());
  if (n < m + 1) fail(Errc::DegeneratePointSet, "too few points to span");

  for_each_subset(n, m + 2, [&](const std::vector<int>& idx) {
    Matrix lifted;
    for (int i : idx) {
      Point row = points[i];
      row.push_back(norm_sq(points[i]));
      row.push_back(1);
      lifted.push_back(std::move(row));
    }
    if (sgn(determinant(std::move(lifted))) == 0) {
      std::string ids;
      for (int i : idx) ids += std::to_string(i) + " ";
      fail(Errc::DegeneratePointSet, "cospherical subset { " + ids + "}");
    }
    return true;
  });

  std::vector<Face> facets;
  for_each_subset(n, m + 1, [&](const std::vector<int>& idx) {
    std::vector<Point> pts;
    for (int i : idx) pts.push_back(points[i]);
    if (orientation(pts) == 0) return true;
    const Sphere s = circumsphere(pts);
    for (int w = 0; w < n; ++w) {
      if (std::find(idx.begin(), idx.end(), w) != idx.end()) continue;
      if (sphere_side(s, points[w]) != SphereSide::Outside) return true;
    }
    facets.push_back(idx);
    return true;
  });
  if (facets.empty()) fail(Errc::DegeneratePointSet, "points do not span");
  return build_triangulation(m, points, std::move(facets));
}

Scalar scaled_volume(const std::vector<Point>& simplex) {
  Matrix rows;
  for (std::size_t i = 1; i < simplex.size(); ++i) rows.push_back(sub(simplex[i], simplex[0]));
  return abs(determinant(std::move(rows)));
}

}  // namespace inscriber
