#include "inscriber/builder.hpp"

#include <algorithm>
#include <set>

namespace inscriber {

namespace {

bool contains(const Face& f, int v) { return std::binary_search(f.begin(), f.end(), v); }

std::size_t denominator_bits(const Point& p) {
  std::size_t bits = 0;
  for (const auto& s : p) bits = std::max(bits, mpz_sizeinbase(s.get_den_mpz_t(), 2));
  return bits;
}

std::vector<Face> facets_at(const Triangulation& t, int c) {
  std::vector<Face> out;
  for (const auto& f : t.facets())
    if (contains(f, c)) out.push_back(f);
  return out;
}

void require_simple_interior(const Triangulation& t, int c) {
  if (c < 0 || c >= static_cast<int>(t.vertex_count())) fail(Errc::UnknownVertex, std::to_string(c));
  if (!is_interior_vertex(t, c) || vertex_degree(t, c) != t.dim() + 1)
    fail(Errc::NotSimpleInterior, "vertex " + std::to_string(c) + " is not an interior vertex of degree d");
}

// Facet created from `parent` by replacing its label-th vertex with v.
Face created_face(const Face& parent, int label, int v) {
  Face f;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (static_cast<int>(i) != label) f.push_back(parent[i]);
  f.push_back(v);
  std::sort(f.begin(), f.end());
  return f;
}

Triangulation single_simplex(std::vector<Point> verts) {
  const int m = static_cast<int>(verts.size()) - 1;
  Face all(m + 1);
  for (int i = 0; i <= m; ++i) all[i] = i;
  return Triangulation::assemble(m, std::move(verts), {all});
}

std::vector<Point> standard_simplex(int d, const Scalar& scale) {
  const int m = d - 1;
  std::vector<Point> verts{Point(m, Scalar(0))};
  for (int i = 0; i < m; ++i) {
    Point e(m, Scalar(0));
    e[i] = scale;
    verts.push_back(std::move(e));
  }
  return verts;
}

void require_facets_empty(const Triangulation& t, const char* where) {
  const auto rep = check_delaunay(t, DelaunayMode::FacetsEmpty);
  if (!rep.ok) fail(Errc::VerificationFailed, std::string(where) + " produced a non-Delaunay triangulation");
}

}  // namespace

Sphere unit_sphere(int d) { return Sphere{Point(d, Scalar(0)), Scalar(1)}; }

Triangulation init_root(int d, const Scalar& scale) {
  if (d < 3) fail(Errc::BadDimension, "init_root needs d >= 3");
  if (sgn(scale) <= 0) fail(Errc::BadParameters, "scale must be positive");
  auto verts = standard_simplex(d, scale);
  Point bary(d - 1, Scalar(scale / d));
  return stellar_subdivide(single_simplex(std::move(verts)), [&] {
    Face all(d);
    for (int i = 0; i < d; ++i) all[i] = i;
    return all;
  }(), bary);
}

Line tangent_line(const Triangulation& t, int c, const std::vector<Face>& keep) {
  require_simple_interior(t, c);
  const int m = t.dim();
  if (static_cast<int>(keep.size()) != m - 1)
    fail(Errc::BadParameters, "tangent_line keeps exactly d-2 facets");
  const Point& cp = t.vertices()[c];
  Matrix rows;
  for (const auto& f : keep) {
    if (!t.find_facet(f)) fail(Errc::UnknownFacet, "kept facet is not in the triangulation");
    if (!contains(f, c)) fail(Errc::BadParameters, "kept facet does not contain c");
    rows.push_back(sub(cp, circumsphere(t.points_of(f)).center));
  }
  const auto ker = kernel_basis(rows, static_cast<std::size_t>(m));
  if (ker.empty()) fail(Errc::DegenerateNormals, "kept circumspheres have no common tangent line at c");
  // Largest entry of magnitude one, so halving from lambda = 1 starts at the
  // scale of the configuration.
  Point dir = primitive_direction(ker.front());
  Scalar top = 0;
  for (const auto& v : dir) top = std::max(top, Scalar(abs(v)));
  for (auto& v : dir) v /= top;
  return Line{cp, std::move(dir)};
}

ChosenPoints choose_points(const Triangulation& t, int c, const Face& f1, const Face& f2, const Line& line,
                           int halving_cap) {
  if (f1 == f2) fail(Errc::BadParameters, "choose_points needs two distinct facets");
  for (const Face* f : {&f1, &f2}) {
    if (!t.find_facet(*f)) fail(Errc::UnknownFacet, "facet is not in the triangulation");
    if (!contains(*f, c)) fail(Errc::BadParameters, "facet does not contain c");
  }
  const Point& cp = t.vertices()[c];
  if (line.base != cp) fail(Errc::BadParameters, "line does not pass through c");
  std::vector<Sphere> far;
  for (const auto& f : t.facets())
    if (!contains(f, c)) far.push_back(circumsphere(t.points_of(f)));
  const auto s1 = t.points_of(f1);
  const auto s2 = t.points_of(f2);
  auto clear = [&](const Point& x) {
    for (const auto& s : far)
      if (sphere_side(s, x) != SphereSide::Outside) return false;
    return true;
  };
  Scalar lambda = 1;
  for (int k = 0; k <= halving_cap; ++k, lambda /= 2) {
    for (const Scalar& l : {lambda, Scalar(-lambda)}) {
      Point x1 = line.at(l);
      Point x2 = line.at(-l);
      if (strictly_inside(s1, x1) && strictly_inside(s2, x2) && clear(x1) && clear(x2))
        return ChosenPoints{std::move(x1), std::move(x2), l};
    }
  }
  fail(Errc::SearchExhausted, "no admissible points after " + std::to_string(halving_cap) + " halvings");
}

Expansion expand_at(const Triangulation& t, int c, const std::vector<Face>& faces, int halving_cap) {
  require_simple_interior(t, c);
  if (faces.empty() || faces.size() > 2) fail(Errc::BadParameters, "expand_at takes one or two facets");
  std::vector<Face> req;
  for (Face f : faces) {
    std::sort(f.begin(), f.end());
    if (!t.find_facet(f)) fail(Errc::UnknownFacet, "facet is not in the triangulation");
    if (!contains(f, c)) fail(Errc::BadParameters, "facet does not contain c");
    req.push_back(std::move(f));
  }
  if (req.size() == 2 && req[0] == req[1]) fail(Errc::BadParameters, "expand_at needs distinct facets");
  const auto star = facets_at(t, c);

  // Second facet candidates: the requested one, or every other facet at c
  // when only one is requested (the point in it is never inserted).
  std::vector<Face> partners;
  if (req.size() == 2) {
    partners.push_back(req[1]);
  } else {
    for (const auto& f : star)
      if (f != req[0]) partners.push_back(f);
  }
  for (std::size_t i = 0; i < partners.size(); ++i) {
    const Face& f2 = partners[i];
    std::vector<Face> keep;
    for (const auto& f : star)
      if (f != req[0] && f != f2) keep.push_back(f);
    const Line line = tangent_line(t, c, keep);
    ChosenPoints pts;
    try {
      pts = choose_points(t, c, req[0], f2, line, halving_cap);
    } catch (const Error& e) {
      if (e.code() != Errc::SearchExhausted || i + 1 == partners.size()) throw;
      continue;
    }
    Triangulation out = stellar_subdivide(t, req[0], pts.x1);
    std::vector<int> fresh{static_cast<int>(out.vertex_count()) - 1};
    if (req.size() == 2) {
      out = stellar_subdivide(out, req[1], pts.x2);
      fresh.push_back(static_cast<int>(out.vertex_count()) - 1);
    }
    require_facets_empty(out, "expand_at");
    return Expansion{std::move(out), std::move(fresh), line, std::move(pts)};
  }
  fail(Errc::SearchExhausted, "no admissible points");
}

BuildResult build_from_plan(const RootedPlan& p, int d, const BuildOptions& opts) {
  if (d < 3) fail(Errc::BadDimension, "builds need d >= 3");
  const auto check = plan_is_buildable(p, d);
  if (check.diagnosis != PlanDiagnosis::Ok)
    fail(Errc::PlanNotBuildable, std::string(check.diagnosis == PlanDiagnosis::TooManyChildren
                                                 ? "more than two children at node "
                                                 : "face label out of range at node ") +
                                     std::to_string(*check.node));
  BuildResult r{init_root(d, opts.scale), {}, {}};
  r.trace.d = d;
  r.trace.initial_simplex = standard_simplex(d, opts.scale);
  Face base(d);
  for (int i = 0; i < d; ++i) base[i] = i;
  const Point& root_point = r.triangulation.vertices()[d];
  r.trace.steps.push_back({p.root(), base, root_point, d, std::nullopt, std::nullopt, denominator_bits(root_point)});
  r.node_vertex[p.root()] = d;

  // (node, facet its vertex subdivided); depth-first, first child on top.
  std::vector<std::pair<int, Face>> stack{{p.root(), base}};
  while (!stack.empty()) {
    auto [node, parent_facet] = stack.back();
    stack.pop_back();
    const auto& ch = p.children(node);
    if (ch.empty()) continue;
    std::vector<int> labels;
    std::set<int> used;
    for (const auto& e : ch)
      if (e.face) used.insert(*e.face);
    int next = 0;
    for (const auto& e : ch) {
      if (e.face) {
        labels.push_back(*e.face);
        continue;
      }
      while (used.count(next)) ++next;
      used.insert(next);
      labels.push_back(next);
    }
    const int c = r.node_vertex.at(node);
    std::vector<Face> faces;
    for (int l : labels) faces.push_back(created_face(parent_facet, l, c));
    Expansion ex = expand_at(r.triangulation, c, faces, opts.halving_cap);
    for (std::size_t i = 0; i < ch.size(); ++i) {
      const Point& x = ex.triangulation.vertices()[ex.new_vertices[i]];
      const Scalar lambda = i == 0 ? ex.points.lambda : Scalar(-ex.points.lambda);
      r.trace.steps.push_back({ch[i].node, faces[i], x, ex.new_vertices[i], ex.line, lambda, denominator_bits(x)});
      r.node_vertex[ch[i].node] = ex.new_vertices[i];
    }
    r.triangulation = std::move(ex.triangulation);
    for (std::size_t i = ch.size(); i-- > 0;) stack.emplace_back(ch[i].node, faces[i]);
  }
  return r;
}

BuildResult build_path(int d, int n, const BuildOptions& opts) {
  if (d < 3) fail(Errc::BadDimension, "build_path needs d >= 3");
  if (n < 1) fail(Errc::BadParameters, "build_path needs n >= 1");
  const int m = d - 1;
  BuildResult r{init_root(d, opts.scale), {}, {}};
  r.trace.d = d;
  r.trace.initial_simplex = standard_simplex(d, opts.scale);
  const Line ray{Point(m, Scalar(0)), Point(m, Scalar(1))};
  Face base(d);
  for (int i = 0; i < d; ++i) base[i] = i;
  Scalar mu = opts.scale / d;
  const Scalar exit = opts.scale / m;
  r.trace.steps.push_back({0, base, ray.at(mu), d, ray, mu, denominator_bits(ray.at(mu))});
  r.node_vertex[0] = d;
  int prev = d;
  for (int step = 1; step < n; ++step) {
    Face target;
    for (int i = 1; i < d; ++i) target.push_back(i);
    target.push_back(prev);
    std::sort(target.begin(), target.end());
    std::vector<Sphere> others;
    for (const auto& f : r.triangulation.facets())
      if (f != target) others.push_back(circumsphere(r.triangulation.points_of(f)));
    bool placed = false;
    Scalar frac = Scalar(1, 2);
    for (int k = 0; k < opts.halving_cap && !placed; ++k, frac /= 2) {
      const Scalar cand = mu + (exit - mu) * frac;
      const Point x = ray.at(cand);
      bool clear = true;
      for (const auto& s : others)
        if (sphere_side(s, x) != SphereSide::Outside) {
          clear = false;
          break;
        }
      if (!clear) continue;
      Triangulation next = stellar_subdivide(r.triangulation, target, x);
      if (!check_delaunay(next, DelaunayMode::FacetsEmpty).ok) continue;
      r.triangulation = std::move(next);
      prev = static_cast<int>(r.triangulation.vertex_count()) - 1;
      mu = cand;
      r.trace.steps.push_back({step, target, x, prev, ray, cand, denominator_bits(x)});
      r.node_vertex[step] = prev;
      placed = true;
    }
    if (!placed) fail(Errc::SearchExhausted, "no admissible point on the ray");
  }
  return r;
}

TreeBuild build_from_tree(const DualTree& t, int apex, int d, const BuildOptions& opts) {
  if (d < 3) fail(Errc::BadDimension, "builds need d >= 3");
  auto plan = plan_for_polytope(t, apex);
  if (!plan) {
    BuildResult r{single_simplex(standard_simplex(d, opts.scale)), {}, {}};
    r.trace.d = d;
    r.trace.initial_simplex = standard_simplex(d, opts.scale);
    return TreeBuild{std::nullopt, std::move(r)};
  }
  BuildResult r = build_from_plan(*plan, d, opts);
  return TreeBuild{std::move(plan), std::move(r)};
}

Triangulation replay(const BuildTrace& trace) {
  if (static_cast<int>(trace.initial_simplex.size()) != trace.d)
    fail(Errc::BadInput, "initial simplex needs d vertices");
  require_dimension(trace.initial_simplex, static_cast<std::size_t>(trace.d - 1));
  Triangulation t = single_simplex(trace.initial_simplex);
  for (const auto& s : trace.steps) {
    if (s.vertex != static_cast<int>(t.vertex_count()))
      fail(Errc::BadInput, "trace step vertex " + std::to_string(s.vertex) + " out of order");
    t = stellar_subdivide(t, s.facet, s.point);
  }
  return t;
}

RootedPlan recovered_plan(const BuildTrace& trace) {
  if (trace.steps.empty()) fail(Errc::EmptyTree, "trace has no steps");
  std::map<int, std::size_t> step_of_vertex;
  std::map<int, std::vector<ChildEdge>> children;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    if (i > 0) {
      // The creator of a facet is the step that inserted its newest vertex.
      std::optional<std::size_t> parent;
      for (int v : s.facet) {
        auto it = step_of_vertex.find(v);
        if (it != step_of_vertex.end() && (!parent || it->second > *parent)) parent = it->second;
      }
      if (!parent) fail(Errc::BadInput, "trace step subdivides an original facet twice");
      const auto& ps = trace.steps[*parent];
      int label = -1;
      for (std::size_t j = 0; j < ps.facet.size(); ++j)
        if (!contains(s.facet, ps.facet[j])) label = static_cast<int>(j);
      children[ps.node].push_back({s.node, label});
    }
    step_of_vertex[s.vertex] = i;
  }
  return RootedPlan(trace.steps.front().node, std::move(children));
}

InscribedPolytope lift_to_inscribed(const Triangulation& t, bool require_simplex) {
  if (!check_delaunay(t, DelaunayMode::FacetsEmpty).ok) fail(Errc::NotDelaunay, "triangulation is not Delaunay");
  const int m = t.dim();
  const auto boundary = t.boundary_ridges();
  std::vector<Face> support;
  if (require_simplex) {
    std::set<int> corners;
    for (const auto& r : boundary) corners.insert(r.begin(), r.end());
    if (static_cast<int>(boundary.size()) != m + 1 || static_cast<int>(corners.size()) != m + 1)
      fail(Errc::SupportNotSimplex, "support is not a simplex with only its corners on the boundary");
    support = boundary;
  } else {
    // Boundary ridges grouped by the hyperplane they span.
    std::vector<std::pair<Hyperplane, std::set<int>>> groups;
    for (const auto& r : boundary) {
      auto on = [&](const Hyperplane& g) {
        return std::all_of(r.begin(), r.end(), [&](int v) { return hyperplane_side(g, t.vertices()[v]) == Side::On; });
      };
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return on(g.first); });
      if (it == groups.end()) groups.push_back({hyperplane_through(t.points_of(r)), {}}), it = groups.end() - 1;
      it->second.insert(r.begin(), r.end());
    }
    for (const auto& [_, vs] : groups) support.emplace_back(vs.begin(), vs.end());
  }
  InscribedPolytope p;
  p.d = m + 1;
  p.sphere = unit_sphere(p.d);
  for (const auto& v : t.vertices()) p.vertices.push_back(inverse_stereographic(v));
  const int north = static_cast<int>(p.vertices.size());
  Point n(p.d, Scalar(0));
  n.back() = 1;
  p.vertices.push_back(std::move(n));
  p.north = north;
  p.facets = t.facets();
  for (auto f : support) {
    f.push_back(north);
    p.facets.push_back(std::move(f));
  }
  std::sort(p.facets.begin(), p.facets.end());
  return p;
}

InscribedReport verify_inscribed(const InscribedPolytope& p) {
  InscribedReport rep{true, {}};
  auto add_violation = [&](std::string check, Face f, int w) {
    rep.violations.push_back({std::move(check), std::move(f), w});
  };
  const int nv = static_cast<int>(p.vertices.size());
  for (int i = 0; i < nv; ++i) {
    if (static_cast<int>(p.vertices[i].size()) != p.d || p.sphere.center.size() != p.vertices[i].size()) {
      add_violation("shape", {}, i);
      continue;
    }
    if (dist_sq(p.vertices[i], p.sphere.center) != p.sphere.radius_sq) add_violation("sphere", {}, i);
  }
  if (!rep.violations.empty()) {
    rep.ok = false;
    return rep;
  }
  std::map<Face, int> ridge_count;
  for (const auto& raw : p.facets) {
    Face f = raw;
    std::sort(f.begin(), f.end());
    const bool indices_ok = std::all_of(f.begin(), f.end(), [&](int v) { return v >= 0 && v < nv; }) &&
                            std::adjacent_find(f.begin(), f.end()) == f.end();
    if (static_cast<int>(f.size()) < p.d || !indices_ok) {
      add_violation("shape", f, -1);
      continue;
    }
    std::vector<Point> pts;
    for (int v : f) pts.push_back(p.vertices[v]);
    Hyperplane h;
    try {
      h = hyperplane_through(std::span<const Point>(pts.data(), static_cast<std::size_t>(p.d)));
    } catch (const Error&) {
      add_violation("shape", f, -1);
      continue;
    }
    int side = 0;
    for (int v = 0; v < nv; ++v) {
      const Side s = hyperplane_side(h, p.vertices[v]);
      if (contains(f, v)) {
        if (s != Side::On) add_violation("support", f, v);
        continue;
      }
      const int sv = s == Side::Positive ? 1 : s == Side::Negative ? -1 : 0;
      if (sv == 0 || (side != 0 && sv != side)) {
        add_violation("support", f, v);
        continue;
      }
      side = sv;
    }
    if (static_cast<int>(f.size()) == p.d)
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face r = f;
        r.erase(r.begin() + static_cast<long>(i));
        ++ridge_count[r];
      }
  }
  for (const auto& [r, c] : ridge_count)
    if (c != 2) add_violation("ridge", r, c);
  rep.ok = rep.violations.empty();
  return rep;
}

InscribedPolytope inscribed_polygon(int n) {
  if (n < 0) fail(Errc::BadParameters, "polygon needs n >= 0");
  InscribedPolytope p;
  p.d = 2;
  p.sphere = unit_sphere(2);
  for (int i = 0; i <= n + 1; ++i) p.vertices.push_back(inverse_stereographic(Point{Scalar(i)}));
  const int north = n + 2;
  p.vertices.push_back(Point{Scalar(0), Scalar(1)});
  p.north = north;
  for (int i = 0; i <= n; ++i) p.facets.push_back({i, i + 1});
  p.facets.push_back({0, north});
  p.facets.push_back({n + 1, north});
  std::sort(p.facets.begin(), p.facets.end());
  return p;
}

InscribedPolytope build_bounded_degree(int d, int n, int halving_cap) {
  if (n < 0) fail(Errc::BadParameters, "n must be non-negative");
  if (d == 2) return inscribed_polygon(n);
  if (d < 2) fail(Errc::BadDimension, "d must be at least 2");
  // Label l of the stacking schedule is vertex l-2 of the triangulation and
  // the north pole is label 1.
  Triangulation t = n == 0 ? single_simplex(standard_simplex(d, 1)) : init_root(d, 1);
  for (int k = 2; k <= n; ++k) {
    const int c = d + k - 2;
    Face f;
    for (int v = k - 1; v <= k + d - 2; ++v) f.push_back(v);
    t = expand_at(t, c, {f}, halving_cap).triangulation;
  }
  InscribedPolytope lifted = lift_to_inscribed(t);
  const int north = *lifted.north;
  auto relabel = [&](int v) { return v == north ? 0 : v + 1; };
  InscribedPolytope p;
  p.d = lifted.d;
  p.sphere = lifted.sphere;
  p.vertices.push_back(lifted.vertices[north]);
  for (int v = 0; v < north; ++v) p.vertices.push_back(lifted.vertices[v]);
  p.north = 0;
  for (const auto& f : lifted.facets) {
    Face g;
    for (int v : f) g.push_back(relabel(v));
    std::sort(g.begin(), g.end());
    p.facets.push_back(std::move(g));
  }
  std::sort(p.facets.begin(), p.facets.end());
  return p;
}

std::vector<std::vector<int>> vertex_adjacency(const InscribedPolytope& p) {
  std::vector<std::set<int>> sets(p.vertices.size());
  for (const auto& f : p.facets)
    for (int a : f)
      for (int b : f)
        if (a != b) sets.at(a).insert(b);
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace inscriber
