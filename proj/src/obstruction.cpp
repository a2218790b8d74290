#include "inscriber/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>
#include <thread>

#include "inscriber/builder.hpp"

namespace inscriber {

namespace {

bool contains(const Face& f, int v) { return std::binary_search(f.begin(), f.end(), v); }

int find_point(const std::vector<Point>& pts, const Point& p) {
  auto it = std::find(pts.begin(), pts.end(), p);
  return it == pts.end() ? -1 : static_cast<int>(it - pts.begin());
}

// c and the v_i of a once-subdivided simplex, as ids.
struct SplitIds {
  int c;
  std::vector<int> v;
};

SplitIds split_ids(const Triangulation& delta) {
  const int m = delta.dim();
  const int d = m + 1;
  if (static_cast<int>(delta.vertex_count()) != d + 1 || static_cast<int>(delta.facet_count()) != d)
    fail(Errc::BadInput, "not a single stellar subdivision of a simplex");
  std::optional<int> c;
  for (int w = 0; w <= d; ++w)
    if (vertex_degree(delta, w) == d) {
      if (c) fail(Errc::BadInput, "not a single stellar subdivision of a simplex");
      c = w;
    }
  if (!c) fail(Errc::BadInput, "no vertex lies in every facet");
  SplitIds ids{*c, {}};
  for (int w = 0; w <= d; ++w)
    if (w != *c) ids.v.push_back(w);
  return ids;
}

std::vector<double> approx(const Point& p) {
  std::vector<double> out;
  for (const auto& s : p) out.push_back(s.get_d());
  return out;
}

// Angle at q in the triangle p q r.
double angle_at(const Point& p, const Point& q, const Point& r) {
  const auto a = approx(p), b = approx(q), c = approx(r);
  double uv = 0, uu = 0, vv = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double u = a[i] - b[i], v = c[i] - b[i];
    uv += u * v;
    uu += u * u;
    vv += v * v;
  }
  return std::acos(std::clamp(uv / std::sqrt(uu * vv), -1.0, 1.0));
}

bool locally_delaunay(const Point& p, const Point& q, const Point& left, const Point& right) {
  const std::vector<Point> tri{p, q, left};
  return sphere_side(circumsphere(tri), right) == SphereSide::Outside;
}

std::vector<Point> random_simplex(int d, Rng& rng) {
  const int m = d - 1;
  while (true) {
    std::vector<Point> v(d, Point(m));
    for (auto& p : v)
      for (auto& s : p) s = rng.rational(kDenominatorBound);
    if (orientation(v) != 0) return v;
  }
}

Point combine(const std::vector<Point>& pts, const std::vector<Scalar>& w) {
  Point p(pts[0].size(), Scalar(0));
  for (std::size_t i = 0; i < pts.size(); ++i) p = add(p, scale(pts[i], w[i]));
  return p;
}

}  // namespace

Face split_facet(int d, int i) {
  Face f;
  for (int j = 0; j <= d; ++j)
    if (j != i - 1) f.push_back(j);
  return f;
}

Triangulation split_complex(const SplitInstance& s) {
  const int d = static_cast<int>(s.v.size());
  if (d < 2) fail(Errc::BadDimension, "split instance needs d >= 2");
  std::vector<Point> verts = s.v;
  require_dimension(verts, static_cast<std::size_t>(d - 1));
  verts.push_back(s.c);
  std::vector<Face> facets;
  for (int i = 1; i <= d; ++i) facets.push_back(split_facet(d, i));
  if (orientation(s.v) == 0) fail(Errc::DegenerateSimplex, "split simplex is flat");
  if (!strictly_inside(s.v, s.c)) fail(Errc::NotInterior, "c is not interior to the simplex");
  return Triangulation::assemble(d - 1, std::move(verts), std::move(facets));
}

Triangulation subdivided_complex(const SplitInstance& s) {
  Triangulation t = split_complex(s);
  const int d = static_cast<int>(s.v.size());
  if (static_cast<int>(s.r.size()) > d) fail(Errc::BadParameters, "more points than facets");
  for (std::size_t i = 0; i < s.r.size(); ++i) t = stellar_subdivide(t, split_facet(d, static_cast<int>(i) + 1), s.r[i]);
  return t;
}

SplitGeometry split_geometry(const Triangulation& delta, int k) {
  const SplitIds ids = split_ids(delta);
  const int d = delta.dim() + 1;
  if (k < 1 || k >= d) fail(Errc::BadParameters, "k must satisfy 1 <= k < d");
  SplitGeometry g;
  g.d = d;
  g.k = k;
  g.c = delta.vertices()[ids.c];
  for (int w : ids.v) g.v.push_back(delta.vertices()[w]);
  g.span_f.push_back(g.c);
  g.span_g.push_back(g.c);
  for (int i = 0; i < d; ++i) (i < k ? g.span_f : g.span_g).push_back(g.v[i]);
  g.ell = affine_intersection_line(g.span_f, g.span_g);
  g.circ_f = circumsphere(g.span_f);
  g.circ_g = circumsphere(g.span_g);
  g.t_x = line_sphere_second_root(g.ell, g.circ_f, 0);
  g.t_y = line_sphere_second_root(g.ell, g.circ_g, 0);

  // c + t*u = sum beta_i w_i with sum beta_i = 1, over the points w of one side.
  auto hit = [&](int lo, int hi) {
    const std::size_t m = g.c.size();
    const int n = hi - lo;
    Matrix a(m + 1, std::vector<Scalar>(n + 1, Scalar(0)));
    Point rhs(m + 1);
    for (std::size_t r = 0; r < m; ++r) {
      a[r][0] = g.ell.direction[r];
      for (int j = 0; j < n; ++j) a[r][j + 1] = -g.v[lo + j][r];
      rhs[r] = -g.c[r];
    }
    for (int j = 0; j < n; ++j) a[m][j + 1] = 1;
    rhs[m] = 1;
    auto sol = solve_unique(a, rhs);
    if (!sol) fail(Errc::BadInput, "line misses the opposite face");
    for (int j = 0; j < n; ++j)
      if (sgn((*sol)[j + 1]) <= 0) fail(Errc::BadInput, "line meets the face outside its relative interior");
    return (*sol)[0];
  };
  g.t_x_bar = hit(0, k);
  g.t_y_bar = hit(k, d);
  if (sgn(g.t_x_bar) > 0) {
    g.ell.direction = scale(g.ell.direction, -1);
    for (Scalar* t : {&g.t_x, &g.t_x_bar, &g.t_y_bar, &g.t_y}) *t = -*t;
  }
  g.x = g.ell.at(g.t_x);
  g.x_bar = g.ell.at(g.t_x_bar);
  g.y_bar = g.ell.at(g.t_y_bar);
  g.y = g.ell.at(g.t_y);

  const bool x_ok = k == 1 ? g.t_x == g.t_x_bar : g.t_x < g.t_x_bar;
  const bool y_ok = d - k == 1 ? g.t_y == g.t_y_bar : g.t_y_bar < g.t_y;
  if (!x_ok || !y_ok || sgn(g.t_x_bar) >= 0 || sgn(g.t_y_bar) <= 0)
    fail(Errc::VerificationFailed, "points along the split line are out of order");
  if (sphere_side(g.circ_f, g.x) != SphereSide::On || sphere_side(g.circ_g, g.y) != SphereSide::On)
    fail(Errc::VerificationFailed, "split points are off their spheres");
  return g;
}

SplitPositionReport verify_split_positions(const SplitGeometry& g, const Triangulation& delta) {
  const SplitIds ids = split_ids(delta);
  if (delta.vertices()[ids.c] != g.c) fail(Errc::BadInput, "geometry does not belong to this complex");
  SplitPositionReport rep{true, {}};
  for (int i = 0; i < g.d; ++i) {
    if (delta.vertices()[ids.v[i]] != g.v[i]) fail(Errc::BadInput, "geometry does not belong to this complex");
    std::vector<Point> pts{g.c};
    for (int j = 0; j < g.d; ++j)
      if (j != i) pts.push_back(g.v[j]);
    const SphereSide s = sphere_side(circumsphere(pts), g.x);
    rep.sides.push_back(s);
    if (s != (i < g.k ? SphereSide::Outside : SphereSide::On)) rep.ok = false;
  }
  return rep;
}

SubdivisionReport verify_single_subdivision(const Triangulation& delta, const Triangulation& sub, const SplitGeometry& g) {
  const SplitIds ids = split_ids(delta);
  const int r = static_cast<int>(delta.vertex_count());
  if (static_cast<int>(sub.vertex_count()) != r + 1 ||
      !std::equal(delta.vertices().begin(), delta.vertices().end(), sub.vertices().begin()))
    fail(Errc::BadInput, "expected delta plus one subdivision point");
  std::set<int> link;
  std::vector<Face> fresh;
  for (const auto& f : sub.facets())
    if (contains(f, r)) {
      fresh.push_back(f);
      for (int w : f)
        if (w != r) link.insert(w);
    }
  if (static_cast<int>(fresh.size()) != g.d || static_cast<int>(link.size()) != g.d)
    fail(Errc::BadInput, "the new point does not subdivide a single facet");
  int missing = -1;
  for (int i = 0; i < g.d; ++i)
    if (!link.count(ids.v[i])) missing = i;
  if (missing < 0 || missing >= g.k) fail(Errc::BadInput, "the subdivided facet is not among F_1..F_k");

  SubdivisionReport rep{check_delaunay(sub, DelaunayMode::FacetsEmpty).ok, true, missing + 1, {}, {0, 0, 0}};
  for (const auto& f : fresh) {
    int gone = -1;
    for (int w : link)
      if (!contains(f, w)) gone = w;
    ProofCase pc = ProofCase::MissesC;
    if (gone != ids.c) {
      const auto pos = std::find(ids.v.begin(), ids.v.end(), gone) - ids.v.begin();
      pc = pos < g.k ? ProofCase::MissesFSide : ProofCase::MissesGSide;
    }
    const SphereSide s = sphere_side(circumsphere(sub.points_of(f)), g.x);
    if (s != SphereSide::Outside) rep.ok = false;
    ++rep.case_counts[static_cast<int>(pc)];
    rep.facets.push_back({f, pc, s});
  }
  return rep;
}

bool has_planar_type(const Config2D& cfg) {
  const std::size_t m = cfg.A.size();
  for (const Point* p : {&cfg.B, &cfg.C, &cfg.x, &cfg.a, &cfg.b, &cfg.c})
    if (p->size() != m) return false;
  if (m < 2) return false;
  auto inside = [](const Point& p, const Point& q, const Point& r, const Point& z) {
    const std::vector<Point> tri{p, q, r};
    return strictly_inside(tri, z);
  };
  return inside(cfg.A, cfg.B, cfg.C, cfg.x) && inside(cfg.x, cfg.B, cfg.C, cfg.a) &&
         inside(cfg.x, cfg.C, cfg.A, cfg.b) && inside(cfg.x, cfg.A, cfg.B, cfg.c);
}

AngleReport angle_obstruction_2d(const Config2D& cfg) {
  if (!has_planar_type(cfg)) fail(Errc::WrongCombinatorialType, "points do not form the subdivided-triangle pattern");
  AngleReport rep{};
  // Edge Ax sees b and c, Bx sees a and c, Cx sees a and b.
  rep.fails[0] = !locally_delaunay(cfg.A, cfg.x, cfg.b, cfg.c);
  rep.fails[1] = !locally_delaunay(cfg.B, cfg.x, cfg.a, cfg.c);
  rep.fails[2] = !locally_delaunay(cfg.C, cfg.x, cfg.a, cfg.b);
  const char* names[3] = {"Ax", "Bx", "Cx"};
  for (int i = 0; i < 3; ++i)
    if (rep.fails[i]) rep.failing.emplace_back(names[i]);
  rep.nine_angle_sum = angle_at(cfg.x, cfg.a, cfg.B) + angle_at(cfg.B, cfg.a, cfg.C) + angle_at(cfg.C, cfg.a, cfg.x) +
                       angle_at(cfg.x, cfg.b, cfg.C) + angle_at(cfg.C, cfg.b, cfg.A) + angle_at(cfg.A, cfg.b, cfg.x) +
                       angle_at(cfg.x, cfg.c, cfg.A) + angle_at(cfg.A, cfg.c, cfg.B) + angle_at(cfg.B, cfg.c, cfg.x);
  rep.opposite_sums = {angle_at(cfg.A, cfg.b, cfg.x) + angle_at(cfg.A, cfg.c, cfg.x),
                       angle_at(cfg.B, cfg.a, cfg.x) + angle_at(cfg.B, cfg.c, cfg.x),
                       angle_at(cfg.C, cfg.a, cfg.x) + angle_at(cfg.C, cfg.b, cfg.x)};
  return rep;
}

InversionResult reduce_by_inversion(const Triangulation& t, const SplitGeometry& g) {
  if (g.d < 4) fail(Errc::BadDimension, "the inversion route needs d > 3");
  if (g.k != 3) fail(Errc::BadParameters, "the inversion route needs k = 3");
  if (t.dim() != g.d - 1 || static_cast<int>(t.vertex_count()) != g.d + 4)
    fail(Errc::BadInput, "expected the split simplex plus three subdivision points");
  const int c = find_point(t.vertices(), g.c);
  std::vector<int> v;
  for (const auto& p : g.v) v.push_back(find_point(t.vertices(), p));
  if (c < 0 || std::count(v.begin(), v.end(), -1) > 0) fail(Errc::BadInput, "split vertices missing");
  if (find_point(t.vertices(), g.x) >= 0) fail(Errc::InversionCenterHit, "x is a vertex");

  InversionResult res{};
  res.r_ids = {-1, -1, -1};
  for (int w = 0; w < static_cast<int>(t.vertex_count()); ++w) {
    if (w == c || std::find(v.begin(), v.end(), w) != v.end()) continue;
    std::set<int> link;
    for (const auto& f : t.facets())
      if (contains(f, w))
        for (int u : f)
          if (u != w) link.insert(u);
    for (int i = 0; i < 3; ++i) {
      std::set<int> fi{c};
      for (int j = 0; j < g.d; ++j)
        if (j != i) fi.insert(v[j]);
      if (link == fi) res.r_ids[i] = w;
    }
  }
  if (std::count(res.r_ids.begin(), res.r_ids.end(), -1) > 0)
    fail(Errc::BadInput, "F_1, F_2, F_3 must each be subdivided once");

  for (const auto& f : t.facets())
    if (sphere_side(circumsphere(t.points_of(f)), g.x) != SphereSide::On) res.region.push_back(f);
  for (const auto& p : t.vertices()) res.inverted.push_back(invert_in_sphere(g.x, 1, p));

  const Point& cp = res.inverted[c];
  Matrix rows;
  for (int i = 0; i < 3; ++i) rows.push_back(sub(res.inverted[v[i]], cp));
  res.coplanar_rank = rank(rows);
  res.coplanar = res.coplanar_rank == 2;

  std::vector<Point> vs;
  for (int w : v) vs.push_back(res.inverted[w]);
  const std::vector<Point> tri{vs[0], vs[1], vs[2]};
  std::array<Point, 3> proj;
  for (int i = 0; i < 3; ++i) {
    auto beta = barycentric(vs, res.inverted[res.r_ids[i]]);
    if (!beta) fail(Errc::DegenerateSimplex, "inverted simplex is flat");
    const Scalar s = (*beta)[0] + (*beta)[1] + (*beta)[2];
    if (sgn(s) == 0) fail(Errc::WrongCombinatorialType, "projection is undefined");
    res.k_coords[i + 1] = {(*beta)[0] / s, (*beta)[1] / s, (*beta)[2] / s};
    proj[i] = combine(tri, res.k_coords[i + 1]);
  }
  if (auto bc = barycentric(tri, cp)) res.k_coords[0] = *bc;
  res.projected = Config2D{vs[0], vs[1], vs[2], cp, proj[0], proj[1], proj[2]};
  return res;
}

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Scalar Rng::rational(int den_bound, int bound) {
  const int q = uniform(1, den_bound);
  const int p = uniform(-bound * q, bound * q);
  Scalar s(p, q);
  s.canonicalize();
  return s;
}

std::vector<Scalar> Rng::weights(std::size_t n, int den_bound) {
  std::vector<Scalar> w(n);
  Scalar total = 0;
  for (auto& x : w) {
    x = uniform(1, den_bound);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

// The master is mixed before the index is added, so (m, i) and (m', i') with
// m + i == m' + i' still get unrelated streams.
std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) + index);
}

SplitInstance random_split(int d, int subdivisions, Rng& rng, bool each_delaunay) {
  if (d < 3) fail(Errc::BadDimension, "split instances need d >= 3");
  if (subdivisions < 0 || subdivisions > d) fail(Errc::BadParameters, "subdivision count out of range");
  SplitInstance s;
  s.v = random_simplex(d, rng);
  s.c = combine(s.v, rng.weights(d, kDenominatorBound));
  const Triangulation delta = split_complex(s);
  for (int i = 1; i <= subdivisions; ++i) {
    const Face f = split_facet(d, i);
    const auto pts = delta.points_of(f);
    std::optional<Point> r;
    for (int attempt = 0; attempt < 32 && !r; ++attempt) {
      Point cand = combine(pts, rng.weights(pts.size(), kDenominatorBound));
      if (!each_delaunay || check_delaunay(stellar_subdivide(delta, f, cand), DelaunayMode::FacetsEmpty).ok) r = cand;
    }
    if (!r) {
      const auto ex = expand_at(delta, d, {f});
      r = ex.triangulation.vertices().back();
    }
    s.r.push_back(std::move(*r));
  }
  return s;
}

Config2D random_planar_config(Rng& rng) {
  const auto v = random_simplex(3, rng);
  Config2D cfg;
  cfg.A = v[0];
  cfg.B = v[1];
  cfg.C = v[2];
  cfg.x = combine(v, rng.weights(3, kDenominatorBound));
  cfg.a = combine({cfg.x, cfg.B, cfg.C}, rng.weights(3, kDenominatorBound));
  cfg.b = combine({cfg.x, cfg.C, cfg.A}, rng.weights(3, kDenominatorBound));
  cfg.c = combine({cfg.x, cfg.A, cfg.B}, rng.weights(3, kDenominatorBound));
  return cfg;
}

namespace {

TrialOutcome run_trial(int d, std::uint64_t seed) {
  Rng rng(seed);
  const SplitInstance inst = random_split(d, 3, rng);
  const Triangulation t = subdivided_complex(inst);
  TrialOutcome out;
  out.seed = seed;
  out.ridge_violations = check_delaunay(t, DelaunayMode::InteriorRidgesLocal).violations;
  if (d == 3) {
    const Config2D cfg{inst.v[0], inst.v[1], inst.v[2], inst.c, inst.r[0], inst.r[1], inst.r[2]};
    out.coplanar = true;
    out.planar_type = has_planar_type(cfg);
    if (out.planar_type) out.angles = angle_obstruction_2d(cfg);
    return out;
  }
  const SplitGeometry g = split_geometry(split_complex(inst), 3);
  const InversionResult inv = reduce_by_inversion(t, g);
  out.pipeline = true;
  out.coplanar = inv.coplanar;
  out.planar_type = inv.coplanar && has_planar_type(inv.projected);
  if (out.planar_type) out.angles = angle_obstruction_2d(inv.projected);
  return out;
}

}  // namespace

CertifyReport certify_sweep(int d, int trials, std::uint64_t seed, unsigned threads) {
  if (d < 3) fail(Errc::BadDimension, "certification needs d >= 3");
  if (trials < 0) fail(Errc::BadParameters, "trial count must be non-negative");
  CertifyReport rep{d, seed, trials, 0, 0, std::vector<TrialOutcome>(static_cast<std::size_t>(trials))};
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(1, trials));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      for (int i = static_cast<int>(w); i < trials; i += static_cast<int>(threads))
        rep.outcomes[i] = run_trial(d, instance_seed(seed, static_cast<std::uint64_t>(i)));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& o : rep.outcomes) {
    if (!o.ridge_violations.empty()) ++rep.violated;
    if (o.angles && !o.angles->failing.empty()) ++rep.obstructed;
  }
  return rep;
}

}  // namespace inscriber
