#include "inscriber/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "inscriber/subsets.hpp"

namespace inscriber {

namespace {

void require_cyclic_size(int d, int n) {
  if (d < 2) fail(Errc::BadDimension, "cyclic polytopes need d >= 2");
  if (n < d + 1) fail(Errc::BadParameters, "cyclic polytopes need n >= d+1");
}

std::vector<Face> zero_based(std::vector<Face> facets) {
  for (auto& f : facets)
    for (auto& v : f) --v;
  return facets;
}

void require_gale(const std::vector<Face>& facets, int d, int n, const char* who) {
  std::vector<Face> got = facets;
  std::sort(got.begin(), got.end());
  if (got != zero_based(gale_evenness_facets(d, n)))
    fail(Errc::VerificationFailed, std::string(who) + " facets differ from Gale's evenness prediction");
}

Point moment_point(const Scalar& t, int m) {
  Point p(m);
  Scalar power = t;
  for (int i = 0; i < m; ++i, power *= t) p[i] = power;
  return p;
}

bool strictly_increasing(const std::vector<Scalar>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) return false;
  return true;
}

}  // namespace

std::vector<Face> gale_evenness_facets(int d, int n) {
  if (d < 2 || n < d + 1) fail(Errc::BadParameters, "Gale evenness needs n >= d+1 >= 3");
  std::vector<Face> out;
  for_each_subset(n, d, [&](const std::vector<int>& s) {
    std::vector<bool> in(n, false);
    for (int v : s) in[v] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (in[i]) continue;
      int between = 0;
      for (int j = i + 1; j < n && ok; ++j) {
        if (in[j]) {
          ++between;
          continue;
        }
        if (between % 2 != 0) ok = false;
      }
    }
    if (ok) {
      Face f;
      for (int v : s) f.push_back(v + 1);
      out.push_back(std::move(f));
    }
    return true;
  });
  return out;
}

unsigned long long cyclic_facet_count(int d, int n) {
  require_cyclic_size(d, n);
  const unsigned long m = static_cast<unsigned long>(d / 2);
  mpz_class b;
  if (d % 2 == 0) {
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n) - m, m);
    b = b * n / (static_cast<unsigned long>(n) - m);
  } else {
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n) - m - 1, m);
    b *= 2;
  }
  return b.get_ui();
}

std::vector<Face> facets_by_enumeration(const std::vector<Point>& vertices, int d) {
  require_dimension(vertices, static_cast<std::size_t>(d));
  const int n = static_cast<int>(vertices.size());
  std::vector<Face> out;
  for_each_subset(n, d, [&](const std::vector<int>& s) {
    std::vector<Point> pts;
    for (int v : s) pts.push_back(vertices[v]);
    Hyperplane h;
    try {
      h = hyperplane_through(pts);
    } catch (const Error&) {
      fail(Errc::DegeneratePointSet, "d vertices span less than a hyperplane");
    }
    int pos = 0, neg = 0, on = 0;
    for (int v = 0; v < n; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      switch (hyperplane_side(h, vertices[v])) {
        case Side::Positive: ++pos; break;
        case Side::Negative: ++neg; break;
        case Side::On: ++on; break;
      }
    }
    if (pos > 0 && neg > 0) return true;
    if (on > 0) fail(Errc::DegeneratePointSet, "a supporting hyperplane holds more than d vertices");
    out.emplace_back(s.begin(), s.end());
    return true;
  });
  return out;
}

CyclicStandard cyclic_standard(int d, int n, int growth_cap) {
  if (d < 3) fail(Errc::BadDimension, "the standard construction needs d >= 3");
  require_cyclic_size(d, n);
  if (growth_cap < 0) fail(Errc::BadParameters, "growth cap must be non-negative");
  const int m = d - 1;
  CyclicStandard out;
  std::vector<Point> pts;
  for (int i = 0; i < d; ++i) {
    out.params.emplace_back(i);
    pts.push_back(moment_point(Scalar(i), m));
  }
  Face first(d);
  for (int i = 0; i < d; ++i) first[i] = i;
  Triangulation t = Triangulation::assemble(m, pts, {first});
  for (int i = d; i < n - 1; ++i) {
    std::vector<Sphere> spheres;
    for (const auto& f : t.facets()) spheres.push_back(circumsphere(t.points_of(f)));
    Scalar inc = 1;
    std::optional<Point> p;
    for (int k = 0; k <= growth_cap && !p; ++k, inc *= 2) {
      Point cand = moment_point(out.params.back() + inc, m);
      if (std::all_of(spheres.begin(), spheres.end(),
                      [&](const Sphere& s) { return sphere_side(s, cand) == SphereSide::Outside; })) {
        out.params.push_back(out.params.back() + inc);
        p = std::move(cand);
      }
    }
    if (!p) fail(Errc::GrowthCapExceeded, "parameter doubling cap reached");
    // Join the new point to every boundary ridge it sees.
    const int id = static_cast<int>(t.vertex_count());
    std::vector<Face> facets = t.facets();
    for (const auto& [ridge, owners] : t.ridges()) {
      if (owners.size() != 1) continue;
      const Face& f = t.facets()[owners[0]];
      int apex = -1;
      for (int v : f)
        if (!std::binary_search(ridge.begin(), ridge.end(), v)) apex = v;
      const Hyperplane h = hyperplane_through(t.points_of(ridge));
      const Side inner = hyperplane_side(h, t.vertices()[apex]);
      const Side side = hyperplane_side(h, *p);
      if (side != Side::On && side != inner) {
        Face nf = ridge;
        nf.push_back(id);
        facets.push_back(std::move(nf));
      }
    }
    pts.push_back(*p);
    t = Triangulation::assemble(m, pts, std::move(facets));
    if (!check_delaunay(t, DelaunayMode::FacetsEmpty).ok)
      fail(Errc::VerificationFailed, "incremental Delaunay update failed");
  }
  out.polytope = lift_to_inscribed(t, false);
  require_gale(out.polytope.facets, d, n, "cyclic_standard");
  return out;
}

InscribedPolytope cyclic_spherical(int d, int n, const std::vector<Scalar>& params) {
  require_cyclic_size(d, n);
  if (static_cast<int>(params.size()) != n) fail(Errc::BadParameters, "expected n parameters");
  if (!strictly_increasing(params)) fail(Errc::NonDistinctParams, "parameters must be strictly increasing");
  if (sgn(params.front()) <= 0) fail(Errc::BadParameters, "parameters must be positive");
  InscribedPolytope p;
  p.d = d;
  p.sphere = unit_sphere(d);
  Point half(d, Scalar(0));
  half[0] = Scalar(1, 2);
  for (const auto& t : params) {
    Point v(d);
    Scalar power = 1, denom = 0;
    for (int i = 0; i < d; ++i, power *= t) {
      v[i] = power;
      denom += power * power;
    }
    for (auto& x : v) x /= denom;
    if (dist_sq(v, half) != Scalar(1, 4)) fail(Errc::VerificationFailed, "curve point off its sphere");
    v = scale(v, 2);
    v[0] -= 1;
    p.vertices.push_back(std::move(v));
  }
  p.facets = facets_by_enumeration(p.vertices, d);
  require_gale(p.facets, d, n, "cyclic_spherical");
  return p;
}

InscribedPolytope cyclic_trig(int d, int n, const std::vector<Scalar>& half_tangents) {
  if (d % 2 != 0) fail(Errc::OddDimension, "the trigonometric curve needs even d");
  if (d < 4) fail(Errc::BadDimension, "the trigonometric curve needs d >= 4");
  require_cyclic_size(d, n);
  if (static_cast<int>(half_tangents.size()) != n) fail(Errc::BadParameters, "expected n parameters");
  std::vector<Scalar> s = half_tangents;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(Errc::NonDistinctParams, "parameters must be distinct");
  InscribedPolytope p;
  p.d = d;
  p.sphere = Sphere{Point(d, Scalar(0)), Scalar(d) / 2};
  for (const auto& t : s) {
    const Scalar q = 1 + t * t;
    const Scalar re = (1 - t * t) / q, im = 2 * t / q;
    Point v(d);
    Scalar zr = 1, zi = 0;
    for (int j = 0; j < d / 2; ++j) {
      const Scalar nr = zr * re - zi * im;
      zi = zr * im + zi * re;
      zr = nr;
      v[2 * j] = zr;
      v[2 * j + 1] = zi;
    }
    if (norm_sq(v) != p.sphere.radius_sq) fail(Errc::VerificationFailed, "trigonometric point off its sphere");
    p.vertices.push_back(std::move(v));
  }
  p.facets = facets_by_enumeration(p.vertices, d);
  require_gale(p.facets, d, n, "cyclic_trig");
  return p;
}

std::vector<Scalar> default_spherical_params(int n) {
  std::vector<Scalar> out;
  for (int i = 1; i <= n; ++i) out.emplace_back(i);
  return out;
}

std::vector<Scalar> default_half_tangents(int n) {
  std::vector<Scalar> out;
  for (int i = 0; i < n; ++i) out.emplace_back(i - n / 2);
  return out;
}

FamilyVector family_value(const std::string& family, long long n, long long k) {
  if (n < 3 || k < 0) fail(Errc::BadParameters, "families need n >= 3 and k >= 0");
  if (family == "left") return {{2 * n - 2 + k, 3 * n - 3 + 3 * k, n + 1 + 2 * k}, {family}};
  if (family == "middle") return {{2 * n - 1 + k, 3 * n - 1 + 3 * k, n + 2 + 2 * k}, {family}};
  if (family == "right") return {{2 * n + k, 3 * n + 1 + 3 * k, n + 3 + 2 * k}, {family}};
  fail(Errc::BadParameters, "unknown family " + family);
}

std::vector<FamilyVector> fvector_families(long long f0_max) {
  std::map<FVector3, std::vector<std::string>> merged;
  for (const char* fam : {"left", "middle", "right"})
    for (long long n = 3;; ++n) {
      if (family_value(fam, n, 0).f.f0 > f0_max) break;
      for (long long k = 0;; ++k) {
        const auto v = family_value(fam, n, k);
        if (v.f.f0 > f0_max) break;
        auto& tags = merged[v.f];
        if (std::find(tags.begin(), tags.end(), fam) == tags.end()) tags.push_back(fam);
      }
    }
  std::vector<FamilyVector> out;
  for (auto& [f, tags] : merged) out.push_back({f, std::move(tags)});
  return out;
}

bool steinitz_member(long long f0, long long f2) {
  return f0 >= 4 && f2 >= 4 && f2 <= 2 * f0 - 4 && f0 <= 2 * f2 - 4;
}

std::string fvectors_csv(const std::vector<FamilyVector>& rows) {
  std::ostringstream os;
  os << "f0,f1,f2,family\n";
  for (const auto& r : rows) {
    os << r.f.f0 << ',' << r.f.f1 << ',' << r.f.f2 << ',';
    for (std::size_t i = 0; i < r.families.size(); ++i) os << (i ? "|" : "") << r.families[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace inscriber
