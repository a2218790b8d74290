#include "doctest.h"

#include <set>

#include "inscriber/error.hpp"
#include "inscriber/generators.hpp"
#include "support.hpp"

using namespace inscriber;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an inscriber::Error");
  return Errc::BadInput;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Facet count of a simplicial neighborly d-polytope with n vertices from its
// h-vector: h_i = C(n-d-1+i, i) for i <= d/2, symmetric, summing to f_(d-1).
long long ubt_facets(int d, int n) {
  long long total = 0;
  for (int i = 0; i <= d; ++i) {
    const int j = std::min(i, d - i);
    total += binom(n - d - 1 + j, j);
  }
  return total;
}

// Facets of conv(points) in R^d by brute force: a d-subset is a facet when
// every other point lies strictly on one side of it.
std::vector<Face> oracle_facets(const std::vector<Point>& pts, int d) {
  const int n = static_cast<int>(pts.size());
  std::vector<Face> out;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    int side = 0;
    bool facet = true;
    for (int v = 0; v < n && facet; ++v) {
      if (std::find(idx.begin(), idx.end(), v) != idx.end()) continue;
      std::vector<Point> s;
      for (int u : idx) s.push_back(pts[u]);
      s.push_back(pts[v]);
      const int o = testing_support::oracle_orientation(s);
      if (o == 0 || (side != 0 && o != side)) facet = false;
      side = o;
    }
    if (facet) out.push_back(idx);
    int i = d - 1;
    while (i >= 0 && idx[i] == n - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Face> one_based(std::vector<Face> f) {
  for (auto& x : f)
    for (auto& v : x) ++v;
  return f;
}

std::vector<Face> sorted(std::vector<Face> f) {
  std::sort(f.begin(), f.end());
  return f;
}

bool on_sphere(const InscribedPolytope& p) {
  for (const auto& v : p.vertices)
    if (testing_support::sq_dist(v, p.sphere.center) != p.sphere.radius_sq) return false;
  return true;
}

const std::vector<std::pair<int, int>> kCases{{3, 5}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 7}};

}  // namespace

TEST_CASE("Gale evenness matches the hull of the moment curve") {
  for (int d = 2; d <= 4; ++d)
    for (int n = d + 1; n <= 8; ++n) {
      std::vector<Point> pts;
      for (int t = 1; t <= n; ++t) {
        Point p(d);
        Scalar power = t;
        for (int i = 0; i < d; ++i, power *= t) p[i] = power;
        pts.push_back(p);
      }
      CHECK(gale_evenness_facets(d, n) == one_based(oracle_facets(pts, d)));
    }
}

TEST_CASE("closed-form facet count matches the h-vector sum") {
  for (int d = 2; d <= 6; ++d)
    for (int n = d + 1; n <= 10; ++n) {
      CHECK(cyclic_facet_count(d, n) == static_cast<unsigned long long>(ubt_facets(d, n)));
      CHECK(gale_evenness_facets(d, n).size() == cyclic_facet_count(d, n));
    }
  CHECK(cyclic_facet_count(4, 6) == 9);
}

TEST_CASE("facet enumeration agrees with the oracle") {
  testing_support::Gen g(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pts = g.points(7, 3, 9, 5);
    std::vector<Face> f;
    try {
      f = facets_by_enumeration(pts, 3);
    } catch (const Error&) {
      continue;
    }
    CHECK(sorted(f) == sorted(oracle_facets(pts, 3)));
  }
}

TEST_CASE("all three generators realize the cyclic polytope") {
  for (auto [d, n] : kCases) {
    const auto gale = gale_evenness_facets(d, n);
    std::vector<InscribedPolytope> outs;
    outs.push_back(cyclic_standard(d, n).polytope);
    outs.push_back(cyclic_spherical(d, n, default_spherical_params(n)));
    if (d % 2 == 0) outs.push_back(cyclic_trig(d, n, default_half_tangents(n)));
    for (const auto& p : outs) {
      CHECK(p.vertices.size() == static_cast<std::size_t>(n));
      CHECK(on_sphere(p));
      CHECK(verify_inscribed(p).ok);
      CHECK(one_based(sorted(p.facets)) == gale);
      CHECK(one_based(sorted(oracle_facets(p.vertices, d))) == gale);
    }
  }
}

TEST_CASE("standard construction keeps the parameters increasing") {
  const auto s = cyclic_standard(4, 8);
  CHECK(s.params.size() == 7);
  for (std::size_t i = 1; i < s.params.size(); ++i) CHECK(s.params[i - 1] < s.params[i]);
  CHECK(s.polytope.north == 7);
}

TEST_CASE("generator parameter errors") {
  CHECK(code_of([] { cyclic_trig(3, 6, default_half_tangents(6)); }) == Errc::OddDimension);
  CHECK(code_of([] { cyclic_trig(2, 5, default_half_tangents(5)); }) == Errc::BadDimension);
  CHECK(code_of([] { cyclic_trig(4, 6, {Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(4)}); }) ==
        Errc::NonDistinctParams);
  CHECK(code_of([] { cyclic_spherical(3, 5, {Scalar(1), Scalar(3), Scalar(2), Scalar(4), Scalar(5)}); }) ==
        Errc::NonDistinctParams);
  CHECK(code_of([] { cyclic_spherical(3, 5, {Scalar(-1), Scalar(1), Scalar(2), Scalar(3), Scalar(4)}); }) ==
        Errc::BadParameters);
  CHECK(code_of([] { cyclic_spherical(3, 4, default_spherical_params(3)); }) == Errc::BadParameters);
  CHECK(code_of([] { cyclic_standard(3, 3); }) == Errc::BadParameters);
  CHECK(code_of([] { cyclic_standard(4, 8, -1); }) == Errc::BadParameters);
  // Unit steps already clear every circumsphere on this curve.
  CHECK_NOTHROW(cyclic_standard(5, 9, 0));
}

TEST_CASE("f-vector families") {
  CHECK(family_value("left", 3, 0).f == FVector3{4, 6, 4});
  CHECK(family_value("middle", 3, 0).f == FVector3{5, 8, 5});
  CHECK(family_value("right", 3, 0).f == FVector3{6, 10, 6});
  CHECK(code_of([] { family_value("center", 3, 0); }) == Errc::BadParameters);
  CHECK(code_of([] { family_value("left", 2, 0); }) == Errc::BadParameters);
}

TEST_CASE("families cover exactly the Steinitz set") {
  const long long cap = 200;
  std::set<FVector3> from_families;
  for (const auto& r : fvector_families(cap)) {
    CHECK(r.f.f1 == r.f.f0 + r.f.f2 - 2);
    CHECK(steinitz_member(r.f.f0, r.f.f2));
    from_families.insert(r.f);
  }
  std::set<FVector3> steinitz;
  for (long long f0 = 4; f0 <= cap; ++f0)
    for (long long f2 = 4; f2 <= 2 * f0 - 4; ++f2)
      if (f0 <= 2 * f2 - 4) steinitz.insert({f0, f0 + f2 - 2, f2});
  CHECK(from_families == steinitz);
}

TEST_CASE("f-vector CSV layout") {
  const std::string csv = fvectors_csv(fvector_families(6));
  CHECK(csv.rfind("f0,f1,f2,family\n4,6,4,left\n", 0) == 0);
  CHECK(csv.find("6,10,6,") != std::string::npos);
}
