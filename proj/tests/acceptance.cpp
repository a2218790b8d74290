// Acceptance run: one PASS/FAIL line per criterion. Every predicate is exact
// except the nine-angle sum, whose tolerance is pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "inscriber/builder.hpp"
#include "inscriber/error.hpp"
#include "inscriber/generators.hpp"
#include "inscriber/inscriber.h"
#include "inscriber/obstruction.hpp"
#include "inscriber/serialize.hpp"

using namespace inscriber;

namespace {

constexpr double kAngleRelTol = 1e-9;
constexpr std::uint64_t kMaster = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  insc_string_free(s);
  return out;
}

Outcome trees_are_buildable() {
  Outcome o;
  int builds = 0;
  for (const DualTree& tree : enumerate_trees(9)) {
    if (!decide_inscribable(tree).inscribable) continue;
    const std::string text = dump(to_json(tree));
    insc_tree* t = nullptr;
    if (insc_tree_parse(text.c_str(), &t) != INSC_OK) {
      o.require(false, insc_last_error());
      continue;
    }
    for (int d = 3; d <= 5; ++d) {
      const std::string tag = "d=" + std::to_string(d) + " tree " + canonical_form(tree);
      insc_build* b = nullptr;
      if (insc_build_tree(t, -1, d, nullptr, 0, &b) != INSC_OK) {
        o.require(false, tag + ": " + insc_last_error());
        continue;
      }
      ++builds;
      int ok = 0;
      char* report = nullptr;
      o.require(insc_build_verify(b, &ok, &report) == INSC_OK && ok == 1, tag + ": build report " + take(report));
      // Independent recheck of the written documents through the C++ core.
      insc_triangulation* tr = nullptr;
      char* tj = nullptr;
      insc_build_triangulation(b, &tr);
      insc_triangulation_to_json(tr, &tj);
      const Triangulation tri = triangulation_from_json(parse_json(take(tj)));
      o.require(check_delaunay(tri, DelaunayMode::FacetsEmpty).ok, tag + ": mode 1");
      o.require(check_delaunay(tri, DelaunayMode::InteriorRidgesLocal).ok, tag + ": mode 4");
      insc_polytope* p = nullptr;
      char* pj = nullptr;
      insc_build_polytope(b, &p);
      insc_polytope_to_json(p, &pj);
      const InscribedPolytope poly = polytope_from_json(parse_json(take(pj)));
      o.require(verify_inscribed(poly).ok, tag + ": inscribed");
      o.require(poly.vertices.size() == static_cast<std::size_t>(d + tree.node_count()), tag + ": vertex count");
      insc_polytope_free(p);
      insc_triangulation_free(tr);
      insc_build_free(b);
    }
    insc_tree_free(t);
  }
  o.detail = o.pass ? std::to_string(builds) + " builds" : o.detail;
  return o;
}

Outcome planar_obstruction() {
  Outcome o;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(instance_seed(kMaster + 2, i));
    const Config2D cfg = random_planar_config(rng);
    o.require(has_planar_type(cfg), "configuration " + std::to_string(i) + " not of the required type");
    const AngleReport r = angle_obstruction_2d(cfg);
    o.require(!r.failing.empty(), "configuration " + std::to_string(i) + " has no failing edge");
    worst = std::max(worst, std::abs(r.nine_angle_sum - 6 * M_PI) / (6 * M_PI));
  }
  o.require(worst <= kAngleRelTol, "nine-angle sum off by " + std::to_string(worst));
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "1000 configurations, worst angle-sum rel. error %.2e", worst);
    o.detail = buf;
  }
  return o;
}

Outcome split_positions() {
  Outcome o;
  int count = 0;
  for (int d = 3; d <= 5; ++d)
    for (int k = 1; k < d; ++k)
      for (int i = 0; i < 100; ++i) {
        Rng rng(instance_seed(kMaster + 3 + 100 * d + k, i));
        const Triangulation delta = split_complex(random_split(d, 0, rng));
        const SplitGeometry g = split_geometry(delta, k);
        const std::string tag = "d=" + std::to_string(d) + " k=" + std::to_string(k) + " #" + std::to_string(i);
        for (int f = 1; f <= d; ++f) {
          const Sphere s = circumsphere(delta.points_of(split_facet(d, f)));
          const SphereSide want = f > k ? SphereSide::On : SphereSide::Outside;
          o.require(sphere_side(s, g.x) == want, tag + ": x against circ(F_" + std::to_string(f) + ")");
        }
        o.require(g.t_x <= g.t_x_bar && g.t_x_bar < 0 && 0 < g.t_y_bar && g.t_y_bar <= g.t_y, tag + ": ordering");
        o.require(g.x == add(g.ell.base, scale(g.ell.direction, g.t_x)) && g.ell.base == g.c, tag + ": x on ell");
        o.require(verify_split_positions(g, delta).ok, tag + ": report");
        ++count;
      }
  if (o.pass) o.detail = std::to_string(count) + " geometries";
  return o;
}

Outcome single_subdivision() {
  Outcome o;
  std::string summary;
  for (int d = 3; d <= 4; ++d) {
    int accepted = 0;
    std::array<int, 3> cases{};
    for (int i = 0; accepted < 100 && i < 5000; ++i) {
      Rng rng(instance_seed(kMaster + 4 + d, i));
      const Triangulation delta = split_complex(random_split(d, 0, rng));
      // k ranges over 2..d-1 so several facets F_i with i <= k can be subdivided.
      const SplitGeometry g = split_geometry(delta, 2 + i % (d - 2));
      const int f = 1 + rng.uniform(0, g.k - 1);
      const Triangulation sub = expand_at(delta, d, {split_facet(d, f)}).triangulation;
      const SubdivisionReport rep = verify_single_subdivision(delta, sub, g);
      if (!rep.hypothesis) continue;
      ++accepted;
      o.require(rep.ok, "d=" + std::to_string(d) + " #" + std::to_string(i) + ": x not outside a new circumsphere");
      for (const auto& nf : rep.facets)
        o.require(nf.side == SphereSide::Outside, "d=" + std::to_string(d) + " #" + std::to_string(i));
      for (int c = 0; c < 3; ++c) cases[c] += rep.case_counts[c];
    }
    o.require(accepted >= 100, "d=" + std::to_string(d) + ": only " + std::to_string(accepted) + " Delaunay instances");
    for (int c = 0; c < 3; ++c) o.require(cases[c] > 0, "d=" + std::to_string(d) + ": a proof case never occurred");
    summary += "d=" + std::to_string(d) + ": " + std::to_string(accepted) + " instances, cases " +
               std::to_string(cases[0]) + "/" + std::to_string(cases[1]) + "/" + std::to_string(cases[2]) + "; ";
  }
  if (o.pass) o.detail = summary.substr(0, summary.size() - 2);
  return o;
}

Outcome inversion_pipeline() {
  Outcome o;
  for (int i = 0; i < 100; ++i) {
    Rng rng(instance_seed(kMaster + 5, i));
    const SplitInstance s = random_split(4, 3, rng);
    const Triangulation t = subdivided_complex(s);
    const InversionResult inv = reduce_by_inversion(t, split_geometry(split_complex(s), 3));
    const std::string tag = "#" + std::to_string(i);
    o.require(inv.coplanar && inv.coplanar_rank == 2, tag + ": c', v'_1..v'_3 not coplanar");
    o.require(has_planar_type(inv.projected), tag + ": projection has the wrong type");
    o.require(!angle_obstruction_2d(inv.projected).failing.empty(), tag + ": no failing planar edge");
    o.require(!check_delaunay(t, DelaunayMode::InteriorRidgesLocal).ok, tag + ": ridge check passed");
  }
  if (o.pass) o.detail = "100 instances at d=4";
  return o;
}

Outcome delaunay_equivalence() {
  Outcome o;
  std::mt19937_64 eng(kMaster + 6);
  auto rational = [&] {
    const int q = std::uniform_int_distribution<int>(1, 12)(eng);
    return Scalar(std::uniform_int_distribution<int>(-5 * q, 5 * q)(eng)) / q;
  };
  int done = 0, skipped = 0, mode2 = 0;
  while (done < 200) {
    const int m = done < 100 ? 2 : 3;
    const int n = std::uniform_int_distribution<int>(m + 1, m == 2 ? 9 : 7)(eng);
    std::vector<Point> pts(n, Point(m));
    for (auto& p : pts)
      for (auto& x : p) x = rational();
    std::optional<Triangulation> t;
    try {
      t = brute_force_delaunay(pts);
    } catch (const Error&) {
      ++skipped;  // degenerate draw; resample
      continue;
    }
    const bool m1 = check_delaunay(*t, DelaunayMode::FacetsEmpty).ok;
    const bool m3 = check_delaunay(*t, DelaunayMode::RidgesSupported).ok;
    const bool m4 = check_delaunay(*t, DelaunayMode::InteriorRidgesLocal).ok;
    const std::string tag = "set " + std::to_string(done);
    o.require(m1 == m3 && m3 == m4, tag + ": modes 1, 3, 4 disagree");
    o.require(m1, tag + ": brute-force output rejected");
    if (done % 10 == 0) {
      o.require(check_delaunay(*t, DelaunayMode::AllFacesSupported).ok == m1, tag + ": mode 2 disagrees");
      ++mode2;
    }
    ++done;
  }
  if (o.pass)
    o.detail = "200 sets (" + std::to_string(skipped) + " degenerate redrawn), mode 2 on " + std::to_string(mode2);
  return o;
}

Outcome bounded_degree() {
  Outcome o;
  for (int d = 3; d <= 5; ++d)
    for (int n = 0; n <= 10; ++n) {
      const InscribedPolytope p = build_bounded_degree(d, n);
      const std::string tag = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      const auto adj = vertex_adjacency(p);
      const int nv = static_cast<int>(p.vertices.size());
      for (int i = 0; i < nv; ++i) {
        std::set<int> want;
        for (int j = std::max(0, i - d); j <= std::min(nv - 1, i + d); ++j)
          if (j != i) want.insert(j);
        o.require(std::set<int>(adj[i].begin(), adj[i].end()) == want, tag + ": adjacency of " + std::to_string(i));
        o.require(static_cast<int>(adj[i].size()) <= 2 * d, tag + ": degree");
      }
      o.require(verify_inscribed(p).ok, tag + ": inscribed");
    }
  if (o.pass) o.detail = "d=3..5, n=0..10";
  return o;
}

Outcome cyclic_polytopes() {
  Outcome o;
  int outputs = 0;
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 5}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 7}}) {
    std::vector<Face> gale = gale_evenness_facets(d, n);
    std::sort(gale.begin(), gale.end());
    std::vector<std::pair<std::string, InscribedPolytope>> outs;
    outs.push_back({"standard", cyclic_standard(d, n).polytope});
    outs.push_back({"spherical", cyclic_spherical(d, n, default_spherical_params(n))});
    if (d % 2 == 0) outs.push_back({"trig", cyclic_trig(d, n, default_half_tangents(n))});
    for (auto& [name, p] : outs) {
      const std::string tag = name + " C_" + std::to_string(d) + "(" + std::to_string(n) + ")";
      o.require(verify_inscribed(p).ok, tag + ": not inscribed");
      std::vector<Face> f = p.facets;
      for (auto& face : f)
        for (auto& v : face) ++v;  // Gale facets are 1-based
      std::sort(f.begin(), f.end());
      o.require(f == gale, tag + ": facets differ from Gale evenness");
      ++outputs;
    }
  }
  o.require(gale_evenness_facets(4, 6).size() == 9 && cyclic_facet_count(4, 6) == 9, "C_4(6) facet count");
  if (o.pass) o.detail = std::to_string(outputs) + " generator outputs";
  return o;
}

Outcome steinitz_coverage() {
  Outcome o;
  std::set<FVector3> fam;
  for (const auto& r : fvector_families(200)) fam.insert(r.f);
  std::set<FVector3> want;
  for (long long f0 = 4; f0 <= 200; ++f0)
    for (long long f2 = 4; f2 <= 2 * f0 - 4; ++f2)
      if (f0 <= 2 * f2 - 4) want.insert({f0, f0 + f2 - 2, f2});
  o.require(fam == want, "family set differs from the Steinitz set");
  o.require(family_value("left", 3, 0).f == FVector3{4, 6, 4}, "left family at n=3, k=0");
  if (o.pass) o.detail = std::to_string(want.size()) + " f-vectors";
  return o;
}

Outcome round_trips() {
  Outcome o;
  Rng rng(kMaster + 10);
  for (int i = 0; i < 1000; ++i) {
    const int m = 2 + i % 4;
    Point q(m - 1);
    for (auto& x : q) x = rng.rational(kDenominatorBound, 4);
    o.require(stereographic_project(inverse_stereographic(q)) == q, "stereographic #" + std::to_string(i));
  }
  for (int i = 0; i < 500; ++i) {
    const int d = 3 + i % 3;
    Triangulation t = build_path(d, 1 + i % 3).triangulation;
    const Face f = t.facets()[rng.uniform(0, static_cast<int>(t.facet_count()) - 1)];
    const auto w = rng.weights(f.size(), 16);
    Point p(d - 1, Scalar(0));
    const auto pts = t.points_of(f);
    for (std::size_t j = 0; j < pts.size(); ++j) p = add(p, scale(pts[j], w[j]));
    const Triangulation s = stellar_subdivide(t, f, p);
    o.require(undo_stellar(s, static_cast<int>(s.vertex_count()) - 1) == t, "undo #" + std::to_string(i));
  }
  int replays = 0;
  for (int d = 3; d <= 5; ++d)
    for (int n = 1; n <= 6; ++n) {
      const BuildResult r = build_path(d, n);
      const std::string trace_text = dump(to_json(r.trace));
      const Triangulation again = replay(trace_from_json(parse_json(trace_text)));
      o.require(dump(to_json(again)) == dump(to_json(r.triangulation)), "replay d=" + std::to_string(d));
      o.require(dump(to_json(build_path(d, n).trace)) == trace_text, "rebuild d=" + std::to_string(d));
      ++replays;
    }
  if (o.pass) o.detail = "1000 projections, 500 undos, " + std::to_string(replays) + " replays";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"stacked trees of max degree <= 3 build and verify", trees_are_buildable},
      {"planar angle obstruction", planar_obstruction},
      {"split geometry positions", split_positions},
      {"single subdivision keeps x outside", single_subdivision},
      {"inversion pipeline at d=4", inversion_pipeline},
      {"Delaunay criteria agree", delaunay_equivalence},
      {"bounded degree family", bounded_degree},
      {"cyclic polytopes", cyclic_polytopes},
      {"f-vector families cover the Steinitz set", steinitz_coverage},
      {"round trips", round_trips},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %s  [%s; %.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
