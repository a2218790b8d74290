#include "doctest.h"

#include <map>
#include <set>

#include "inscriber/error.hpp"
#include "inscriber/trees.hpp"
#include "support.hpp"

using namespace inscriber;
using testing_support::Gen;

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

DualTree star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return DualTree(leaves + 1, e);
}

DualTree path(int nodes) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < nodes; ++i) e.push_back({i - 1, i});
  return DualTree(nodes, e);
}

// Labeled tree from a Pruefer sequence over n nodes.
std::vector<std::pair<int, int>> pruefer_tree(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  for (int x : seq)
    for (int leaf = 0; leaf < n; ++leaf)
      if (degree[leaf] == 1) {
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
        break;
      }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.push_back({u, v});
        break;
      }
    }
  return edges;
}

// Canonical form by brute force: the lexicographically least sorted edge list
// over every relabeling.
std::vector<std::pair<int, int>> brute_canonical(const std::vector<std::pair<int, int>>& edges, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : edges) {
      int x = perm[a], y = perm[b];
      if (x > y) std::swap(x, y);
      e.push_back({x, y});
    }
    std::sort(e.begin(), e.end());
    if (first || e < best) best = e;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Stacked polytope built combinatorially: returns d-element facets and the
// dual tree recorded while stacking.
struct Stacked {
  std::vector<Face> facets;
  DualTree tree;
};

Stacked random_stacked_polytope(Gen& g, int d, int stackings) {
  std::map<Face, int> owner;  // boundary facet -> simplex node holding it
  for (int skip = 0; skip <= d; ++skip) {
    Face f;
    for (int v = 0; v <= d; ++v)
      if (v != skip) f.push_back(v);
    owner[f] = 0;
  }
  std::vector<std::pair<int, int>> edges;
  int next_vertex = d + 1;
  for (int s = 1; s <= stackings; ++s) {
    auto it = owner.begin();
    std::advance(it, g.integer(0, static_cast<int>(owner.size()) - 1));
    const Face f = it->first;
    edges.push_back({it->second, s});
    owner.erase(it);
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face nf = f;
      nf[i] = next_vertex;
      std::sort(nf.begin(), nf.end());
      owner[nf] = s;
    }
    ++next_vertex;
  }
  Stacked out{{}, DualTree(stackings + 1, edges)};
  for (const auto& [f, node] : owner) out.facets.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("tree validation") {
  CHECK(code_of([] { DualTree(0, {}); }) == Errc::EmptyTree);
  CHECK(code_of([] { DualTree(3, {{0, 1}}); }) == Errc::InvalidTree);
  CHECK(code_of([] { DualTree(4, {{0, 1}, {1, 0}, {2, 3}}); }) == Errc::InvalidTree);
  CHECK(code_of([] { DualTree(2, {{0, 0}}); }) == Errc::InvalidTree);
  CHECK(code_of([] { DualTree(2, {{0, 5}}); }) == Errc::InvalidTree);
  CHECK(DualTree(1, {}).node_count() == 1);
}

TEST_CASE("decision follows the maximum degree") {
  const auto k14 = decide_inscribable(star(4));
  CHECK_FALSE(k14.inscribable);
  CHECK(k14.max_degree == 4);
  CHECK(k14.witness == 0);
  CHECK(decide_inscribable(star(3)).inscribable);
  CHECK(decide_inscribable(path(9)).inscribable);
  CHECK(decide_inscribable(DualTree(1, {})).inscribable);
}

TEST_CASE("property: decision is exactly max degree <= 3") {
  Gen g(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = g.integer(2, 12);
    std::vector<int> seq(n - 2);
    for (auto& x : seq) x = g.integer(0, n - 1);
    const DualTree t(n, pruefer_tree(seq, n));
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, t.degree(v));
    const auto dec = decide_inscribable(t);
    CHECK(dec.max_degree == maxdeg);
    CHECK(dec.inscribable == (maxdeg <= 3));
    if (!dec.inscribable) CHECK(t.degree(*dec.witness) >= 4);
  }
}

TEST_CASE("canonical forms agree with brute-force isomorphism") {
  Gen g(42);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      auto random_edges = [&] {
        std::vector<int> seq(n - 2);
        for (auto& x : seq) x = g.integer(0, n - 1);
        return pruefer_tree(seq, n);
      };
      const auto a = random_edges(), b = random_edges();
      const bool iso = brute_canonical(a, n) == brute_canonical(b, n);
      CHECK((canonical_form(DualTree(n, a)) == canonical_form(DualTree(n, b))) == iso);
    }
}

TEST_CASE("enumeration counts unlabeled trees") {
  // Brute force: isomorphism classes of all labeled trees via Pruefer codes.
  std::vector<int> classes;
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<std::pair<int, int>>> seen;
    if (n == 1) {
      seen.insert(std::vector<std::pair<int, int>>{});
    } else {
      std::vector<int> seq(n - 2, 0);
      while (true) {
        seen.insert(brute_canonical(pruefer_tree(seq, n), n));
        int i = 0;
        while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
        if (i == n - 2) break;
      }
    }
    classes.push_back(static_cast<int>(seen.size()));
  }
  const auto trees = enumerate_trees(9);
  std::map<int, int> by_size;
  std::set<std::string> forms;
  for (const auto& t : trees) {
    ++by_size[t.node_count()];
    CHECK(forms.insert(canonical_form(t)).second);
  }
  for (int n = 1; n <= 6; ++n) CHECK(by_size[n] == classes[n - 1]);
  // Beyond brute-force reach, the classical counts for 7, 8, 9 nodes.
  CHECK(by_size[7] == 11);
  CHECK(by_size[8] == 23);
  CHECK(by_size[9] == 47);
}

TEST_CASE("rooted plans") {
  const RootedPlan p = root_plan(path(4), 0);
  CHECK(p.root() == 0);
  CHECK(p.preorder() == std::vector<int>{0, 1, 2, 3});
  CHECK(plan_is_buildable(p, 3).diagnosis == PlanDiagnosis::Ok);

  const RootedPlan s = root_plan(star(3), 0);
  const auto chk = plan_is_buildable(s, 3);
  CHECK(chk.diagnosis == PlanDiagnosis::TooManyChildren);
  CHECK(chk.node == 0);

  const RootedPlan labeled(0, {{0, {{1, 5}}}});
  CHECK(plan_is_buildable(labeled, 3).diagnosis == PlanDiagnosis::LabelOutOfRange);
  CHECK(plan_is_buildable(labeled, 6).diagnosis == PlanDiagnosis::Ok);

  CHECK(code_of([] { RootedPlan(0, {{0, {{1, 0}, {2, 0}}}}); }) == Errc::InvalidPlan);
  CHECK(code_of([] { RootedPlan(0, {{0, {{1, {}}}}, {1, {{0, {}}}}}); }) == Errc::InvalidPlan);
}

TEST_CASE("plans for polytopes hang off an apex leaf") {
  // K_{1,3}: the center has degree 3 but becomes a node with two children.
  const auto p = plan_for_polytope(star(3), 1);
  REQUIRE(p.has_value());
  CHECK(p->root() == 0);
  CHECK(p->children(0).size() == 2);
  CHECK(plan_is_buildable(*p, 3).diagnosis == PlanDiagnosis::Ok);
  CHECK_FALSE(plan_for_polytope(DualTree(1, {}), 0).has_value());
  CHECK(code_of([] { plan_for_polytope(star(3), 0); }) == Errc::InvalidPlan);
}

TEST_CASE("property: every max-degree-3 tree has a buildable plan from any leaf") {
  for (const auto& t : enumerate_trees(9)) {
    if (t.node_count() < 2 || !decide_inscribable(t).inscribable) continue;
    for (int v = 0; v < t.node_count(); ++v) {
      if (t.degree(v) != 1) continue;
      const auto p = plan_for_polytope(t, v);
      REQUIRE(p.has_value());
      CHECK(p->size() == static_cast<std::size_t>(t.node_count() - 1));
      CHECK(plan_is_buildable(*p, 3).diagnosis == PlanDiagnosis::Ok);
    }
  }
}

TEST_CASE("property: extracted dual tree matches the stacking history") {
  Gen g(43);
  for (int d = 3; d <= 5; ++d)
    for (int trial = 0; trial < 30; ++trial) {
      const auto s = random_stacked_polytope(g, d, g.integer(1, 8));
      const auto ex = extract_dual_tree(s.facets, d);
      CHECK(canonical_form(ex.tree) == canonical_form(s.tree));
      // Simple vertices are those in exactly d facets.
      std::map<int, int> incidence;
      for (const auto& f : s.facets)
        for (int v : f) ++incidence[v];
      int simple = 0;
      for (const auto& [v, k] : incidence) simple += k == d;
      CHECK(count_simple_vertices(ex.tree) == simple);
    }
}

TEST_CASE("extraction rejects non-stacked input") {
  // The octahedron has no simple vertex.
  const std::vector<Face> octa{{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}};
  CHECK(code_of([&] { extract_dual_tree(octa, 3); }) == Errc::NotStacked);
  CHECK(code_of([] { extract_dual_tree({{0, 1}}, 3); }) == Errc::BadInput);
}
